#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "mqmi/verify.hpp"

namespace mqmi {

inline constexpr int kTableColumnCount = 10;

/// non-negative, symmetric, additive, coarse-a, coarse-b, coarse-c,
/// M, CM, TCM, TI.
const std::array<std::string, kTableColumnCount>& table_columns();

struct TableCell {
  std::string claim;  // claimed status: "yes", "no", "pure", "-"
  Verdict verdict = Verdict::pass;
  std::string evidence;        // how the cell was backed locally
  bool verified = false;       // evidence conclusively supports the claim
  bool contradiction = false;  // evidence conclusively refutes the claim
};

struct TableRow {
  std::string quantity;
  std::array<TableCell, kTableColumnCount> cells;
};

struct EvidenceTable {
  std::vector<TableRow> rows;
  std::vector<std::string> notes;
  bool contradiction = false;
};

/// Regenerates the status matrix of the six quantities and annotates every
/// cell with local evidence: fixed-seed sweeps, constructed families, the
/// counterexample registry and bounded searches. Sweeps are evidence, not
/// proofs; cells whose claimed "no" never produced a witness here are
/// flagged as unverified rather than silently accepted.
EvidenceTable build_evidence_table(std::uint64_t seed);

std::string render_table_text(const EvidenceTable& table);
std::string render_table_csv(const EvidenceTable& table);
nlohmann::json table_to_json(const EvidenceTable& table);

}  // namespace mqmi
