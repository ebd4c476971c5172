#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mqmi/common.hpp"

namespace mqmi {

/// A set of disjoint nonempty blocks of party labels, kept in canonical
/// form: labels ascending within a block, blocks ordered by their smallest
/// label. "AB" (one block) and "A|B" (two blocks) are distinct objects
/// everywhere.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::string>> blocks);

  const std::vector<std::vector<std::string>>& blocks() const {
    return blocks_;
  }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  std::vector<std::string> parties() const;  // sorted union
  bool has_party(const std::string& label) const;
  bool has_block(const std::vector<std::string>& block) const;

  std::string to_string() const;  // "AB|CD|E"

  /// Parses "AB|CD|E". With `labels` given, party names are matched greedily
  /// against them (longest first); otherwise every character is one party.
  /// Duplicate labels are rejected.
  static Partition parse(const std::string& text);
  static Partition parse(const std::string& text,
                         const std::vector<std::string>& labels);

  bool operator==(const Partition& other) const {
    return blocks_ == other.blocks_;
  }
  bool operator<(const Partition& other) const {
    return blocks_ < other.blocks_;
  }

 private:
  std::vector<std::vector<std::string>> blocks_;
};

/// One coarsening step: discard a whole block, merge two or more blocks,
/// or drop a single party from a block that has at least two.
struct CoarseningMove {
  enum class Kind { discard_block, merge_blocks, drop_party };
  Kind kind = Kind::discard_block;
  std::vector<int> blocks;  // indices into the source partition's blocks()
  std::string party;        // drop_party only

  static CoarseningMove discard(int block);
  static CoarseningMove merge(std::vector<int> blocks);
  static CoarseningMove drop(int block, std::string party);

  std::string describe(const Partition& source) const;
};

/// Applies one move; the result is strictly coarser and canonical.
Partition apply_move(const Partition& p, const CoarseningMove& m);

struct CoarserWitness {
  bool coarser = false;
  std::vector<std::string> moves;  // human-readable step descriptions
};

/// Reflexive-transitive closure of the three moves. The decision is made
/// directly (every source block's surviving parties must stay inside a
/// single target block); the witness is a constructed move sequence.
CoarserWitness is_coarser(const Partition& finer, const Partition& coarser);

/// Closure restricted to discard and merge moves (no in-block drops).
bool is_coarser_ab(const Partition& finer, const Partition& coarser);

/// Single move classes: is_coarser_a = `coarser` is a sub-collection of
/// `finer`'s blocks; is_coarser_b = every block of `coarser` is a union of
/// blocks of `finer` and nothing was discarded.
bool is_coarser_a(const Partition& finer, const Partition& coarser);
bool is_coarser_b(const Partition& finer, const Partition& coarser);

/// All partitions of all nonempty subsets of `labels` (at most 6 labels).
std::vector<Partition> all_partitions(const std::vector<std::string>& labels);

/// Every partition coarser than `p`, including `p` itself.
std::vector<Partition> coarser_partitions(const Partition& p);

/// The set of partitions on which correlation must vanish when the
/// quantities of `finer` and `coarser` coincide (`finer` must be related to
/// `coarser` by discards alone, or by merges alone for the tight variant).
///
/// A candidate qualifies when
///   - each of its blocks is a nonempty subset of a distinct block of
///     `finer` (reachable by discards and in-block drops, never merges),
///   - it has at least two blocks,
///   - no block of `coarser` is partially present (some but not all of its
///     parties), and
///   - at most one block of `coarser` is completely present, and never all
///     of them.
/// This is the reading of the exclusion/partial-inclusion rule that exactly
/// reproduces the worked 17-element example and keeps the vanishing claims
/// derivable; the residual ambiguity for fragment-containing candidates is
/// resolved toward exclusion.
std::vector<Partition> xi_set(const Partition& finer, const Partition& coarser);

/// Precomputed coarser-pair table over the partitions of all nonempty
/// subsets of `labels`. `ab_pairs` are (finer, coarser) index pairs related
/// by discards/merges alone; `c_pairs` additionally need an in-block drop.
struct CoarserPairTable {
  std::vector<Partition> partitions;
  std::vector<std::pair<int, int>> ab_pairs;
  std::vector<std::pair<int, int>> c_pairs;
};
const CoarserPairTable& coarser_pair_table(
    const std::vector<std::string>& labels);

}  // namespace mqmi
