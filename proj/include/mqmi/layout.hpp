#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mqmi/common.hpp"

namespace mqmi {

struct Party {
  std::string label;
  int dim = 2;
};

/// Ordered list of party labels with local dimensions.
///
/// The party order fixes the tensor index convention everywhere: earlier
/// parties are more significant, i.e. a basis vector of A (x) B with local
/// indices (i, j) sits at flat index i * dim(B) + j. Subsets of parties are
/// addressed by bitmask, bit k standing for party k in layout order.
class SubsystemLayout {
 public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Party> parties);

  /// n qubits labelled A, B, C, ...
  static SubsystemLayout qubits(int n);

  int size() const { return static_cast<int>(parties_.size()); }
  const Party& party(int i) const { return parties_[i]; }
  int dim(int i) const { return parties_[i].dim; }
  const std::string& label(int i) const { return parties_[i].label; }
  const std::vector<Party>& parties() const { return parties_; }
  long total_dim() const;

  int index_of(const std::string& label) const;  // -1 when absent
  bool has(const std::string& label) const { return index_of(label) >= 0; }

  std::uint32_t full_mask() const;
  std::uint32_t mask_of(const std::vector<std::string>& labels) const;
  long dim_of(std::uint32_t mask) const;
  std::vector<std::string> labels_of(std::uint32_t mask) const;
  std::vector<std::string> labels() const;
  SubsystemLayout sublayout(std::uint32_t mask) const;

  bool operator==(const SubsystemLayout& other) const;

 private:
  std::vector<Party> parties_;
};

}  // namespace mqmi
