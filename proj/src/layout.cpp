#include "mqmi/layout.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mqmi {

SubsystemLayout::SubsystemLayout(std::vector<Party> parties)
    : parties_(std::move(parties)) {
  if (parties_.empty()) {
    throw std::invalid_argument("layout: needs at least one party");
  }
  if (parties_.size() > 30) {
    throw std::invalid_argument("layout: too many parties");
  }
  std::set<std::string> seen;
  long total = 1;
  for (const auto& p : parties_) {
    if (p.label.empty()) {
      throw std::invalid_argument("layout: empty party label");
    }
    if (p.label.find('|') != std::string::npos ||
        p.label.find(':') != std::string::npos ||
        p.label.find(',') != std::string::npos) {
      throw std::invalid_argument("layout: label '" + p.label +
                                  "' contains a reserved character");
    }
    if (!seen.insert(p.label).second) {
      throw std::invalid_argument("layout: duplicate label '" + p.label + "'");
    }
    if (p.dim < 2) {
      throw std::invalid_argument("layout: party '" + p.label +
                                  "' has dimension < 2");
    }
    total *= p.dim;
    if (total > kMaxTotalDim) {
      throw std::invalid_argument("layout: total dimension exceeds the " +
                                  std::to_string(kMaxTotalDim) + " guard");
    }
  }
}

SubsystemLayout SubsystemLayout::qubits(int n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("qubits: n out of range");
  }
  std::vector<Party> parties;
  parties.reserve(n);
  for (int i = 0; i < n; ++i) {
    parties.push_back({std::string(1, static_cast<char>('A' + i)), 2});
  }
  return SubsystemLayout(std::move(parties));
}

long SubsystemLayout::total_dim() const {
  long total = 1;
  for (const auto& p : parties_) total *= p.dim;
  return total;
}

int SubsystemLayout::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i) {
    if (parties_[i].label == label) return i;
  }
  return -1;
}

std::uint32_t SubsystemLayout::full_mask() const {
  return (1u << size()) - 1u;
}

std::uint32_t SubsystemLayout::mask_of(
    const std::vector<std::string>& labels) const {
  std::uint32_t mask = 0;
  for (const auto& l : labels) {
    int i = index_of(l);
    if (i < 0) {
      throw std::invalid_argument("layout: unknown label '" + l + "'");
    }
    std::uint32_t bit = 1u << i;
    if (mask & bit) {
      throw std::invalid_argument("layout: label '" + l + "' repeated");
    }
    mask |= bit;
  }
  return mask;
}

long SubsystemLayout::dim_of(std::uint32_t mask) const {
  long d = 1;
  for (int i = 0; i < size(); ++i) {
    if (mask & (1u << i)) d *= parties_[i].dim;
  }
  return d;
}

std::vector<std::string> SubsystemLayout::labels_of(std::uint32_t mask) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (mask & (1u << i)) out.push_back(parties_[i].label);
  }
  return out;
}

std::vector<std::string> SubsystemLayout::labels() const {
  return labels_of(full_mask());
}

SubsystemLayout SubsystemLayout::sublayout(std::uint32_t mask) const {
  std::vector<Party> kept;
  for (int i = 0; i < size(); ++i) {
    if (mask & (1u << i)) kept.push_back(parties_[i]);
  }
  return SubsystemLayout(std::move(kept));
}

bool SubsystemLayout::operator==(const SubsystemLayout& other) const {
  if (size() != other.size()) return false;
  for (int i = 0; i < size(); ++i) {
    if (parties_[i].label != other.parties_[i].label ||
        parties_[i].dim != other.parties_[i].dim) {
      return false;
    }
  }
  return true;
}

}  // namespace mqmi
