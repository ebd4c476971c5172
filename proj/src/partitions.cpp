#include "mqmi/partitions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mqmi {

namespace {

std::string join_block(const std::vector<std::string>& block) {
  std::string out;
  for (const auto& l : block) out += l;
  return out;
}

std::set<std::string> party_set(const Partition& p) {
  std::set<std::string> s;
  for (const auto& b : p.blocks()) s.insert(b.begin(), b.end());
  return s;
}

bool subset_of(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Partition::Partition(std::vector<std::vector<std::string>> blocks)
    : blocks_(std::move(blocks)) {
  std::set<std::string> seen;
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw std::invalid_argument("partition: empty block");
    }
    std::sort(block.begin(), block.end());
    for (const auto& l : block) {
      if (l.empty()) throw std::invalid_argument("partition: empty label");
      if (!seen.insert(l).second) {
        throw std::invalid_argument("partition: duplicate party '" + l + "'");
      }
    }
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<std::string> Partition::parties() const {
  auto s = party_set(*this);
  return {s.begin(), s.end()};
}

bool Partition::has_party(const std::string& label) const {
  for (const auto& b : blocks_) {
    if (std::find(b.begin(), b.end(), label) != b.end()) return true;
  }
  return false;
}

bool Partition::has_block(const std::vector<std::string>& block) const {
  std::vector<std::string> sorted = block;
  std::sort(sorted.begin(), sorted.end());
  return std::find(blocks_.begin(), blocks_.end(), sorted) != blocks_.end();
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '|';
    out += join_block(blocks_[i]);
  }
  return out;
}

Partition Partition::parse(const std::string& text) {
  return parse(text, {});
}

Partition Partition::parse(const std::string& text,
                           const std::vector<std::string>& labels) {
  if (text.empty()) throw std::invalid_argument("partition: empty text");
  std::vector<std::string> by_length = labels;
  std::sort(by_length.begin(), by_length.end(),
            [](const auto& a, const auto& b) { return a.size() > b.size(); });

  std::vector<std::vector<std::string>> blocks;
  std::size_t pos = 0;
  std::vector<std::string> current;
  auto flush = [&] {
    blocks.push_back(current);
    current.clear();
  };
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == '|') {
      flush();
      ++pos;
      continue;
    }
    if (ch == ' ') {
      ++pos;
      continue;
    }
    if (by_length.empty()) {
      current.push_back(std::string(1, ch));
      ++pos;
      continue;
    }
    bool matched = false;
    for (const auto& l : by_length) {
      if (text.compare(pos, l.size(), l) == 0) {
        current.push_back(l);
        pos += l.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw std::invalid_argument("partition: no known label at '" +
                                  text.substr(pos) + "'");
    }
  }
  flush();
  return Partition(std::move(blocks));  // validates and canonicalizes
}

CoarseningMove CoarseningMove::discard(int block) {
  return {Kind::discard_block, {block}, ""};
}

CoarseningMove CoarseningMove::merge(std::vector<int> blocks) {
  return {Kind::merge_blocks, std::move(blocks), ""};
}

CoarseningMove CoarseningMove::drop(int block, std::string party) {
  return {Kind::drop_party, {block}, std::move(party)};
}

std::string CoarseningMove::describe(const Partition& source) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::discard_block:
      os << "discard " << join_block(source.blocks()[blocks[0]]);
      break;
    case Kind::merge_blocks: {
      os << "merge";
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        os << (i ? "," : " ") << join_block(source.blocks()[blocks[i]]);
      }
      break;
    }
    case Kind::drop_party:
      os << "drop " << party << " from " << join_block(source.blocks()[blocks[0]]);
      break;
  }
  return os.str();
}

Partition apply_move(const Partition& p, const CoarseningMove& m) {
  const auto& src = p.blocks();
  for (int b : m.blocks) {
    if (b < 0 || b >= p.block_count()) {
      throw std::invalid_argument("apply_move: block index out of range");
    }
  }
  std::vector<std::vector<std::string>> out;
  switch (m.kind) {
    case CoarseningMove::Kind::discard_block: {
      if (p.block_count() < 2) {
        throw std::invalid_argument("apply_move: cannot discard the only block");
      }
      for (int i = 0; i < p.block_count(); ++i) {
        if (i != m.blocks[0]) out.push_back(src[i]);
      }
      break;
    }
    case CoarseningMove::Kind::merge_blocks: {
      std::set<int> merged(m.blocks.begin(), m.blocks.end());
      if (merged.size() < 2 || merged.size() != m.blocks.size()) {
        throw std::invalid_argument("apply_move: merge needs >= 2 distinct blocks");
      }
      std::vector<std::string> big;
      for (int i : merged) {
        big.insert(big.end(), src[i].begin(), src[i].end());
      }
      out.push_back(std::move(big));
      for (int i = 0; i < p.block_count(); ++i) {
        if (!merged.count(i)) out.push_back(src[i]);
      }
      break;
    }
    case CoarseningMove::Kind::drop_party: {
      const auto& host = src[m.blocks[0]];
      if (host.size() < 2) {
        throw std::invalid_argument(
            "apply_move: cannot drop a party from a singleton block");
      }
      if (std::find(host.begin(), host.end(), m.party) == host.end()) {
        throw std::invalid_argument("apply_move: party '" + m.party +
                                    "' not in the block");
      }
      for (int i = 0; i < p.block_count(); ++i) {
        if (i != m.blocks[0]) {
          out.push_back(src[i]);
        } else {
          std::vector<std::string> trimmed;
          for (const auto& l : host) {
            if (l != m.party) trimmed.push_back(l);
          }
          out.push_back(std::move(trimmed));
        }
      }
      break;
    }
  }
  return Partition(std::move(out));
}

namespace {

// Core decision: every surviving source block must land inside exactly one
// target block; with `allow_drops` false, blocks must survive whole.
bool coarser_decide(const Partition& finer, const Partition& coarser,
                    bool allow_drops) {
  auto fine_parties = party_set(finer);
  auto target_parties = party_set(coarser);
  if (!subset_of(target_parties, fine_parties)) return false;

  std::map<std::string, int> target_block_of;
  for (int j = 0; j < coarser.block_count(); ++j) {
    for (const auto& l : coarser.blocks()[j]) target_block_of[l] = j;
  }
  for (const auto& block : finer.blocks()) {
    int target = -1;
    int survivors = 0;
    for (const auto& l : block) {
      auto it = target_block_of.find(l);
      if (it == target_block_of.end()) continue;
      ++survivors;
      if (target < 0) target = it->second;
      if (it->second != target) return false;  // block split across targets
    }
    if (!allow_drops && survivors != 0 &&
        survivors != static_cast<int>(block.size())) {
      return false;
    }
  }
  return true;
}

}  // namespace

CoarserWitness is_coarser(const Partition& finer, const Partition& coarser) {
  CoarserWitness w;
  w.coarser = coarser_decide(finer, coarser, /*allow_drops=*/true);
  if (!w.coarser || finer == coarser) return w;

  auto target_parties = party_set(coarser);
  Partition current = finer;
  auto record = [&](const CoarseningMove& m) {
    w.moves.push_back(m.describe(current));
    current = apply_move(current, m);
  };

  // Drop the parties that do not survive, block by block; a block losing
  // everything is discarded instead.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < current.block_count(); ++i) {
      const auto& block = current.blocks()[i];
      int survivors = 0;
      std::string removable;
      for (const auto& l : block) {
        if (target_parties.count(l)) {
          ++survivors;
        } else {
          removable = l;
        }
      }
      if (removable.empty()) continue;
      if (survivors == 0) {
        record(CoarseningMove::discard(i));
      } else {
        record(CoarseningMove::drop(i, removable));
      }
      changed = true;
      break;
    }
  }

  // Merge the survivors groupwise into the target blocks.
  for (const auto& target : coarser.blocks()) {
    std::set<std::string> target_set(target.begin(), target.end());
    std::vector<int> group;
    for (int i = 0; i < current.block_count(); ++i) {
      if (target_set.count(current.blocks()[i].front())) group.push_back(i);
    }
    if (group.size() >= 2) {
      record(CoarseningMove::merge(group));
    }
  }
  if (!(current == coarser)) {
    throw std::logic_error("is_coarser: witness construction went wrong");
  }
  return w;
}

bool is_coarser_ab(const Partition& finer, const Partition& coarser) {
  return coarser_decide(finer, coarser, /*allow_drops=*/false);
}

bool is_coarser_a(const Partition& finer, const Partition& coarser) {
  for (const auto& block : coarser.blocks()) {
    if (!finer.has_block(block)) return false;
  }
  return true;
}

bool is_coarser_b(const Partition& finer, const Partition& coarser) {
  if (party_set(finer) != party_set(coarser)) return false;
  return coarser_decide(finer, coarser, /*allow_drops=*/false);
}

namespace {

void enumerate_set_partitions(
    const std::vector<std::string>& members,
    std::vector<std::vector<std::string>>& current,
    std::vector<Partition>& out) {
  if (members.size() > static_cast<std::size_t>(kMaxPartitionParties)) {
    throw std::invalid_argument("partitions: more than 6 parties");
  }
  // Restricted-growth recursion: place members[depth] into an existing block
  // or a fresh one.
  struct Rec {
    const std::vector<std::string>& members;
    std::vector<std::vector<std::string>>& current;
    std::vector<Partition>& out;
    void operator()(std::size_t depth) {
      if (depth == members.size()) {
        out.push_back(Partition(current));
        return;
      }
      // index-based: recursion below appends to `current`
      std::size_t existing = current.size();
      for (std::size_t b = 0; b < existing; ++b) {
        current[b].push_back(members[depth]);
        (*this)(depth + 1);
        current[b].pop_back();
      }
      current.push_back({members[depth]});
      (*this)(depth + 1);
      current.pop_back();
    }
  } rec{members, current, out};
  rec(0);
}

}  // namespace

std::vector<Partition> all_partitions(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() > static_cast<std::size_t>(kMaxPartitionParties)) {
    throw std::invalid_argument("all_partitions: more than 6 labels");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("all_partitions: duplicate labels");
  }
  std::vector<Partition> out;
  int n = static_cast<int>(sorted.size());
  for (std::uint32_t subset = 1; subset < (1u << n); ++subset) {
    std::vector<std::string> members;
    for (int i = 0; i < n; ++i) {
      if (subset & (1u << i)) members.push_back(sorted[i]);
    }
    std::vector<std::vector<std::string>> current;
    enumerate_set_partitions(members, current, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> coarser_partitions(const Partition& p) {
  std::vector<Partition> out;
  for (const auto& cand : all_partitions(p.parties())) {
    if (coarser_decide(p, cand, /*allow_drops=*/true)) out.push_back(cand);
  }
  return out;
}

std::vector<Partition> xi_set(const Partition& finer,
                              const Partition& coarser) {
  if (!is_coarser_a(finer, coarser) && !is_coarser_b(finer, coarser)) {
    throw std::invalid_argument(
        "xi_set: the coarser partition must come from discards alone or "
        "merges alone");
  }

  // Candidate universe: pick, per block of `finer`, either nothing or a
  // nonempty subset of it. No merged blocks ever qualify.
  const auto& fine = finer.blocks();
  std::vector<Partition> result;
  std::vector<std::vector<std::string>> chosen;
  struct Rec {
    const std::vector<std::vector<std::string>>& fine;
    const Partition& coarser;
    std::vector<std::vector<std::string>>& chosen;
    std::vector<Partition>& result;

    void emit() {
      if (chosen.size() < 2) return;
      Partition gamma(chosen);
      // Block-of-`coarser` census: reject partial presence, allow at most
      // one complete block and never all of them.
      int complete = 0;
      for (const auto& y : coarser.blocks()) {
        int present = 0;
        for (const auto& l : y) {
          if (gamma.has_party(l)) ++present;
        }
        if (present == static_cast<int>(y.size())) {
          ++complete;
        } else if (present != 0) {
          return;  // partially present
        }
      }
      if (complete > 1 || complete == coarser.block_count()) return;
      result.push_back(std::move(gamma));
    }

    void operator()(std::size_t depth) {
      if (depth == fine.size()) {
        emit();
        return;
      }
      // absent
      (*this)(depth + 1);
      // every nonempty subset
      const auto& block = fine[depth];
      std::uint32_t count = 1u << block.size();
      for (std::uint32_t pick = 1; pick < count; ++pick) {
        std::vector<std::string> sub;
        for (std::size_t i = 0; i < block.size(); ++i) {
          if (pick & (1u << i)) sub.push_back(block[i]);
        }
        chosen.push_back(std::move(sub));
        (*this)(depth + 1);
        chosen.pop_back();
      }
    }
  } rec{fine, coarser, chosen, result};
  rec(0);

  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

const CoarserPairTable& coarser_pair_table(
    const std::vector<std::string>& labels) {
  static std::map<std::string, CoarserPairTable> cache;
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  std::string key;
  for (const auto& l : sorted) key += l + "|";
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  CoarserPairTable table;
  table.partitions = all_partitions(sorted);
  int n = static_cast<int>(table.partitions.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Partition& p = table.partitions[i];
      const Partition& q = table.partitions[j];
      if (!coarser_decide(p, q, /*allow_drops=*/true)) continue;
      if (coarser_decide(p, q, /*allow_drops=*/false)) {
        table.ab_pairs.emplace_back(i, j);
      } else {
        table.c_pairs.emplace_back(i, j);
      }
    }
  }
  return cache.emplace(std::move(key), std::move(table)).first->second;
}

}  // namespace mqmi
