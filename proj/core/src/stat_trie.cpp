#include "tstat/stat_trie.hpp"

#include <stdexcept>

#include "tstat/serialize.hpp"

namespace tstat {

StatTrie encode_stat(const TrieNode& root, uint64_t sigma, uint32_t depth) {
  const BfsLayout layout = bfs_layout(root);
  if (layout.internals.size() > static_cast<size_t>(depth) + 1) {
    throw std::invalid_argument("stat trie: trie deeper than the declared depth");
  }

  StatTrie t;
  t.sigma_ = sigma;
  t.levels_.resize(depth + 1);
  for (uint32_t level = 0; level <= depth; ++level) {
    StatLevel& lv = t.levels_[level];
    BitWriter g;
    if (level < layout.internals.size()) {
      for (const TrieNode* node : layout.internals[level]) {
        uint64_t next_symbol = 0;
        for (const auto& child : node->children) {
          if (child->symbol >= sigma) {
            throw std::invalid_argument("stat trie: edge symbol out of alphabet");
          }
          if (child.get() != node->children.front().get() && child->symbol < next_symbol) {
            throw std::invalid_argument("stat trie: sibling symbols must be ascending");
          }
          for (; next_symbol < child->symbol; ++next_symbol) lv.h.push_back(0);
          lv.h.push_back(child->is_leaf() ? 2 : 1);
          ++next_symbol;
        }
        for (; next_symbol < sigma; ++next_symbol) lv.h.push_back(0);
      }
      for (const TrieNode* node : layout.leaves[level]) {
        g.push_unary(node->ids.size());
        lv.v.insert(lv.v.end(), node->ids.begin(), node->ids.end());
      }
    }
    lv.h_rank = TritRank(lv.h, TritRank::kDefaultLargeSpan,
                         TritRank::kDefaultSmallSpan, /*keep_rank0=*/false);
    lv.g = std::move(g).build();
  }
  return t;
}

ChildRef StatTrie::child(uint32_t level, uint64_t i, Symbol c) const {
  if (level >= levels_.size() - 1 || i >= internal_count(level) || c >= sigma_) {
    throw std::out_of_range("stat trie: child query out of range");
  }
  const StatLevel& lv = levels_[level];
  const uint64_t pos = i * sigma_ + c;
  switch (lv.h.get(pos)) {
    case 1:
      return {ChildRef::Kind::internal, lv.h_rank.rank(lv.h, 1, pos)};
    case 2:
      return {ChildRef::Kind::leaf, lv.h_rank.rank(lv.h, 2, pos)};
    default:
      return {ChildRef::Kind::absent, 0};
  }
}

std::span<const uint32_t> StatTrie::leaf_ids(uint32_t level, uint64_t i) const {
  if (level >= levels_.size() || i >= leaf_count(level)) {
    throw std::out_of_range("stat trie: leaf query out of range");
  }
  return leaf_slice(levels_[level], i);
}

TrieStats StatTrie::stats() const {
  TrieStats stats;
  stats.internals_per_level.resize(levels_.size());
  stats.leaves_per_level.resize(levels_.size());
  for (size_t level = 0; level < levels_.size(); ++level) {
    stats.internals_per_level[level] = internal_count(static_cast<uint32_t>(level));
    stats.leaves_per_level[level] = leaf_count(static_cast<uint32_t>(level));
    stats.internal_nodes += stats.internals_per_level[level];
    stats.total_nodes += stats.internals_per_level[level] + stats.leaves_per_level[level];
  }
  return stats;
}

size_t StatTrie::h_payload_bytes() const {
  size_t bytes = 0;
  for (const StatLevel& lv : levels_) bytes += lv.h.trytes().size();
  return bytes;
}

size_t StatTrie::h_directory_bytes() const {
  size_t bytes = 0;
  for (const StatLevel& lv : levels_) bytes += lv.h_rank.directory_bytes();
  return bytes;
}

size_t StatTrie::g_bytes() const {
  size_t bytes = 0;
  for (const StatLevel& lv : levels_) {
    bytes += lv.g.payload_bytes() + lv.g.directory_bytes();
  }
  return bytes;
}

size_t StatTrie::v_bytes() const {
  size_t bytes = 0;
  for (const StatLevel& lv : levels_) bytes += lv.v.size() * sizeof(uint32_t);
  return bytes;
}

void StatTrie::save(std::ostream& os) const {
  io::write_scalar<uint64_t>(os, sigma_);
  io::write_scalar<uint32_t>(os, static_cast<uint32_t>(levels_.size()));
  for (const StatLevel& lv : levels_) {
    lv.h.save(os);
    lv.h_rank.save(os);
    lv.g.save(os);
    io::write_vector<uint32_t>(os, lv.v);
  }
}

StatTrie StatTrie::load(std::istream& is) {
  StatTrie t;
  t.sigma_ = io::read_scalar<uint64_t>(is);
  const uint32_t levels = io::read_scalar<uint32_t>(is);
  if (t.sigma_ < 2 || levels == 0 || levels > 65) {
    throw io_error("stat trie: corrupt header");
  }
  t.levels_.resize(levels);
  for (StatLevel& lv : t.levels_) {
    lv.h = TritArray::load(is);
    lv.h_rank = TritRank::load(is);
    lv.g = BitVector::load(is);
    lv.v = io::read_vector<uint32_t>(is);
  }
  return t;
}

bool StatTrie::operator==(const StatTrie& other) const {
  if (sigma_ != other.sigma_ || levels_.size() != other.levels_.size()) return false;
  for (size_t i = 0; i < levels_.size(); ++i) {
    if (!(levels_[i].h == other.levels_[i].h) || !(levels_[i].g == other.levels_[i].g) ||
        levels_[i].v != other.levels_[i].v) {
      return false;
    }
  }
  return true;
}

std::vector<uint32_t> trie_search(const StatTrie& trie, std::span<const Symbol> query,
                                  uint32_t threshold, uint64_t* visited) {
  std::vector<uint32_t> ids;
  uint64_t count = 0;
  search_stat_trie(trie, query, threshold,
                   [&](std::span<const uint32_t> slice) {
                     ids.insert(ids.end(), slice.begin(), slice.end());
                   },
                   count);
  if (visited) *visited = count;
  return ids;
}

}  // namespace tstat
