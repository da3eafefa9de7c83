#ifndef TSTAT_STAT_TRIE_HPP
#define TSTAT_STAT_TRIE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "tstat/bit_vector.hpp"
#include "tstat/lsh.hpp"
#include "tstat/trie.hpp"
#include "tstat/trit_array.hpp"

namespace tstat {

// One trie level in succinct form.
//
//   h[i * sigma + c]: 0 when the i-th internal node has no child with edge
//   label c, 1 when that child is internal, 2 when it is a leaf. Child
//   indexes at the next level are recovered with Rank_1 / Rank_2 over h.
//
//   g: the leaves' id-list sizes in unary (a 1 followed by size-1 zeros),
//   concatenated in leaf order and addressed with Select_1.
//
//   v: the id lists themselves, concatenated in the same order.
struct StatLevel {
  TritArray h;
  TritRank h_rank;
  BitVector g;
  std::vector<uint32_t> v;
};

struct ChildRef {
  enum class Kind : uint8_t { absent, internal, leaf };
  Kind kind = Kind::absent;
  uint64_t index = 0;

  bool operator==(const ChildRef&) const = default;
};

// A trie frozen into per-level (h, g, v) arrays. Levels run from 0 (root) to
// depth; a reduced trie keeps its leaves at the level where the collapse
// happened, so any level can carry both internal nodes and leaves.
class StatTrie {
 public:
  StatTrie() = default;

  uint64_t sigma() const { return sigma_; }
  uint32_t depth() const { return static_cast<uint32_t>(levels_.size()) - 1; }
  const std::vector<StatLevel>& levels() const { return levels_; }

  uint64_t internal_count(uint32_t level) const {
    return levels_[level].h.size() / sigma_;
  }
  uint64_t leaf_count(uint32_t level) const {
    return levels_[level].g.count(1);
  }

  // Child of the i-th internal node at `level` along edge label c; the
  // returned index lives at level + 1.
  ChildRef child(uint32_t level, uint64_t i, Symbol c) const;

  // Ids of the i-th leaf at `level`.
  std::span<const uint32_t> leaf_ids(uint32_t level, uint64_t i) const;

  TrieStats stats() const;
  size_t h_payload_bytes() const;
  size_t h_directory_bytes() const;
  size_t g_bytes() const;
  size_t v_bytes() const;

  void save(std::ostream& os) const;
  static StatTrie load(std::istream& is);

  bool operator==(const StatTrie& other) const;

 private:
  friend StatTrie encode_stat(const TrieNode&, uint64_t, uint32_t);
  template <typename Emit>
  friend void search_stat_trie(const StatTrie&, std::span<const Symbol>, uint32_t,
                               Emit&&, uint64_t&);

  uint64_t sigma_ = 0;
  std::vector<StatLevel> levels_;
};

// Freezes a (possibly reduced) trie of depth <= `depth` built over alphabet
// `sigma`. Level count is always depth + 1 so tries of one block length share
// a shape regardless of how much reduction shortened them.
StatTrie encode_stat(const TrieNode& root, uint64_t sigma, uint32_t depth);

// Depth-first traversal with mismatch budget `threshold`: emits the id lists
// of every leaf whose path prefix differs from `query` in at most threshold
// positions. Reduced leaves sit above the full block length, so their ids are
// emitted on the strength of the prefix alone. visited counts reached nodes.
template <typename Emit>
void search_stat_trie(const StatTrie& trie, std::span<const Symbol> query,
                      uint32_t threshold, Emit&& emit, uint64_t& visited);

// Convenience form returning the candidate id set of one trie.
std::vector<uint32_t> trie_search(const StatTrie& trie, std::span<const Symbol> query,
                                  uint32_t threshold, uint64_t* visited = nullptr);

// ---- implementation ----

// Leaf id slice without re-validating the index (hot path).
inline std::span<const uint32_t> leaf_slice(const StatLevel& level, uint64_t i) {
  const uint64_t s = level.g.select(1, i);
  const uint64_t e = level.g.select(1, i + 1);  // length of g when out of range
  return {level.v.data() + s, e - s};
}

template <typename Emit>
void search_stat_trie(const StatTrie& trie, std::span<const Symbol> query,
                      uint32_t threshold, Emit&& emit, uint64_t& visited) {
  const uint64_t sigma = trie.sigma_;
  if (query.size() != trie.depth()) {
    throw std::invalid_argument("stat trie: query block length mismatch");
  }
  for (Symbol c : query) {
    if (c >= sigma) throw std::invalid_argument("stat trie: query symbol out of alphabet");
  }

  // A collapsed root is a leaf holding every id.
  if (trie.levels_[0].g.size() > 0) {
    ++visited;
    emit(trie.leaf_ids(0, 0));
    return;
  }
  if (trie.levels_[0].h.size() == 0) return;

  struct Frame {
    uint32_t level;
    uint64_t node;
    uint32_t dist;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});

  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    ++visited;
    const StatLevel& lv = trie.levels_[f.level];
    const StatLevel& next = trie.levels_[f.level + 1];
    const uint64_t base = f.node * sigma;

    if (f.dist == threshold) {
      // No mismatch budget left: only the matching edge can be taken.
      const Symbol c = query[f.level];
      const uint8_t kind = lv.h.get(base + c);
      if (kind == 1) {
        stack.push_back({f.level + 1, lv.h_rank.rank(lv.h, 1, base + c), f.dist});
      } else if (kind == 2) {
        ++visited;
        emit(leaf_slice(next, lv.h_rank.rank(lv.h, 2, base + c)));
      }
      continue;
    }

    // Enumerate all children, tracking Rank_1/Rank_2 incrementally from the
    // node's base offset; whole trytes of zeros are skipped five at a time.
    // Any child fits the budget here since f.dist < threshold.
    uint64_t r1 = lv.h_rank.rank(lv.h, 1, base);
    uint64_t r2 = lv.h_rank.rank(lv.h, 2, base);
    const auto& trytes = lv.h.trytes();
    uint64_t pos = base;
    const uint64_t end = base + sigma;
    while (pos < end) {
      if (pos % 5 == 0 && pos + 5 <= end && trytes[pos / 5] == 0) {
        pos += 5;
        continue;
      }
      const uint8_t kind = detail::kTryteDigits[trytes[pos / 5]][pos % 5];
      if (kind != 0) {
        const Symbol c = static_cast<Symbol>(pos - base);
        const uint32_t dist = f.dist + (c != query[f.level] ? 1 : 0);
        if (kind == 1) {
          stack.push_back({f.level + 1, r1, dist});
          ++r1;
        } else {
          ++visited;
          emit(leaf_slice(next, r2));
          ++r2;
        }
      }
      ++pos;
    }
  }
}

}  // namespace tstat

#endif  // TSTAT_STAT_TRIE_HPP
