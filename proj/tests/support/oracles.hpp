#ifndef TSTAT_TESTS_ORACLES_HPP
#define TSTAT_TESTS_ORACLES_HPP

// Brute-force reference implementations the tests check the library against.
// Everything here is deliberately independent of the code under test: plain
// loops, no succinct structures, no tries, no bit tricks.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "tstat/geometry.hpp"
#include "tstat/lsh.hpp"

namespace tstat::testing {

inline double pair_dist(const Trajectory& p, size_t i, const Trajectory& q, size_t j) {
  double s = 0.0;
  for (uint32_t t = 0; t < p.dim; ++t) {
    const double d = p.point(i)[t] - q.point(j)[t];
    s += d * d;
  }
  return std::sqrt(s);
}

// Minimum over all legal traversals of the maximum pairwise distance,
// enumerated explicitly. Exponential; use only for short curves.
inline double frechet_by_enumeration(const Trajectory& p, const Trajectory& q) {
  const size_t m1 = p.size(), m2 = q.size();
  double best = std::numeric_limits<double>::infinity();

  struct Rec {
    const Trajectory& p;
    const Trajectory& q;
    size_t m1, m2;
    double& best;
    void walk(size_t i, size_t j, double running) {
      running = std::max(running, pair_dist(p, i, q, j));
      if (i == m1 - 1 && j == m2 - 1) {
        best = std::min(best, running);
        return;
      }
      if (i + 1 < m1) walk(i + 1, j, running);
      if (j + 1 < m2) walk(i, j + 1, running);
      if (i + 1 < m1 && j + 1 < m2) walk(i + 1, j + 1, running);
    }
  };
  Rec{p, q, m1, m2, best}.walk(0, 0, 0.0);
  return best;
}

inline uint32_t naive_hamming(const Sketch& a, const Sketch& b) {
  uint32_t d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
  return d;
}

// Positions of c in trits[0, i).
inline uint64_t naive_trit_rank(std::span<const uint8_t> trits, unsigned c, uint64_t i) {
  uint64_t count = 0;
  for (uint64_t p = 0; p < i; ++p) count += trits[p] == c ? 1 : 0;
  return count;
}

inline uint64_t naive_bit_rank(const std::vector<bool>& bits, unsigned c, uint64_t i) {
  uint64_t count = 0;
  for (uint64_t p = 0; p < i; ++p) count += bits[p] == (c != 0) ? 1 : 0;
  return count;
}

inline uint64_t naive_bit_select(const std::vector<bool>& bits, unsigned c, uint64_t i) {
  uint64_t seen = 0;
  for (uint64_t p = 0; p < bits.size(); ++p) {
    if (bits[p] == (c != 0)) {
      if (seen == i) return p;
      ++seen;
    }
  }
  return bits.size();
}

// Ids whose sub-sketch rows[id][offset, offset+len) is within `threshold`
// mismatches of the query block. Ascending.
inline std::vector<uint32_t> naive_block_ball(std::span<const Sketch> rows,
                                              size_t offset, size_t len,
                                              std::span<const Symbol> query,
                                              uint32_t threshold) {
  std::vector<uint32_t> out;
  for (uint32_t id = 0; id < rows.size(); ++id) {
    uint32_t d = 0;
    for (size_t p = 0; p < len; ++p) d += rows[id][offset + p] != query[p] ? 1 : 0;
    if (d <= threshold) out.push_back(id);
  }
  return out;
}

// Exact Hamming ball over whole sketches (the linear-scan answer set).
inline std::vector<uint32_t> linear_scan_ball(std::span<const Sketch> rows,
                                              const Sketch& query, uint32_t k) {
  std::vector<uint32_t> out;
  for (uint32_t id = 0; id < rows.size(); ++id) {
    if (naive_hamming(rows[id], query) <= k) out.push_back(id);
  }
  return out;
}

// Prefix-grouping view of a trie: node count, internal count, and the id
// list of every full-length group, built with a map instead of a trie.
struct PrefixOracle {
  uint64_t total_nodes = 0;
  uint64_t internal_nodes = 0;
  std::map<std::vector<Symbol>, std::vector<uint32_t>> leaves;
};

inline PrefixOracle prefix_oracle(std::span<const Sketch> rows, size_t offset, size_t len) {
  PrefixOracle o;
  std::map<std::vector<Symbol>, std::vector<uint32_t>> groups;
  for (uint32_t id = 0; id < rows.size(); ++id) {
    std::vector<Symbol> key(rows[id].begin() + offset, rows[id].begin() + offset + len);
    groups[key].push_back(id);
  }
  o.leaves = groups;

  std::map<std::vector<Symbol>, bool> nodes;  // prefix -> seen
  nodes[{}] = true;
  for (const auto& [key, ids] : groups) {
    for (size_t l = 1; l <= key.size(); ++l) {
      nodes[std::vector<Symbol>(key.begin(), key.begin() + l)] = true;
    }
  }
  o.total_nodes = nodes.size();
  o.internal_nodes = nodes.size() - groups.size();
  return o;
}

}  // namespace tstat::testing

#endif  // TSTAT_TESTS_ORACLES_HPP
