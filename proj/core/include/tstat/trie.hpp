#ifndef TSTAT_TRIE_HPP
#define TSTAT_TRIE_HPP

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "tstat/lsh.hpp"

namespace tstat {

// Build-time trie node. Children are kept sorted by edge symbol; leaves (and
// only leaves) carry sketch-id lists. weight is the number of ids in the
// subtree and never increases along a root-to-leaf path.
struct TrieNode {
  Symbol symbol = 0;  // edge label from the parent; unused on the root
  uint32_t level = 0;
  uint64_t weight = 0;
  std::vector<std::unique_ptr<TrieNode>> children;
  std::vector<uint32_t> ids;

  bool is_leaf() const { return children.empty(); }
};

// Per-trie node accounting.
struct TrieStats {
  uint64_t total_nodes = 0;
  uint64_t internal_nodes = 0;
  std::vector<uint64_t> internals_per_level;
  std::vector<uint64_t> leaves_per_level;

  uint64_t leaf_nodes() const { return total_nodes - internal_nodes; }
  bool operator==(const TrieStats& other) const = default;
};

// Indexes rows[i][offset, offset+len) for every row, with sketch id i.
// Identical sub-sketches share one leaf; siblings are created in ascending
// symbol order (rows are sorted first, then inserted as grouped runs).
std::unique_ptr<TrieNode> build_trie(std::span<const Sketch> rows,
                                     size_t offset, size_t len);
std::unique_ptr<TrieNode> build_trie(std::span<const Sketch> rows);

// Collapses every subtree whose root weight is <= lambda into a leaf holding
// the subtree's ids in ascending order. lambda = 0 leaves the trie unchanged.
void reduce(TrieNode& root, uint64_t lambda);

// Breadth-first node order: within a level, nodes follow (parent order, edge
// symbol); internal nodes and leaves are numbered independently from zero.
struct BfsLayout {
  std::vector<std::vector<const TrieNode*>> internals;  // [level][i]
  std::vector<std::vector<const TrieNode*>> leaves;     // [level][i]
};
BfsLayout bfs_layout(const TrieNode& root);

TrieStats compute_stats(const TrieNode& root);

}  // namespace tstat

#endif  // TSTAT_TRIE_HPP
