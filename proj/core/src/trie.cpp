#include "tstat/trie.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tstat {

namespace {

// Children of the node covering order[lo, hi) at `level` are the runs of
// equal symbols at that position; rows are already sorted lexicographically.
void insert_runs(TrieNode& node, std::span<const Sketch> rows, size_t offset,
                 size_t len, std::span<const uint32_t> order, size_t level) {
  if (level == len) {
    node.ids.assign(order.begin(), order.end());
    node.weight = order.size();
    return;
  }
  size_t lo = 0;
  while (lo < order.size()) {
    const Symbol c = rows[order[lo]][offset + level];
    size_t hi = lo + 1;
    while (hi < order.size() && rows[order[hi]][offset + level] == c) ++hi;
    auto child = std::make_unique<TrieNode>();
    child->symbol = c;
    child->level = static_cast<uint32_t>(level + 1);
    insert_runs(*child, rows, offset, len, order.subspan(lo, hi - lo), level + 1);
    node.weight += child->weight;
    node.children.push_back(std::move(child));
    lo = hi;
  }
}

}  // namespace

std::unique_ptr<TrieNode> build_trie(std::span<const Sketch> rows,
                                     size_t offset, size_t len) {
  if (rows.empty()) throw std::invalid_argument("trie: cannot build from an empty collection");
  if (len == 0) throw std::invalid_argument("trie: sub-sketch length must be positive");
  for (const Sketch& row : rows) {
    if (row.size() != rows.front().size() || row.size() < offset + len) {
      throw std::invalid_argument("trie: sub-sketch length mismatch");
    }
  }

  std::vector<uint32_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    for (size_t p = 0; p < len; ++p) {
      const Symbol ca = rows[a][offset + p], cb = rows[b][offset + p];
      if (ca != cb) return ca < cb;
    }
    return a < b;  // ties by id keep leaf id lists ascending
  });

  auto root = std::make_unique<TrieNode>();
  insert_runs(*root, rows, offset, len, order, 0);
  return root;
}

std::unique_ptr<TrieNode> build_trie(std::span<const Sketch> rows) {
  if (rows.empty()) throw std::invalid_argument("trie: cannot build from an empty collection");
  return build_trie(rows, 0, rows.front().size());
}

namespace {

void collect_ids(const TrieNode& node, std::vector<uint32_t>& out) {
  out.insert(out.end(), node.ids.begin(), node.ids.end());
  for (const auto& child : node.children) collect_ids(*child, out);
}

void reduce_rec(TrieNode& node, uint64_t lambda) {
  if (node.weight <= lambda && !node.is_leaf()) {
    std::vector<uint32_t> ids;
    ids.reserve(node.weight);
    collect_ids(node, ids);
    std::sort(ids.begin(), ids.end());
    node.ids = std::move(ids);
    node.children.clear();
    return;
  }
  for (auto& child : node.children) reduce_rec(*child, lambda);
}

}  // namespace

void reduce(TrieNode& root, uint64_t lambda) {
  if (lambda == 0) return;
  reduce_rec(root, lambda);
}

BfsLayout bfs_layout(const TrieNode& root) {
  BfsLayout layout;
  std::vector<const TrieNode*> frontier{&root};
  for (uint32_t level = 0; !frontier.empty(); ++level) {
    layout.internals.emplace_back();
    layout.leaves.emplace_back();
    std::vector<const TrieNode*> next;
    for (const TrieNode* node : frontier) {
      if (node->is_leaf()) {
        layout.leaves[level].push_back(node);
      } else {
        layout.internals[level].push_back(node);
        for (const auto& child : node->children) next.push_back(child.get());
      }
    }
    frontier = std::move(next);
  }
  return layout;
}

TrieStats compute_stats(const TrieNode& root) {
  const BfsLayout layout = bfs_layout(root);
  TrieStats stats;
  stats.internals_per_level.resize(layout.internals.size());
  stats.leaves_per_level.resize(layout.leaves.size());
  for (size_t level = 0; level < layout.internals.size(); ++level) {
    stats.internals_per_level[level] = layout.internals[level].size();
    stats.leaves_per_level[level] = layout.leaves[level].size();
    stats.internal_nodes += layout.internals[level].size();
    stats.total_nodes += layout.internals[level].size() + layout.leaves[level].size();
  }
  return stats;
}

}  // namespace tstat
