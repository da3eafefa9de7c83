#ifndef TSTAT_STAT_INDEX_HPP
#define TSTAT_STAT_INDEX_HPP

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "tstat/geometry.hpp"
#include "tstat/lsh.hpp"
#include "tstat/stat_trie.hpp"
#include "tstat/vertical_store.hpp"

namespace tstat {

// Per-block mismatch thresholds K^1..K^B with sum max(0, K - B + 1), spread
// round-robin so values differ by at most one, larger ones first. Any sketch
// within Hamming distance K of the query then matches at least one block
// within its threshold (sum of (K^j + 1) exceeds K).
std::vector<uint32_t> assign_thresholds(uint32_t k, uint32_t blocks);

struct StatIndexConfig {
  LshParams lsh;
  uint32_t blocks = 8;
  uint64_t lambda = 0;
  // R the grid width was derived from at build time (delta = 8 * d * R);
  // NaN when delta was given directly.
  double delta_source_r = std::numeric_limits<double>::quiet_NaN();

  uint32_t block_len() const { return lsh.length / blocks; }
  void validate() const;
};

struct QueryResult {
  std::vector<uint32_t> candidates;  // C: deduplicated union, traversal order
  std::vector<uint32_t> hamming_ids; // I: exact Hamming ball, ascending
  std::vector<std::pair<uint32_t, double>> verified;  // I' with distances
  uint64_t nodes_visited = 0;
  std::vector<uint64_t> block_candidates;  // |C^j|

  bool operator==(const QueryResult& other) const = default;
};

// Reusable per-worker query state: an epoch-stamped mark table for candidate
// deduplication (no clearing between queries) and the traversal stack.
struct QueryScratch {
  std::vector<uint64_t> stamps;
  uint64_t epoch = 0;
};

struct IndexStats {
  std::vector<TrieStats> per_block;
  uint64_t total_nodes = 0;
  uint64_t internal_nodes = 0;
  size_t h_payload_bytes = 0;
  size_t h_directory_bytes = 0;
  size_t g_bytes = 0;
  size_t v_bytes = 0;
  size_t sketch_bytes = 0;

  size_t stat_bytes() const {
    return h_payload_bytes + h_directory_bytes + g_bytes + v_bytes;
  }
  size_t total_bytes() const { return stat_bytes() + sketch_bytes; }
};

struct BuildTimings {
  double sketch_seconds = 0.0;
  double stat_seconds = 0.0;
};

// B reduced tries in STAT form plus the vertically stored sketches used for
// Hamming verification. Immutable once built; query() is safe from any number
// of workers as long as each owns its QueryScratch.
class StatIndex {
 public:
  StatIndex() = default;

  static StatIndex build(std::span<const Trajectory> collection,
                         const StatIndexConfig& config, unsigned threads = 0,
                         BuildTimings* timings = nullptr);
  // Sketch-level entry point; dim = 0 marks an index that cannot sketch
  // query trajectories itself.
  static StatIndex from_sketches(std::span<const Sketch> sketches,
                                 const StatIndexConfig& config, uint32_t dim = 0,
                                 unsigned threads = 0);

  const StatIndexConfig& config() const { return config_; }
  uint32_t dim() const { return dim_; }
  size_t count() const { return store_.count(); }
  const VerticalStore& store() const { return store_; }
  const StatTrie& block_trie(uint32_t j) const { return tries_[j]; }

  Sketch sketch_of(const Trajectory& query) const;

  // Solves the Hamming distance problem: candidates from the B tries, then
  // exact verification against the stored sketches.
  QueryResult query(const Sketch& query, uint32_t k, QueryScratch& scratch) const;

  // Removes Fréchet false positives from result.hamming_ids; `collection`
  // must be the build-time collection in build order.
  void verify_frechet(QueryResult& result, const Trajectory& query, double r,
                      std::span<const Trajectory> collection) const;

  IndexStats stats() const;

  void save(std::ostream& os) const;
  static StatIndex load(std::istream& is);

 private:
  StatIndexConfig config_;
  uint32_t dim_ = 0;
  std::vector<GridHasher> hashers_;
  VerticalStore store_;
  std::vector<StatTrie> tries_;
};

}  // namespace tstat

#endif  // TSTAT_STAT_INDEX_HPP
