#ifndef TSTAT_BENCH_HPP
#define TSTAT_BENCH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tstat/geometry.hpp"

namespace tstat {

// Per-(query, K) measurement of the Hamming-problem stage. `in_truth` is
// |I intersect GT|, which is exactly the Fréchet-verified solution count when
// the ground truth was computed at the same R.
struct QueryScore {
  double millis = 0.0;
  uint64_t candidates = 0;  // |C|
  uint64_t hamming = 0;     // |I|
  uint64_t in_truth = 0;    // |I intersect GT|
  uint64_t truth = 0;       // |GT|
  uint64_t nodes_visited = 0;

  bool has_recall() const { return truth > 0; }
  bool has_precision() const { return hamming > 0; }
  double recall() const { return static_cast<double>(in_truth) / static_cast<double>(truth); }
  double precision() const { return static_cast<double>(in_truth) / static_cast<double>(hamming); }
};

struct BenchAggregate {
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double mean_recall = 0.0;     // averaged over queries with a non-empty GT
  double mean_precision = 0.0;  // averaged over queries with a non-empty I
  size_t recall_queries = 0;
  size_t precision_queries = 0;
};

BenchAggregate aggregate_scores(std::span<const QueryScore> scores);

// Number of common elements of two ascending id lists.
uint64_t intersection_size(std::span<const uint32_t> a, std::span<const uint32_t> b);

// Fixed CSV layout; recall/precision are "nan" when undefined for a query.
std::string csv_header();
std::string csv_row(size_t query, uint32_t k, const QueryScore& score);

// Brute-force Fréchet ground truth: for each query, the ascending 0-based
// ids of collection members within distance r. O(n * m^2) per query.
std::vector<std::vector<uint32_t>> compute_groundtruth(
    std::span<const Trajectory> collection, std::span<const Trajectory> queries,
    double r, unsigned threads = 0);

// Text format: a '#' comment header carrying R, then per query one line
// `q<TAB>id,id,...` with 1-based ids (0-based in memory on both sides).
struct GroundTruth {
  double r = 0.0;
  std::vector<std::vector<uint32_t>> ids;
};
void save_groundtruth(const std::string& path, std::span<const std::vector<uint32_t>> ids,
                      double r);
GroundTruth load_groundtruth(const std::string& path);

}  // namespace tstat

#endif  // TSTAT_BENCH_HPP
