#include "tstat/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>

#include "tstat/common.hpp"
#include "tstat/parallel.hpp"

namespace tstat {

BenchAggregate aggregate_scores(std::span<const QueryScore> scores) {
  BenchAggregate agg;
  if (scores.empty()) return agg;

  std::vector<double> times;
  times.reserve(scores.size());
  double recall_sum = 0.0, precision_sum = 0.0;
  for (const QueryScore& s : scores) {
    agg.mean_ms += s.millis;
    times.push_back(s.millis);
    if (s.has_recall()) {
      recall_sum += s.recall();
      ++agg.recall_queries;
    }
    if (s.has_precision()) {
      precision_sum += s.precision();
      ++agg.precision_queries;
    }
  }
  agg.mean_ms /= static_cast<double>(scores.size());
  std::sort(times.begin(), times.end());
  agg.median_ms = times[times.size() / 2];
  if (agg.recall_queries > 0) recall_sum /= static_cast<double>(agg.recall_queries);
  if (agg.precision_queries > 0) precision_sum /= static_cast<double>(agg.precision_queries);
  agg.mean_recall = recall_sum;
  agg.mean_precision = precision_sum;
  return agg;
}

uint64_t intersection_size(std::span<const uint32_t> a, std::span<const uint32_t> b) {
  uint64_t count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::string csv_header() {
  return "query,k,time_ms,candidates,hamming,verified,truth,nodes_visited,recall,precision";
}

std::string csv_row(size_t query, uint32_t k, const QueryScore& s) {
  char buf[256];
  const double recall = s.has_recall() ? s.recall() : std::nan("");
  const double precision = s.has_precision() ? s.precision() : std::nan("");
  std::snprintf(buf, sizeof(buf), "%zu,%u,%.6f,%llu,%llu,%llu,%llu,%llu,%.6f,%.6f",
                query, k, s.millis,
                static_cast<unsigned long long>(s.candidates),
                static_cast<unsigned long long>(s.hamming),
                static_cast<unsigned long long>(s.in_truth),
                static_cast<unsigned long long>(s.truth),
                static_cast<unsigned long long>(s.nodes_visited), recall, precision);
  return buf;
}

std::vector<std::vector<uint32_t>> compute_groundtruth(
    std::span<const Trajectory> collection, std::span<const Trajectory> queries,
    double r, unsigned threads) {
  std::vector<std::vector<uint32_t>> truth(queries.size());
  parallel_for(queries.size(), threads, [&](size_t q, unsigned) {
    for (uint32_t i = 0; i < collection.size(); ++i) {
      if (frechet_leq(collection[i], queries[q], r)) {
        truth[q].push_back(i);
      }
    }
  });
  return truth;
}

void save_groundtruth(const std::string& path, std::span<const std::vector<uint32_t>> ids,
                      double r) {
  std::ofstream os(path);
  if (!os) throw io_error("groundtruth: cannot open " + path + " for writing");
  char rbuf[64];
  std::snprintf(rbuf, sizeof(rbuf), "%.17g", r);
  os << "# tstat groundtruth R=" << rbuf << " queries=" << ids.size() << "\n";
  for (size_t q = 0; q < ids.size(); ++q) {
    os << (q + 1) << '\t';
    for (size_t i = 0; i < ids[q].size(); ++i) {
      if (i > 0) os << ',';
      os << ids[q][i] + 1;  // 1-based in the file
    }
    os << '\n';
  }
  if (!os.flush()) throw io_error("groundtruth: write failed for " + path);
}

GroundTruth load_groundtruth(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw io_error("groundtruth: cannot open " + path);
  GroundTruth gt;
  gt.r = std::nan("");
  std::string line;
  size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const size_t pos = line.find("R=");
      if (pos != std::string::npos) {
        std::from_chars(line.data() + pos + 2, line.data() + line.size(), gt.r);
      }
      continue;
    }
    const size_t tab = line.find('\t');
    const size_t start = tab == std::string::npos ? line.size() : tab + 1;
    std::vector<uint32_t> ids;
    const char* p = line.data() + start;
    const char* end = line.data() + line.size();
    while (p < end) {
      uint32_t id = 0;
      const auto [ptr, ec] = std::from_chars(p, end, id);
      if (ec != std::errc() || id == 0) {
        throw io_error("groundtruth: line " + std::to_string(line_no) + ": bad id list");
      }
      ids.push_back(id - 1);
      p = ptr;
      if (p < end && *p == ',') ++p;
    }
    gt.ids.push_back(std::move(ids));
  }
  return gt;
}

}  // namespace tstat
