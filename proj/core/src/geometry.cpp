#include "tstat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tstat {

void Trajectory::append(std::span<const double> p) {
  if (dim == 0) dim = static_cast<uint32_t>(p.size());
  if (p.size() != dim || dim == 0) {
    throw std::invalid_argument("trajectory: point dimension mismatch");
  }
  for (double x : p) {
    if (!std::isfinite(x)) throw std::invalid_argument("trajectory: non-finite coordinate");
  }
  coords.insert(coords.end(), p.begin(), p.end());
}

Trajectory Trajectory::from_points(uint64_t id, const std::vector<Point>& points) {
  if (points.empty()) throw std::invalid_argument("trajectory: must have at least one point");
  Trajectory t;
  t.id = id;
  for (const Point& p : points) t.append(p);
  return t;
}

namespace {

double dist2(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (size_t t = 0; t < a.size(); ++t) {
    const double d = a[t] - b[t];
    s += d * d;
  }
  return s;
}

void check_pair(const Trajectory& p, const Trajectory& q) {
  if (p.size() == 0 || q.size() == 0) {
    throw std::invalid_argument("frechet: empty trajectory");
  }
  if (p.dim != q.dim) {
    throw std::invalid_argument("frechet: dimension mismatch");
  }
}

}  // namespace

double frechet_distance(const Trajectory& p, const Trajectory& q) {
  check_pair(p, q);
  const size_t m1 = p.size(), m2 = q.size();

  // row[j] = min over traversals ending at (i, j) of the max squared pair
  // distance; the sqrt is deferred to the end.
  std::vector<double> row(m2);
  row[0] = dist2(p.point(0), q.point(0));
  for (size_t j = 1; j < m2; ++j) {
    row[j] = std::max(row[j - 1], dist2(p.point(0), q.point(j)));
  }
  for (size_t i = 1; i < m1; ++i) {
    double diag = row[0];  // value at (i-1, j-1)
    row[0] = std::max(row[0], dist2(p.point(i), q.point(0)));
    for (size_t j = 1; j < m2; ++j) {
      const double best_pred = std::min({diag, row[j - 1], row[j]});
      diag = row[j];
      row[j] = std::max(best_pred, dist2(p.point(i), q.point(j)));
    }
  }
  return std::sqrt(row[m2 - 1]);
}

bool frechet_leq(const Trajectory& p, const Trajectory& q, double r) {
  check_pair(p, q);
  if (r < 0.0) throw std::invalid_argument("frechet: threshold must be non-negative");
  const size_t m1 = p.size(), m2 = q.size();
  const double r2 = r * r;

  // Both endpoints belong to every traversal.
  if (dist2(p.point(0), q.point(0)) > r2) return false;
  if (dist2(p.point(m1 - 1), q.point(m2 - 1)) > r2) return false;

  std::vector<char> row(m2);
  row[0] = 1;
  for (size_t j = 1; j < m2; ++j) {
    row[j] = row[j - 1] && dist2(p.point(0), q.point(j)) <= r2;
  }
  for (size_t i = 1; i < m1; ++i) {
    char diag = row[0];
    row[0] = row[0] && dist2(p.point(i), q.point(0)) <= r2;
    bool any = row[0];
    for (size_t j = 1; j < m2; ++j) {
      const char reach = (diag || row[j - 1] || row[j]) &&
                         dist2(p.point(i), q.point(j)) <= r2;
      diag = row[j];
      row[j] = reach;
      any = any || reach;
    }
    if (!any) return false;
  }
  return row[m2 - 1] != 0;
}

}  // namespace tstat
