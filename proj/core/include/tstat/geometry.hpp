#ifndef TSTAT_GEOMETRY_HPP
#define TSTAT_GEOMETRY_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace tstat {

using Point = std::vector<double>;

// A polyline of m >= 1 points in d dimensions, stored flat (m * d doubles,
// point-major). All coordinates are finite; d is uniform per collection.
struct Trajectory {
  uint64_t id = 0;
  uint32_t dim = 0;
  std::vector<double> coords;

  size_t size() const { return dim == 0 ? 0 : coords.size() / dim; }
  std::span<const double> point(size_t i) const {
    return {coords.data() + i * dim, dim};
  }
  void append(std::span<const double> p);

  static Trajectory from_points(uint64_t id, const std::vector<Point>& points);
};

// Discrete Fréchet distance: the minimum over monotone coupled traversals of
// the maximum pairwise L2 distance. O(m1 * m2) dynamic program with row reuse.
double frechet_distance(const Trajectory& p, const Trajectory& q);

// Decision form: frechet_distance(p, q) <= r, evaluated as a reachability DP
// on squared distances so no square roots are taken.
bool frechet_leq(const Trajectory& p, const Trajectory& q, double r);

}  // namespace tstat

#endif  // TSTAT_GEOMETRY_HPP
