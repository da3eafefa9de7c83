#ifndef TSTAT_TESTS_SYNTHETIC_HPP
#define TSTAT_TESTS_SYNTHETIC_HPP

// Seeded generators for test data. All draws go through SplitMix64 so the
// fixtures are identical on every platform and run.

#include <cstdint>
#include <vector>

#include "tstat/common.hpp"
#include "tstat/geometry.hpp"
#include "tstat/lsh.hpp"

namespace tstat::testing {

// Random walk of `steps` points in d dimensions starting in [0, span)^d.
inline Trajectory random_walk(SplitMix64& rng, uint64_t id, uint32_t dim,
                              size_t steps, double span = 100.0, double step = 1.0) {
  Trajectory t;
  t.id = id;
  t.dim = dim;
  t.coords.reserve(steps * dim);
  std::vector<double> p(dim);
  for (uint32_t d = 0; d < dim; ++d) p[d] = rng.next_double() * span;
  for (size_t s = 0; s < steps; ++s) {
    t.coords.insert(t.coords.end(), p.begin(), p.end());
    for (uint32_t d = 0; d < dim; ++d) p[d] += (rng.next_double() - 0.5) * 2.0 * step;
  }
  return t;
}

inline std::vector<Trajectory> random_collection(uint64_t seed, size_t n, uint32_t dim,
                                                 size_t min_len, size_t max_len) {
  SplitMix64 rng(seed);
  std::vector<Trajectory> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    const size_t len = min_len + rng.next_u64() % (max_len - min_len + 1);
    out.push_back(random_walk(rng, i + 1, dim, len));
  }
  return out;
}

// `n` trajectories jittered around `centers` shared prototypes, so that many
// sketches collide and tries stay shallow.
inline std::vector<Trajectory> clustered_collection(uint64_t seed, size_t n,
                                                    size_t centers, uint32_t dim,
                                                    size_t len, double jitter = 0.05) {
  SplitMix64 rng(seed);
  std::vector<Trajectory> prototypes;
  prototypes.reserve(centers);
  for (size_t c = 0; c < centers; ++c) {
    prototypes.push_back(random_walk(rng, c, dim, len, 1000.0, 5.0));
  }
  std::vector<Trajectory> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Trajectory t = prototypes[rng.next_u64() % centers];
    t.id = i + 1;
    for (double& x : t.coords) x += (rng.next_double() - 0.5) * 2.0 * jitter;
    out.push_back(std::move(t));
  }
  return out;
}

// A copy of `base` with every coordinate nudged; useful as a near query.
inline Trajectory perturbed(SplitMix64& rng, const Trajectory& base, double amount) {
  Trajectory t = base;
  for (double& x : t.coords) x += (rng.next_double() - 0.5) * 2.0 * amount;
  return t;
}

inline Sketch random_sketch(SplitMix64& rng, uint32_t length, uint64_t sigma) {
  Sketch s(length);
  for (auto& v : s) v = static_cast<Symbol>(rng.next_u64() & (sigma - 1));
  return s;
}

inline std::vector<Sketch> random_sketches(uint64_t seed, size_t n, uint32_t length,
                                           uint64_t sigma) {
  SplitMix64 rng(seed);
  std::vector<Sketch> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) out.push_back(random_sketch(rng, length, sigma));
  return out;
}

// Sketches drawn near a few prototypes: each position is the prototype's
// symbol or, with probability `flip`, a fresh random symbol.
inline std::vector<Sketch> clustered_sketches(uint64_t seed, size_t n, size_t centers,
                                              uint32_t length, uint64_t sigma,
                                              double flip = 0.15) {
  SplitMix64 rng(seed);
  std::vector<Sketch> prototypes;
  for (size_t c = 0; c < centers; ++c) prototypes.push_back(random_sketch(rng, length, sigma));
  std::vector<Sketch> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Sketch s = prototypes[rng.next_u64() % centers];
    for (auto& v : s) {
      if (rng.next_double() < flip) v = static_cast<Symbol>(rng.next_u64() & (sigma - 1));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace tstat::testing

#endif  // TSTAT_TESTS_SYNTHETIC_HPP
