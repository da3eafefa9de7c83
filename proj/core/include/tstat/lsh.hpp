#ifndef TSTAT_LSH_HPP
#define TSTAT_LSH_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "tstat/geometry.hpp"

namespace tstat {

using Symbol = uint32_t;
using Sketch = std::vector<Symbol>;

// Parameters of the trajectory -> sketch mapping. Each of the L positions is
// an independent randomly shifted grid; the snapped cell sequence is hashed
// to a symbol in [0, sigma). k grids are concatenated per position.
struct LshParams {
  uint32_t length = 64;       // L, at most one machine word of bits per plane
  uint64_t sigma = 256;       // alphabet size, a power of two in [2, 2^32]
  double delta = 0.0;         // grid cell width, > 0
  uint32_t concat = 1;        // k
  uint64_t seed = 1;

  void validate() const;
  uint32_t bits_per_symbol() const;  // log2(sigma)
};

// One randomly shifted grid: cell(p) = floor((p + shift) / delta), plus the
// seed of the cell-sequence -> symbol hash.
struct GridHasher {
  std::vector<double> shift;  // per dimension, in [0, delta)
  uint64_t mix_seed = 0;
};

// Deterministically instantiates the L*k grids for `dim`-dimensional input;
// hashers for position j occupy [j*k, (j+1)*k).
std::vector<GridHasher> make_hashers(const LshParams& params, uint32_t dim);

// Snapped cell sequence of a curve: per-point cell vectors with consecutive
// duplicates removed. Never empty for a non-empty curve.
std::vector<std::vector<int64_t>> snap_curve(const GridHasher& h,
                                             const Trajectory& p, double delta);

// Position j of the result is the seeded sequence hash of the k cell
// sequences under hashers [j*k, (j+1)*k), reduced mod sigma.
Sketch sketch(const Trajectory& p, std::span<const GridHasher> hashers,
              const LshParams& params);

// Building blocks of the position hash, exposed so the composition
// sketch[j] == reduce(absorb(seed, snap_curve(...))) can be checked directly.
uint64_t absorb_cells(uint64_t h, std::span<const std::vector<int64_t>> cells);
uint64_t absorb_grid_separator(uint64_t h);
Symbol reduce_to_symbol(uint64_t h, uint64_t sigma);

}  // namespace tstat

#endif  // TSTAT_LSH_HPP
