#include "tstat/lsh.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "tstat/common.hpp"

namespace tstat {

void LshParams::validate() const {
  if (length == 0 || length > 64) {
    throw std::invalid_argument("lsh: sketch length must be in [1, 64]");
  }
  if (sigma < 2 || sigma > (uint64_t{1} << 32) || !std::has_single_bit(sigma)) {
    throw std::invalid_argument("lsh: sigma must be a power of two in [2, 2^32]");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("lsh: delta must be positive and finite");
  }
  if (concat == 0) {
    throw std::invalid_argument("lsh: concatenation count must be positive");
  }
}

uint32_t LshParams::bits_per_symbol() const {
  return static_cast<uint32_t>(std::countr_zero(sigma));
}

std::vector<GridHasher> make_hashers(const LshParams& params, uint32_t dim) {
  params.validate();
  if (dim == 0) throw std::invalid_argument("lsh: dimension must be positive");

  SplitMix64 rng(params.seed);
  std::vector<GridHasher> hashers(static_cast<size_t>(params.length) * params.concat);
  for (GridHasher& h : hashers) {
    h.shift.resize(dim);
    for (uint32_t t = 0; t < dim; ++t) {
      h.shift[t] = rng.next_double() * params.delta;
    }
    h.mix_seed = rng.next_u64();
  }
  return hashers;
}

std::vector<std::vector<int64_t>> snap_curve(const GridHasher& h,
                                             const Trajectory& p, double delta) {
  if (p.size() == 0) throw std::invalid_argument("lsh: empty trajectory");
  if (h.shift.size() != p.dim) throw std::invalid_argument("lsh: hasher dimension mismatch");

  std::vector<std::vector<int64_t>> cells;
  std::vector<int64_t> cell(p.dim);
  for (size_t i = 0; i < p.size(); ++i) {
    const auto pt = p.point(i);
    for (uint32_t t = 0; t < p.dim; ++t) {
      cell[t] = static_cast<int64_t>(std::floor((pt[t] + h.shift[t]) / delta));
    }
    if (cells.empty() || cells.back() != cell) cells.push_back(cell);
  }
  return cells;
}

namespace {

constexpr uint64_t kHashMultiplier = 0x9E3779B97F4A7C15ULL;
constexpr uint64_t kGridSeparator = 0xA0761D6478BD642FULL;

}  // namespace

uint64_t absorb_cells(uint64_t h, std::span<const std::vector<int64_t>> cells) {
  for (const auto& cell : cells) {
    for (int64_t v : cell) {
      h = (h ^ mix64(static_cast<uint64_t>(v))) * kHashMultiplier;
    }
  }
  return h;
}

uint64_t absorb_grid_separator(uint64_t h) {
  return (h ^ kGridSeparator) * kHashMultiplier;
}

Symbol reduce_to_symbol(uint64_t h, uint64_t sigma) {
  return static_cast<Symbol>(mix64(h) & (sigma - 1));
}

namespace {

// Polynomial sequence hash over the flattened cell coordinates of one curve;
// folds directly while snapping so the cell vectors are never materialized.
void absorb_snapped(uint64_t& h, const GridHasher& hasher, const Trajectory& p,
                    double delta, std::vector<int64_t>& prev,
                    std::vector<int64_t>& cell) {
  bool have_prev = false;
  for (size_t i = 0; i < p.size(); ++i) {
    const auto pt = p.point(i);
    for (uint32_t t = 0; t < p.dim; ++t) {
      cell[t] = static_cast<int64_t>(std::floor((pt[t] + hasher.shift[t]) / delta));
    }
    if (have_prev && cell == prev) continue;
    for (int64_t v : cell) {
      h = (h ^ mix64(static_cast<uint64_t>(v))) * kHashMultiplier;
    }
    prev.swap(cell);
    have_prev = true;
  }
}

}  // namespace

Sketch sketch(const Trajectory& p, std::span<const GridHasher> hashers,
              const LshParams& params) {
  params.validate();
  if (p.size() == 0) throw std::invalid_argument("lsh: empty trajectory");
  const size_t expected = static_cast<size_t>(params.length) * params.concat;
  if (hashers.size() != expected) {
    throw std::invalid_argument("lsh: hasher count does not match params");
  }

  Sketch s(params.length);
  std::vector<int64_t> prev(p.dim), cell(p.dim);
  for (uint32_t j = 0; j < params.length; ++j) {
    uint64_t h = hashers[static_cast<size_t>(j) * params.concat].mix_seed;
    for (uint32_t r = 0; r < params.concat; ++r) {
      if (r > 0) h = absorb_grid_separator(h);
      absorb_snapped(h, hashers[static_cast<size_t>(j) * params.concat + r], p,
                     params.delta, prev, cell);
    }
    s[j] = reduce_to_symbol(h, params.sigma);
  }
  return s;
}

}  // namespace tstat
