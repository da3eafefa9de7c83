#ifndef TSTAT_COMMON_HPP
#define TSTAT_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tstat {

// Thrown for filesystem and format failures; everything else that rejects
// bad arguments throws std::invalid_argument.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Counter-mode splitmix64. Used everywhere a reproducible stream is needed
// so that indexes built from the same seed are byte-identical across
// platforms (std::uniform_real_distribution is not).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  uint64_t state_;
};

// Stateless 64-bit avalanche (splitmix64 finalizer).
inline uint64_t mix64(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace tstat

#endif  // TSTAT_COMMON_HPP
