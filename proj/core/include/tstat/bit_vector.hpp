#ifndef TSTAT_BIT_VECTOR_HPP
#define TSTAT_BIT_VECTOR_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace tstat {

// Immutable bit array with constant-time Rank and Select.
//
// Rank_c(i) counts occurrences of bit c in [0, i). Select_c(i) returns the
// position of occurrence number i (occurrences numbered from zero) and the
// array length M when i is out of range. Rank uses a cumulative directory
// per 512-bit block; Select binary-searches it, narrowed by sampled hints.
class BitVector {
 public:
  BitVector() = default;
  BitVector(std::vector<uint64_t> words, uint64_t size);
  static BitVector from_bits(const std::vector<bool>& bits);

  uint64_t size() const { return size_; }
  bool get(uint64_t i) const;

  uint64_t count(unsigned c) const;
  uint64_t rank(unsigned c, uint64_t i) const;
  uint64_t select(unsigned c, uint64_t i) const;

  void save(std::ostream& os) const;
  static BitVector load(std::istream& is);

  size_t payload_bytes() const { return words_.size() * sizeof(uint64_t); }
  size_t directory_bytes() const;

  bool operator==(const BitVector& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

 private:
  static constexpr uint64_t kBlockBits = 512;
  static constexpr uint64_t kWordsPerBlock = kBlockBits / 64;
  static constexpr uint64_t kSelectSample = 512;

  void build_directories();
  uint64_t rank_at_block(unsigned c, uint64_t block) const;

  std::vector<uint64_t> words_;
  uint64_t size_ = 0;
  uint64_t ones_ = 0;
  // rank_blocks_[b] = number of 1s before block b; one trailing entry with
  // the total so block boundaries can be probed uniformly.
  std::vector<uint64_t> rank_blocks_;
  // select_hints_[c][q] = block containing occurrence q * kSelectSample of c.
  std::vector<uint64_t> select_hints_[2];
};

// Append-only builder used when the length is not known up front.
class BitWriter {
 public:
  void push_back(bool bit) {
    const uint64_t w = size_ / 64;
    if (w == words_.size()) words_.push_back(0);
    if (bit) words_[w] |= uint64_t{1} << (size_ % 64);
    ++size_;
  }
  // Unary code for a count g >= 1: a 1 followed by g-1 zeros.
  void push_unary(uint64_t g) {
    push_back(true);
    for (uint64_t i = 1; i < g; ++i) push_back(false);
  }
  uint64_t size() const { return size_; }
  BitVector build() && { return BitVector(std::move(words_), size_); }

 private:
  std::vector<uint64_t> words_;
  uint64_t size_ = 0;
};

}  // namespace tstat

#endif  // TSTAT_BIT_VECTOR_HPP
