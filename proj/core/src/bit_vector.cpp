#include "tstat/bit_vector.hpp"

#include <bit>
#include <stdexcept>

#include "tstat/serialize.hpp"

namespace tstat {

namespace {

// Position of the r-th (zero-based) set bit of x; r < popcount(x).
unsigned select_in_word(uint64_t x, unsigned r) {
  unsigned pos = 0;
  for (;;) {
    const unsigned pc = std::popcount(static_cast<uint8_t>(x));
    if (r < pc) break;
    r -= pc;
    x >>= 8;
    pos += 8;
  }
  for (;;) {
    if (x & 1) {
      if (r == 0) return pos;
      --r;
    }
    x >>= 1;
    ++pos;
  }
}

}  // namespace

BitVector::BitVector(std::vector<uint64_t> words, uint64_t size)
    : words_(std::move(words)), size_(size) {
  const uint64_t needed = (size_ + 63) / 64;
  if (words_.size() < needed) throw std::invalid_argument("bit vector: word buffer too short");
  words_.resize(needed);
  if (size_ % 64 != 0 && !words_.empty()) {
    words_.back() &= (uint64_t{1} << (size_ % 64)) - 1;
  }
  build_directories();
}

BitVector BitVector::from_bits(const std::vector<bool>& bits) {
  BitWriter w;
  for (bool b : bits) w.push_back(b);
  return std::move(w).build();
}

void BitVector::build_directories() {
  const uint64_t blocks = (size_ + kBlockBits - 1) / kBlockBits;
  rank_blocks_.assign(blocks + 1, 0);
  select_hints_[0].clear();
  select_hints_[1].clear();

  uint64_t ones = 0;
  for (uint64_t b = 0; b < blocks; ++b) {
    rank_blocks_[b] = ones;
    uint64_t block_ones = 0;
    const uint64_t w_end = std::min<uint64_t>((b + 1) * kWordsPerBlock, words_.size());
    for (uint64_t w = b * kWordsPerBlock; w < w_end; ++w) {
      block_ones += std::popcount(words_[w]);
    }
    const uint64_t block_bits = std::min<uint64_t>(kBlockBits, size_ - b * kBlockBits);
    const uint64_t zeros = b * kBlockBits - ones;
    while (select_hints_[1].size() * kSelectSample < ones + block_ones &&
           select_hints_[1].size() * kSelectSample >= ones) {
      select_hints_[1].push_back(b);
    }
    while (select_hints_[0].size() * kSelectSample < zeros + (block_bits - block_ones) &&
           select_hints_[0].size() * kSelectSample >= zeros) {
      select_hints_[0].push_back(b);
    }
    ones += block_ones;
  }
  rank_blocks_[blocks] = ones;
  ones_ = ones;
}

bool BitVector::get(uint64_t i) const {
  if (i >= size_) throw std::out_of_range("bit vector: index out of range");
  return (words_[i / 64] >> (i % 64)) & 1;
}

uint64_t BitVector::count(unsigned c) const {
  return c ? ones_ : size_ - ones_;
}

uint64_t BitVector::rank(unsigned c, uint64_t i) const {
  if (c > 1) throw std::invalid_argument("bit vector: rank symbol must be 0 or 1");
  if (i > size_) throw std::out_of_range("bit vector: rank index out of range");
  uint64_t r = rank_blocks_[i / kBlockBits];
  const uint64_t w_begin = (i / kBlockBits) * kWordsPerBlock;
  for (uint64_t w = w_begin; w < i / 64; ++w) {
    r += std::popcount(words_[w]);
  }
  if (i % 64 != 0) {
    r += std::popcount(words_[i / 64] & ((uint64_t{1} << (i % 64)) - 1));
  }
  return c ? r : i - r;
}

uint64_t BitVector::rank_at_block(unsigned c, uint64_t block) const {
  const uint64_t pos = std::min(block * kBlockBits, size_);
  return c ? rank_blocks_[block] : pos - rank_blocks_[block];
}

uint64_t BitVector::select(unsigned c, uint64_t i) const {
  if (c > 1) throw std::invalid_argument("bit vector: select symbol must be 0 or 1");
  if (i >= count(c)) return size_;  // out-of-range convention

  const auto& hints = select_hints_[c];
  const uint64_t q = i / kSelectSample;
  uint64_t lo = hints[q];
  uint64_t hi = (q + 1 < hints.size()) ? hints[q + 1] : (size_ + kBlockBits - 1) / kBlockBits - 1;
  while (lo < hi) {  // last block b with rank_c(b * 512) <= i
    const uint64_t mid = (lo + hi + 1) / 2;
    if (rank_at_block(c, mid) <= i) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }

  uint64_t remaining = i - rank_at_block(c, lo);
  for (uint64_t w = lo * kWordsPerBlock;; ++w) {
    const uint64_t x = c ? words_[w] : ~words_[w];
    const unsigned pc = std::popcount(x);
    if (remaining < pc) {
      return w * 64 + select_in_word(x, static_cast<unsigned>(remaining));
    }
    remaining -= pc;
  }
}

size_t BitVector::directory_bytes() const {
  return rank_blocks_.size() * sizeof(uint64_t) +
         (select_hints_[0].size() + select_hints_[1].size()) * sizeof(uint64_t);
}

void BitVector::save(std::ostream& os) const {
  io::write_scalar<uint64_t>(os, size_);
  io::write_array<uint64_t>(os, words_);
}

BitVector BitVector::load(std::istream& is) {
  const uint64_t size = io::read_scalar<uint64_t>(is);
  std::vector<uint64_t> words((size + 63) / 64);
  io::read_array<uint64_t>(is, std::span<uint64_t>(words));
  return BitVector(std::move(words), size);
}

}  // namespace tstat
