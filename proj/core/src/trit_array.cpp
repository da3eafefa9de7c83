#include "tstat/trit_array.hpp"

#include <stdexcept>

#include "tstat/serialize.hpp"

namespace tstat {

using detail::kPow3;
using detail::kTryteCounts;
using detail::kTryteDigits;

TritArray TritArray::pack(std::span<const uint8_t> trits) {
  TritArray a;
  a.trytes_.reserve((trits.size() + 4) / 5);
  for (uint8_t t : trits) a.push_back(t);
  return a;
}

void TritArray::push_back(uint8_t trit) {
  if (trit > 2) throw std::invalid_argument("trit array: value must be 0, 1, or 2");
  const uint64_t p = size_ % 5;
  if (p == 0) trytes_.push_back(0);
  trytes_.back() = static_cast<uint8_t>(trytes_.back() + trit * kPow3[p]);
  ++size_;
}

uint8_t TritArray::get(uint64_t i) const {
  if (i >= size_) throw std::out_of_range("trit array: index out of range");
  return kTryteDigits[trytes_[i / 5]][i % 5];
}

uint64_t TritArray::count_range(unsigned trit, uint64_t begin, uint64_t end) const {
  if (trit > 2) throw std::invalid_argument("trit array: value must be 0, 1, or 2");
  if (begin > end || end > size_) throw std::out_of_range("trit array: bad range");
  if (begin == end) return 0;
  const uint64_t first = begin / 5;
  const uint64_t last = end / 5;
  const unsigned head = static_cast<unsigned>(begin % 5);
  const unsigned tail = static_cast<unsigned>(end % 5);
  if (first == last) {
    return kTryteCounts[trytes_[first]][tail][trit] - kTryteCounts[trytes_[first]][head][trit];
  }
  uint64_t cnt = kTryteCounts[trytes_[first]][5][trit] - kTryteCounts[trytes_[first]][head][trit];
  for (uint64_t j = first + 1; j < last; ++j) {
    cnt += kTryteCounts[trytes_[j]][5][trit];
  }
  if (tail != 0) cnt += kTryteCounts[trytes_[last]][tail][trit];
  return cnt;
}

void TritArray::save(std::ostream& os) const {
  io::write_scalar<uint64_t>(os, size_);
  io::write_array<uint8_t>(os, trytes_);
}

TritArray TritArray::load(std::istream& is) {
  TritArray a;
  a.size_ = io::read_scalar<uint64_t>(is);
  a.trytes_.resize((a.size_ + 4) / 5);
  io::read_array<uint8_t>(is, std::span<uint8_t>(a.trytes_));
  for (uint8_t t : a.trytes_) {
    if (t > 242) throw io_error("trit array: corrupt tryte value");
  }
  return a;
}

TritRank::TritRank(const TritArray& a, uint64_t large_span, uint64_t small_span,
                   bool keep_rank0)
    : large_span_(large_span),
      small_span_(small_span),
      size_(a.size()),
      keep_rank0_(keep_rank0) {
  if (small_span == 0 || large_span % small_span != 0) {
    throw std::invalid_argument("trit rank: small span must divide large span");
  }
  if (large_span - small_span > 0xFFFF) {
    throw std::invalid_argument("trit rank: small-block counters would overflow 16 bits");
  }

  const uint64_t num_small = (size_ + small_span_ - 1) / small_span_;
  const uint64_t num_large = (size_ + large_span_ - 1) / large_span_;
  for (unsigned c = keep_rank0_ ? 0 : 1; c < 3; ++c) {
    lb_[c].reserve(num_large);
    sb_[c].reserve(num_small);
  }

  std::array<uint64_t, 3> running{0, 0, 0};
  std::array<uint64_t, 3> large_base{0, 0, 0};
  for (uint64_t k = 0; k < num_small; ++k) {
    const uint64_t pos = k * small_span_;
    if (pos % large_span_ == 0) {
      large_base = running;
      for (unsigned c = keep_rank0_ ? 0 : 1; c < 3; ++c) lb_[c].push_back(running[c]);
    }
    for (unsigned c = keep_rank0_ ? 0 : 1; c < 3; ++c) {
      sb_[c].push_back(static_cast<uint16_t>(running[c] - large_base[c]));
    }
    const uint64_t block_end = std::min(pos + small_span_, size_);
    for (unsigned c = 0; c < 3; ++c) {
      running[c] += a.count_range(c, pos, block_end);
    }
  }
  totals_ = running;
}

uint64_t TritRank::rank_directed(const TritArray& a, unsigned trit, uint64_t i) const {
  const uint64_t base = lb_[trit][i / large_span_] + sb_[trit][i / small_span_];
  return base + a.count_range(trit, (i / small_span_) * small_span_, i);
}

uint64_t TritRank::rank(const TritArray& a, unsigned trit, uint64_t i) const {
  if (trit > 2) throw std::invalid_argument("trit rank: value must be 0, 1, or 2");
  if (a.size() != size_) throw std::invalid_argument("trit rank: directory built for another array");
  if (i > size_) throw std::out_of_range("trit rank: index out of range");
  if (i == size_) return totals_[trit];
  if (trit == 0 && !keep_rank0_) {
    return i - rank_directed(a, 1, i) - rank_directed(a, 2, i);
  }
  return rank_directed(a, trit, i);
}

size_t TritRank::directory_bytes() const {
  size_t bytes = 0;
  for (unsigned c = 0; c < 3; ++c) {
    bytes += lb_[c].size() * sizeof(uint64_t) + sb_[c].size() * sizeof(uint16_t);
  }
  return bytes;
}

void TritRank::save(std::ostream& os) const {
  io::write_scalar<uint64_t>(os, large_span_);
  io::write_scalar<uint64_t>(os, small_span_);
  io::write_scalar<uint64_t>(os, size_);
  io::write_scalar<uint8_t>(os, keep_rank0_ ? 1 : 0);
  for (unsigned c = 0; c < 3; ++c) io::write_scalar<uint64_t>(os, totals_[c]);
  for (unsigned c = 0; c < 3; ++c) io::write_vector<uint64_t>(os, lb_[c]);
  for (unsigned c = 0; c < 3; ++c) io::write_vector<uint16_t>(os, sb_[c]);
}

TritRank TritRank::load(std::istream& is) {
  TritRank r;
  r.large_span_ = io::read_scalar<uint64_t>(is);
  r.small_span_ = io::read_scalar<uint64_t>(is);
  r.size_ = io::read_scalar<uint64_t>(is);
  r.keep_rank0_ = io::read_scalar<uint8_t>(is) != 0;
  for (unsigned c = 0; c < 3; ++c) r.totals_[c] = io::read_scalar<uint64_t>(is);
  for (unsigned c = 0; c < 3; ++c) r.lb_[c] = io::read_vector<uint64_t>(is);
  for (unsigned c = 0; c < 3; ++c) r.sb_[c] = io::read_vector<uint16_t>(is);
  return r;
}

}  // namespace tstat
