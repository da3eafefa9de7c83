#include "tstat/vertical_store.hpp"

#include <bit>
#include <stdexcept>

#include "tstat/serialize.hpp"

namespace tstat {

VerticalStore::VerticalStore(std::span<const Sketch> sketches, const LshParams& params) {
  params.validate();
  length_ = params.length;
  count_ = sketches.size();
  planes_.assign(params.bits_per_symbol(), std::vector<uint64_t>(count_, 0));
  for (size_t i = 0; i < count_; ++i) {
    const Sketch& s = sketches[i];
    check_symbols(s);
    for (uint32_t j = 0; j < length_; ++j) {
      Symbol v = s[j];
      for (uint32_t b = 0; v != 0 && b < planes_.size(); ++b, v >>= 1) {
        planes_[b][i] |= static_cast<uint64_t>(v & 1) << j;
      }
    }
  }
}

void VerticalStore::check_symbols(const Sketch& s) const {
  if (s.size() != length_) {
    throw std::invalid_argument("vertical store: sketch length mismatch");
  }
  const uint32_t bits = static_cast<uint32_t>(planes_.size());
  for (Symbol v : s) {
    if (bits < 32 && (v >> bits) != 0) {
      throw std::invalid_argument("vertical store: symbol out of alphabet");
    }
  }
}

std::vector<uint64_t> VerticalStore::encode_query(const Sketch& s) const {
  check_symbols(s);
  std::vector<uint64_t> words(planes_.size(), 0);
  for (uint32_t j = 0; j < length_; ++j) {
    Symbol v = s[j];
    for (uint32_t b = 0; v != 0 && b < words.size(); ++b, v >>= 1) {
      words[b] |= static_cast<uint64_t>(v & 1) << j;
    }
  }
  return words;
}

uint32_t VerticalStore::hamming(size_t i, std::span<const uint64_t> query_planes) const {
  if (i >= count_) throw std::out_of_range("vertical store: sketch index out of range");
  if (query_planes.size() != planes_.size()) {
    throw std::invalid_argument("vertical store: query plane count mismatch");
  }
  uint64_t bits = 0;
  for (size_t b = 0; b < planes_.size(); ++b) {
    bits |= planes_[b][i] ^ query_planes[b];
  }
  return static_cast<uint32_t>(std::popcount(bits));
}

Sketch VerticalStore::decode(size_t i) const {
  if (i >= count_) throw std::out_of_range("vertical store: sketch index out of range");
  Sketch s(length_, 0);
  for (uint32_t b = 0; b < planes_.size(); ++b) {
    const uint64_t w = planes_[b][i];
    for (uint32_t j = 0; j < length_; ++j) {
      s[j] |= static_cast<Symbol>((w >> j) & 1) << b;
    }
  }
  return s;
}

size_t VerticalStore::payload_bytes() const {
  return planes_.size() * count_ * sizeof(uint64_t);
}

void VerticalStore::save(std::ostream& os) const {
  io::write_scalar<uint32_t>(os, length_);
  io::write_scalar<uint64_t>(os, count_);
  io::write_scalar<uint32_t>(os, plane_count());
  for (const auto& plane : planes_) {
    io::write_array<uint64_t>(os, plane);
  }
}

VerticalStore VerticalStore::load(std::istream& is) {
  VerticalStore v;
  v.length_ = io::read_scalar<uint32_t>(is);
  v.count_ = io::read_scalar<uint64_t>(is);
  const uint32_t planes = io::read_scalar<uint32_t>(is);
  if (v.length_ == 0 || v.length_ > 64 || planes == 0 || planes > 32) {
    throw io_error("vertical store: corrupt header");
  }
  v.planes_.assign(planes, std::vector<uint64_t>(v.count_));
  for (auto& plane : v.planes_) {
    io::read_array<uint64_t>(is, std::span<uint64_t>(plane));
  }
  return v;
}

}  // namespace tstat
