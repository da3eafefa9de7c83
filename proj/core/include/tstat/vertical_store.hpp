#ifndef TSTAT_VERTICAL_STORE_HPP
#define TSTAT_VERTICAL_STORE_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "tstat/lsh.hpp"

namespace tstat {

// Sketches transposed into bit planes: plane b holds, for every sketch, one
// L-bit word whose bit j is bit b of symbol j. Hamming distance between two
// sketches is then an OR of per-plane XORs followed by one popcount.
class VerticalStore {
 public:
  VerticalStore() = default;
  VerticalStore(std::span<const Sketch> sketches, const LshParams& params);

  size_t count() const { return count_; }
  uint32_t length() const { return length_; }
  uint64_t sigma() const { return uint64_t{1} << planes_.size(); }
  uint32_t plane_count() const { return static_cast<uint32_t>(planes_.size()); }

  // Transposes one query sketch into plane words compatible with this store.
  std::vector<uint64_t> encode_query(const Sketch& s) const;

  // Hamming distance between stored sketch i and an encoded query.
  uint32_t hamming(size_t i, std::span<const uint64_t> query_planes) const;

  // Exact reconstruction of stored sketch i.
  Sketch decode(size_t i) const;

  size_t payload_bytes() const;

  void save(std::ostream& os) const;
  static VerticalStore load(std::istream& is);

  bool operator==(const VerticalStore& other) const = default;

 private:
  void check_symbols(const Sketch& s) const;

  uint32_t length_ = 0;
  size_t count_ = 0;
  std::vector<std::vector<uint64_t>> planes_;
};

}  // namespace tstat

#endif  // TSTAT_VERTICAL_STORE_HPP
