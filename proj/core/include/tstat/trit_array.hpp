#ifndef TSTAT_TRIT_ARRAY_HPP
#define TSTAT_TRIT_ARRAY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace tstat {

namespace detail {

constexpr std::array<uint8_t, 5> kPow3 = {1, 3, 9, 27, 81};

// kTryteDigits[t][p] = p-th base-3 digit of tryte t.
constexpr auto make_tryte_digits() {
  std::array<std::array<uint8_t, 5>, 256> table{};
  for (int t = 0; t < 256; ++t) {
    int v = t;
    for (int p = 0; p < 5; ++p) {
      table[t][p] = static_cast<uint8_t>(v % 3);
      v /= 3;
    }
  }
  return table;
}

// kTryteCounts[t][r][c] = occurrences of trit c among the first r digits of t.
constexpr auto make_tryte_counts() {
  std::array<std::array<std::array<uint8_t, 3>, 6>, 256> table{};
  const auto digits = make_tryte_digits();
  for (int t = 0; t < 256; ++t) {
    for (int r = 1; r <= 5; ++r) {
      table[t][r] = table[t][r - 1];
      table[t][r][digits[t][r - 1]]++;
    }
  }
  return table;
}

inline constexpr auto kTryteDigits = make_tryte_digits();
inline constexpr auto kTryteCounts = make_tryte_counts();

}  // namespace detail

// Array of base-3 digits packed five to a byte (a "tryte", values 0..242).
// A partial final tryte is zero-padded; the padding is not part of size().
class TritArray {
 public:
  TritArray() = default;
  static TritArray pack(std::span<const uint8_t> trits);

  void push_back(uint8_t trit);

  uint64_t size() const { return size_; }
  uint8_t get(uint64_t i) const;

  // Occurrences of `trit` in positions [begin, end); no alignment assumed.
  uint64_t count_range(unsigned trit, uint64_t begin, uint64_t end) const;

  const std::vector<uint8_t>& trytes() const { return trytes_; }

  void save(std::ostream& os) const;
  static TritArray load(std::istream& is);

  bool operator==(const TritArray& other) const {
    return size_ == other.size_ && trytes_ == other.trytes_;
  }

 private:
  std::vector<uint8_t> trytes_;
  uint64_t size_ = 0;
};

// Two-layer Rank directory over a TritArray: absolute counters per large
// block and 16-bit relative counters per small block. Defaults keep the
// small counters within 16 bits (65550 - 50 < 2^16). Rank_0 directories are
// optional; when dropped, Rank_0 is answered as i - Rank_1 - Rank_2.
class TritRank {
 public:
  static constexpr uint64_t kDefaultLargeSpan = 65550;
  static constexpr uint64_t kDefaultSmallSpan = 50;

  TritRank() = default;
  explicit TritRank(const TritArray& a,
                    uint64_t large_span = kDefaultLargeSpan,
                    uint64_t small_span = kDefaultSmallSpan,
                    bool keep_rank0 = true);

  uint64_t rank(const TritArray& a, unsigned trit, uint64_t i) const;
  uint64_t total(unsigned trit) const { return totals_[trit]; }

  uint64_t large_span() const { return large_span_; }
  uint64_t small_span() const { return small_span_; }
  size_t large_entries(unsigned trit) const { return lb_[trit].size(); }
  size_t small_entries(unsigned trit) const { return sb_[trit].size(); }
  uint64_t large_entry(unsigned trit, size_t j) const { return lb_[trit][j]; }
  uint16_t small_entry(unsigned trit, size_t k) const { return sb_[trit][k]; }

  size_t directory_bytes() const;

  void save(std::ostream& os) const;
  static TritRank load(std::istream& is);

 private:
  uint64_t rank_directed(const TritArray& a, unsigned trit, uint64_t i) const;

  uint64_t large_span_ = kDefaultLargeSpan;
  uint64_t small_span_ = kDefaultSmallSpan;
  uint64_t size_ = 0;
  bool keep_rank0_ = true;
  std::array<std::vector<uint64_t>, 3> lb_;
  std::array<std::vector<uint16_t>, 3> sb_;
  std::array<uint64_t, 3> totals_{0, 0, 0};
};

}  // namespace tstat

#endif  // TSTAT_TRIT_ARRAY_HPP
