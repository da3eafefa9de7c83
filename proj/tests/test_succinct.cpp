#include <doctest.h>

#include <sstream>
#include <vector>

#include "support/oracles.hpp"
#include "tstat/bit_vector.hpp"
#include "tstat/common.hpp"
#include "tstat/trit_array.hpp"

using namespace tstat;
using namespace tstat::testing;

namespace {

std::vector<uint8_t> random_trits(uint64_t seed, size_t n) {
  SplitMix64 rng(seed);
  std::vector<uint8_t> trits(n);
  for (auto& t : trits) t = static_cast<uint8_t>(rng.next_u64() % 3);
  return trits;
}

std::vector<bool> random_bits(uint64_t seed, size_t n, uint32_t density_permille = 500) {
  SplitMix64 rng(seed);
  std::vector<bool> bits(n);
  for (size_t i = 0; i < n; ++i) bits[i] = rng.next_u64() % 1000 < density_permille;
  return bits;
}

}  // namespace

TEST_CASE("tryte packing: five trits to one byte") {
  const std::vector<uint8_t> trits = {1, 2, 2, 0, 1};
  const TritArray a = TritArray::pack(trits);
  CHECK(a.size() == 5);
  REQUIRE(a.trytes().size() == 1);
  CHECK(a.trytes()[0] == 106);  // 1*1 + 2*3 + 2*9 + 0*27 + 1*81

  CHECK(a.get(0) == 1);
  CHECK(a.get(1) == 2);
  CHECK(a.get(2) == 2);
  CHECK(a.get(3) == 0);
  CHECK(a.get(4) == 1);
}

TEST_CASE("tryte packing: edge cases") {
  CHECK(TritArray::pack({}).size() == 0);
  CHECK(TritArray::pack({}).trytes().empty());

  const std::vector<uint8_t> zeros = {0, 0, 0, 0, 0};
  CHECK(TritArray::pack(zeros).trytes() == std::vector<uint8_t>{0});

  const std::vector<uint8_t> twos(7, 2);
  const TritArray a = TritArray::pack(twos);
  CHECK(a.size() == 7);
  CHECK(a.trytes().size() == 2);  // padded to a full final tryte
  CHECK(a.trytes()[0] == 242);

  CHECK_THROWS_AS(TritArray::pack(std::vector<uint8_t>{3}), std::invalid_argument);
  CHECK_THROWS_AS(a.get(7), std::out_of_range);
}

TEST_CASE("trit get matches the source sequence") {
  const auto trits = random_trits(11, 4097);
  const TritArray a = TritArray::pack(trits);
  REQUIRE(a.size() == trits.size());
  for (size_t i = 0; i < trits.size(); ++i) {
    CAPTURE(i);
    REQUIRE(a.get(i) == trits[i]);
  }
  // Storage is exactly ceil(M/5) bytes.
  CHECK(a.trytes().size() == (trits.size() + 4) / 5);
}

TEST_CASE("trit rank: paper example array") {
  const std::vector<uint8_t> trits = {0, 1, 0, 2, 1, 1, 2, 0};
  const TritArray a = TritArray::pack(trits);
  const TritRank r(a);
  CHECK(r.rank(a, 0, 3) == 2);
  CHECK(r.rank(a, 0, 0) == 0);
  CHECK(r.rank(a, 1, 0) == 0);
  CHECK(r.rank(a, 2, 0) == 0);
  CHECK(r.rank(a, 2, 8) == 2);
  CHECK(r.rank(a, 1, 8) == 3);
}

TEST_CASE("trit rank: directory entries for a uniform array") {
  const std::vector<uint8_t> twos(100, 2);
  const TritArray a = TritArray::pack(twos);
  const TritRank r(a);
  REQUIRE(r.large_entries(2) == 1);
  CHECK(r.large_entry(2, 0) == 0);
  REQUIRE(r.small_entries(2) == 2);
  CHECK(r.small_entry(2, 0) == 0);
  CHECK(r.small_entry(2, 1) == 50);
  CHECK(r.rank(a, 2, 100) == 100);
  CHECK(r.rank(a, 0, 100) == 0);
}

TEST_CASE("trit rank: worked two-layer decomposition with spans 18/6") {
  // Layout chosen so the directories decompose rank_2(33) as
  // LB_2[1] + SB_2[5] + (2s among the 3 scanned trits) = 5 + 2 + 2 = 9.
  std::vector<uint8_t> trits(36, 0);
  for (uint64_t p : {0, 3, 7, 10, 15}) trits[p] = 2;   // five 2s in [0, 18)
  for (uint64_t p : {20, 25}) trits[p] = 2;            // two more in [18, 30)
  trits[30] = 2;
  trits[32] = 2;                                       // two in the scanned [30, 33)
  trits[1] = 1;
  trits[19] = 1;
  trits[34] = 1;

  const TritArray a = TritArray::pack(trits);
  const TritRank r(a, /*large_span=*/18, /*small_span=*/6);
  CHECK(r.large_entry(2, 1) == 5);
  CHECK(r.small_entry(2, 5) == 2);
  CHECK(r.rank(a, 2, 33) == 9);
  for (uint64_t i = 0; i <= trits.size(); ++i) {
    REQUIRE(r.rank(a, 2, i) == naive_trit_rank(trits, 2, i));
  }
}

TEST_CASE("trit rank: empty array") {
  const TritArray a;
  const TritRank r(a);
  CHECK(r.large_entries(1) == 0);
  CHECK(r.small_entries(1) == 0);
  CHECK(r.rank(a, 0, 0) == 0);
  CHECK(r.rank(a, 2, 0) == 0);
  CHECK_THROWS_AS(r.rank(a, 1, 1), std::out_of_range);
}

TEST_CASE("trit rank: invalid block sizes") {
  const TritArray a = TritArray::pack(random_trits(3, 100));
  CHECK_THROWS_AS(TritRank(a, 18, 5), std::invalid_argument);       // 5 does not divide 18
  CHECK_THROWS_AS(TritRank(a, 18, 0), std::invalid_argument);
  CHECK_THROWS_AS(TritRank(a, 70000, 10), std::invalid_argument);   // 16-bit overflow
}

TEST_CASE("trit rank matches naive counting on random arrays") {
  for (const size_t n : {1u, 4u, 5u, 49u, 50u, 51u, 65549u, 65550u, 65551u, 200001u}) {
    const auto trits = random_trits(1000 + n, n);
    const TritArray a = TritArray::pack(trits);
    const TritRank with0(a);
    const TritRank without0(a, TritRank::kDefaultLargeSpan, TritRank::kDefaultSmallSpan, false);

    SplitMix64 rng(n);
    for (int probe = 0; probe < 300; ++probe) {
      const uint64_t i = rng.next_u64() % (n + 1);
      uint64_t sum = 0;
      for (unsigned c = 0; c < 3; ++c) {
        const uint64_t expect = naive_trit_rank(trits, c, i);
        CAPTURE(n);
        CAPTURE(i);
        CAPTURE(c);
        REQUIRE(with0.rank(a, c, i) == expect);
        REQUIRE(without0.rank(a, c, i) == expect);
        sum += expect;
      }
      REQUIRE(sum == i);
    }
  }
}

TEST_CASE("trit rank: directory space with default spans") {
  const size_t m = 1'000'000;
  const TritArray a = TritArray::pack(random_trits(7, m));
  CHECK(a.trytes().size() == (m + 4) / 5);

  const TritRank r(a);
  const size_t per_symbol_bits =
      8 * (r.large_entries(1) * sizeof(uint64_t) + r.small_entries(1) * sizeof(uint16_t));
  CHECK(per_symbol_bits <= m * 0.33);
  CHECK(8 * r.directory_bytes() <= m * 0.97);

  const TritRank no0(a, TritRank::kDefaultLargeSpan, TritRank::kDefaultSmallSpan, false);
  CHECK(8 * no0.directory_bytes() <= 2 * m * 0.33);
}

TEST_CASE("trit structures round-trip through streams") {
  const auto trits = random_trits(21, 12345);
  const TritArray a = TritArray::pack(trits);
  const TritRank r(a, TritRank::kDefaultLargeSpan, TritRank::kDefaultSmallSpan, false);

  std::stringstream ss;
  a.save(ss);
  r.save(ss);
  const TritArray a2 = TritArray::load(ss);
  const TritRank r2 = TritRank::load(ss);
  CHECK(a2 == a);
  for (uint64_t i : {0ull, 1ull, 617ull, 12345ull}) {
    for (unsigned c = 0; c < 3; ++c) {
      REQUIRE(r2.rank(a2, c, i) == r.rank(a, c, i));
    }
  }
}

TEST_CASE("bit vector: presence-of-2 example") {
  // The 2s of (0,1,0,2,1,1,2,0) as a bit mask; occurrence numbering is
  // zero-based, so occurrence 1 is the second 2, at position 6.
  const BitVector b = BitVector::from_bits({0, 0, 0, 1, 0, 0, 1, 0});
  CHECK(b.select(1, 0) == 3);
  CHECK(b.select(1, 1) == 6);
  CHECK(b.select(1, 2) == 8);  // out of range -> M
  CHECK(b.rank(1, 8) == 2);
  CHECK(b.rank(0, 8) == 6);
}

TEST_CASE("bit vector: select on an all-zero vector returns M") {
  const BitVector b = BitVector::from_bits(std::vector<bool>(77, false));
  for (uint64_t i : {0ull, 1ull, 76ull, 1000ull}) CHECK(b.select(1, i) == 77);
  CHECK(b.select(0, 76) == 76);
  CHECK(b.select(0, 77) == 77);
}

TEST_CASE("bit vector: rank and select match naive scans") {
  for (const size_t n : {0u, 1u, 63u, 64u, 65u, 511u, 512u, 513u, 100000u}) {
    for (const uint32_t density : {5u, 500u, 995u}) {
      const auto bits = random_bits(n * 1000 + density, n, density);
      const BitVector b = BitVector::from_bits(bits);
      REQUIRE(b.size() == n);

      SplitMix64 rng(n + density);
      for (int probe = 0; probe < 200; ++probe) {
        const uint64_t i = rng.next_u64() % (n + 1);
        for (unsigned c = 0; c < 2; ++c) {
          CAPTURE(n);
          CAPTURE(i);
          CAPTURE(c);
          REQUIRE(b.rank(c, i) == naive_bit_rank(bits, c, i));
        }
        const uint64_t occ = rng.next_u64() % (n + 2);
        for (unsigned c = 0; c < 2; ++c) {
          REQUIRE(b.select(c, occ) == naive_bit_select(bits, c, occ));
        }
      }
      REQUIRE(b.rank(1, n) + b.rank(0, n) == n);
    }
  }
}

TEST_CASE("bit vector: select inverts rank exactly at set positions") {
  const auto bits = random_bits(99, 5000, 300);
  const BitVector b = BitVector::from_bits(bits);
  SplitMix64 rng(4);
  for (int probe = 0; probe < 2000; ++probe) {
    const uint64_t p = rng.next_u64() % bits.size();
    const unsigned c = bits[p] ? 1 : 0;
    REQUIRE(b.select(c, b.rank(c, p)) == p);
    // and the opposite symbol's inversion does not land on p
    REQUIRE(b.select(1 - c, b.rank(1 - c, p)) != p);
  }
}

TEST_CASE("bit vector round-trips through streams") {
  const auto bits = random_bits(31, 4099, 250);
  const BitVector b = BitVector::from_bits(bits);
  std::stringstream ss;
  b.save(ss);
  const BitVector b2 = BitVector::load(ss);
  CHECK(b2 == b);
  CHECK(b2.rank(1, b2.size()) == b.rank(1, b.size()));
}
