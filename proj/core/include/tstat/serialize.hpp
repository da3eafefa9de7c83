#ifndef TSTAT_SERIALIZE_HPP
#define TSTAT_SERIALIZE_HPP

#include <bit>
#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <span>
#include <type_traits>
#include <vector>

#include "tstat/common.hpp"

// Little-endian stream helpers shared by the dataset and index file formats.

namespace tstat::io {

template <typename T>
void write_scalar(std::ostream& os, T value) {
  static_assert(std::is_arithmetic_v<T>);
  using U = std::conditional_t<sizeof(T) == 1, uint8_t,
            std::conditional_t<sizeof(T) == 2, uint16_t,
            std::conditional_t<sizeof(T) == 4, uint32_t, uint64_t>>>;
  U u;
  std::memcpy(&u, &value, sizeof(T));
  unsigned char bytes[sizeof(T)];
  for (size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xFF);
  }
  os.write(reinterpret_cast<const char*>(bytes), sizeof(T));
  if (!os) throw io_error("write failed");
}

template <typename T>
T read_scalar(std::istream& is) {
  static_assert(std::is_arithmetic_v<T>);
  using U = std::conditional_t<sizeof(T) == 1, uint8_t,
            std::conditional_t<sizeof(T) == 2, uint16_t,
            std::conditional_t<sizeof(T) == 4, uint32_t, uint64_t>>>;
  unsigned char bytes[sizeof(T)];
  is.read(reinterpret_cast<char*>(bytes), sizeof(T));
  if (!is) throw io_error("unexpected end of stream");
  U u = 0;
  for (size_t i = 0; i < sizeof(T); ++i) {
    u |= static_cast<U>(bytes[i]) << (8 * i);
  }
  T value;
  std::memcpy(&value, &u, sizeof(T));
  return value;
}

template <typename T>
void write_array(std::ostream& os, std::span<const T> values) {
  static_assert(std::is_arithmetic_v<T>);
  if constexpr (std::endian::native == std::endian::little) {
    os.write(reinterpret_cast<const char*>(values.data()),
             static_cast<std::streamsize>(values.size_bytes()));
    if (!os) throw io_error("write failed");
  } else {
    for (T v : values) write_scalar(os, v);
  }
}

template <typename T>
void read_array(std::istream& is, std::span<T> values) {
  static_assert(std::is_arithmetic_v<T>);
  if constexpr (std::endian::native == std::endian::little) {
    is.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(values.size_bytes()));
    if (!is) throw io_error("unexpected end of stream");
  } else {
    for (T& v : values) v = read_scalar<T>(is);
  }
}

template <typename T>
void write_vector(std::ostream& os, const std::vector<T>& values) {
  write_scalar<uint64_t>(os, values.size());
  write_array<T>(os, values);
}

template <typename T>
std::vector<T> read_vector(std::istream& is, uint64_t max_count = UINT64_MAX) {
  const uint64_t count = read_scalar<uint64_t>(is);
  if (count > max_count) throw io_error("corrupt stream: implausible array length");
  std::vector<T> values(count);
  read_array<T>(is, std::span<T>(values));
  return values;
}

}  // namespace tstat::io

#endif  // TSTAT_SERIALIZE_HPP
