#ifndef TSTAT_INDEX_IO_HPP
#define TSTAT_INDEX_IO_HPP

#include <string>

#include "tstat/stat_index.hpp"

namespace tstat {

// Index container: 8-byte magic, one version byte, then the index payload.
// Everything is little-endian; loading refuses unknown magic or version.
inline constexpr char kIndexMagic[8] = {'T', 'S', 'T', 'A', 'T', 'I', 'D', 'X'};
inline constexpr uint8_t kIndexVersion = 1;

void save_index(const std::string& path, const StatIndex& index);
StatIndex load_index(const std::string& path);

}  // namespace tstat

#endif  // TSTAT_INDEX_IO_HPP
