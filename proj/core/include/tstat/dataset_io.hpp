#ifndef TSTAT_DATASET_IO_HPP
#define TSTAT_DATASET_IO_HPP

#include <span>
#include <string>
#include <vector>

#include "tstat/geometry.hpp"

namespace tstat {

enum class DatasetFormat { tsv, binary };

DatasetFormat parse_dataset_format(const std::string& name);

// TSV: one record per line, `id<TAB>x1,y1[,z1...]<SPACE>x2,y2 ...`. Blank
// lines and lines starting with '#' are skipped. Binary: little-endian
// header (u32 d, u64 n), then per record (u64 id, u32 m, m*d float64).
// Malformed input is reported with the offending line or record number.
std::vector<Trajectory> load_trajectories(const std::string& path, DatasetFormat format);

void save_trajectories_binary(const std::string& path, std::span<const Trajectory> collection);

}  // namespace tstat

#endif  // TSTAT_DATASET_IO_HPP
