#include "tstat/index_io.hpp"

#include <cstring>
#include <fstream>

#include "tstat/serialize.hpp"

namespace tstat {

void save_index(const std::string& path, const StatIndex& index) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("index: cannot open " + path + " for writing");
  os.write(kIndexMagic, sizeof(kIndexMagic));
  io::write_scalar<uint8_t>(os, kIndexVersion);
  index.save(os);
  if (!os.flush()) throw io_error("index: write failed for " + path);
}

StatIndex load_index(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("index: cannot open " + path);
  char magic[sizeof(kIndexMagic)];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kIndexMagic, sizeof(magic)) != 0) {
    throw io_error("index: " + path + " is not an index file");
  }
  const uint8_t version = io::read_scalar<uint8_t>(is);
  if (version != kIndexVersion) {
    throw io_error("index: unsupported version " + std::to_string(version));
  }
  return StatIndex::load(is);
}

}  // namespace tstat
