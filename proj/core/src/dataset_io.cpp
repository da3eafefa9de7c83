#include "tstat/dataset_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include "tstat/serialize.hpp"

namespace tstat {

DatasetFormat parse_dataset_format(const std::string& name) {
  if (name == "tsv") return DatasetFormat::tsv;
  if (name == "binary") return DatasetFormat::binary;
  throw std::invalid_argument("dataset: unknown format '" + name + "' (expected tsv or binary)");
}

namespace {

[[noreturn]] void fail_line(size_t line_no, const std::string& why) {
  throw io_error("dataset: line " + std::to_string(line_no) + ": " + why);
}

template <typename T>
const char* parse_number(const char* begin, const char* end, T& out,
                         size_t line_no, const char* what) {
  const auto [ptr, ec] = std::from_chars(begin, end, out);
  if (ec != std::errc()) fail_line(line_no, std::string("cannot parse ") + what);
  return ptr;
}

std::vector<Trajectory> load_tsv(std::istream& is) {
  std::vector<Trajectory> collection;
  std::string line;
  size_t line_no = 0;
  uint32_t dim = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;

    const size_t tab = line.find('\t');
    if (tab == std::string::npos) fail_line(line_no, "missing tab after id");
    const char* end = line.data() + line.size();

    Trajectory t;
    parse_number(line.data(), line.data() + tab, t.id, line_no, "id");

    std::vector<double> point;
    const char* p = line.data() + tab + 1;
    while (p < end) {
      point.clear();
      for (;;) {
        double x;
        p = parse_number(p, end, x, line_no, "coordinate");
        if (!std::isfinite(x)) fail_line(line_no, "non-finite coordinate");
        point.push_back(x);
        if (p < end && *p == ',') {
          ++p;
          continue;
        }
        break;
      }
      if (dim == 0 && t.coords.empty()) {
        // first point of the first record fixes d
      } else if (point.size() != (t.dim ? t.dim : dim)) {
        fail_line(line_no, "inconsistent point dimension");
      }
      t.append(point);
      while (p < end && *p == ' ') ++p;
    }
    if (t.size() == 0) fail_line(line_no, "record has no points");
    if (dim == 0) {
      dim = t.dim;
    } else if (t.dim != dim) {
      fail_line(line_no, "dimension differs from earlier records");
    }
    collection.push_back(std::move(t));
  }
  return collection;
}

std::vector<Trajectory> load_binary(std::istream& is) {
  const uint32_t dim = io::read_scalar<uint32_t>(is);
  const uint64_t n = io::read_scalar<uint64_t>(is);
  if (dim == 0) throw io_error("dataset: header dimension is zero");

  std::vector<Trajectory> collection;
  collection.reserve(std::min<uint64_t>(n, 1u << 20));
  for (uint64_t r = 0; r < n; ++r) {
    Trajectory t;
    t.id = io::read_scalar<uint64_t>(is);
    const uint32_t m = io::read_scalar<uint32_t>(is);
    if (m == 0) throw io_error("dataset: record " + std::to_string(r) + " has no points");
    t.dim = dim;
    t.coords.resize(static_cast<size_t>(m) * dim);
    io::read_array<double>(is, std::span<double>(t.coords));
    for (double x : t.coords) {
      if (!std::isfinite(x)) {
        throw io_error("dataset: record " + std::to_string(r) + " has a non-finite coordinate");
      }
    }
    collection.push_back(std::move(t));
  }
  return collection;
}

}  // namespace

std::vector<Trajectory> load_trajectories(const std::string& path, DatasetFormat format) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw io_error("dataset: cannot open " + path);
  auto collection =
      format == DatasetFormat::tsv ? load_tsv(is) : load_binary(is);

  std::unordered_set<uint64_t> seen;
  seen.reserve(collection.size());
  for (const Trajectory& t : collection) {
    if (!seen.insert(t.id).second) {
      throw io_error("dataset: duplicate id " + std::to_string(t.id));
    }
  }
  return collection;
}

void save_trajectories_binary(const std::string& path,
                              std::span<const Trajectory> collection) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw io_error("dataset: cannot open " + path + " for writing");
  const uint32_t dim = collection.empty() ? 0 : collection.front().dim;
  io::write_scalar<uint32_t>(os, dim);
  io::write_scalar<uint64_t>(os, collection.size());
  for (const Trajectory& t : collection) {
    if (t.dim != dim) throw std::invalid_argument("dataset: mixed dimensions");
    io::write_scalar<uint64_t>(os, t.id);
    io::write_scalar<uint32_t>(os, static_cast<uint32_t>(t.size()));
    io::write_array<double>(os, t.coords);
  }
  if (!os.flush()) throw io_error("dataset: write failed for " + path);
}

}  // namespace tstat
