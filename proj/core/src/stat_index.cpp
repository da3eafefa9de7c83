#include "tstat/stat_index.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "tstat/parallel.hpp"
#include "tstat/serialize.hpp"

namespace tstat {

std::vector<uint32_t> assign_thresholds(uint32_t k, uint32_t blocks) {
  if (blocks == 0) throw std::invalid_argument("thresholds: need at least one block");
  std::vector<uint32_t> t(blocks, 0);
  if (k < blocks) return t;  // K - B + 1 <= 0
  const uint32_t total = k - blocks + 1;
  const uint32_t base = total / blocks;
  const uint32_t extra = total % blocks;
  for (uint32_t j = 0; j < blocks; ++j) {
    t[j] = base + (j < extra ? 1 : 0);
  }
  return t;
}

void StatIndexConfig::validate() const {
  lsh.validate();
  if (blocks == 0 || blocks > lsh.length || lsh.length % blocks != 0) {
    throw std::invalid_argument("index: block count must divide the sketch length");
  }
}

StatIndex StatIndex::build(std::span<const Trajectory> collection,
                           const StatIndexConfig& config, unsigned threads,
                           BuildTimings* timings) {
  config.validate();
  if (collection.empty()) throw std::invalid_argument("index: empty collection");
  const uint32_t dim = collection.front().dim;
  for (const Trajectory& t : collection) {
    if (t.dim != dim) throw std::invalid_argument("index: mixed trajectory dimensions");
    if (t.size() == 0) throw std::invalid_argument("index: empty trajectory");
  }

  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const auto hashers = make_hashers(config.lsh, dim);
  std::vector<Sketch> sketches(collection.size());
  parallel_for(collection.size(), threads, [&](size_t i, unsigned) {
    sketches[i] = sketch(collection[i], hashers, config.lsh);
  });
  const auto t1 = clock::now();

  StatIndex index = from_sketches(sketches, config, dim, threads);
  const auto t2 = clock::now();
  if (timings) {
    timings->sketch_seconds = std::chrono::duration<double>(t1 - t0).count();
    timings->stat_seconds = std::chrono::duration<double>(t2 - t1).count();
  }
  return index;
}

StatIndex StatIndex::from_sketches(std::span<const Sketch> sketches,
                                   const StatIndexConfig& config, uint32_t dim,
                                   unsigned threads) {
  config.validate();
  if (sketches.empty()) throw std::invalid_argument("index: empty collection");
  if (sketches.size() > std::numeric_limits<uint32_t>::max()) {
    throw std::invalid_argument("index: collection too large for 32-bit ids");
  }

  StatIndex index;
  index.config_ = config;
  index.dim_ = dim;
  if (dim > 0) index.hashers_ = make_hashers(config.lsh, dim);
  index.store_ = VerticalStore(sketches, config.lsh);

  const uint32_t block_len = config.block_len();
  index.tries_.resize(config.blocks);
  parallel_for(config.blocks, threads, [&](size_t j, unsigned) {
    auto root = build_trie(sketches, j * block_len, block_len);
    reduce(*root, config.lambda);
    index.tries_[j] = encode_stat(*root, config.lsh.sigma, block_len);
  });
  return index;
}

Sketch StatIndex::sketch_of(const Trajectory& query) const {
  if (dim_ == 0) {
    throw std::invalid_argument("index: built without trajectory dimension, query must be a sketch");
  }
  if (query.dim != dim_) throw std::invalid_argument("index: query dimension mismatch");
  return sketch(query, hashers_, config_.lsh);
}

QueryResult StatIndex::query(const Sketch& query, uint32_t k,
                             QueryScratch& scratch) const {
  if (query.size() != config_.lsh.length) {
    throw std::invalid_argument("index: query sketch length mismatch");
  }
  if (k > config_.lsh.length) {
    throw std::invalid_argument("index: threshold exceeds sketch length");
  }

  const size_t n = count();
  if (scratch.stamps.size() < n) scratch.stamps.resize(n, 0);
  const uint64_t epoch = ++scratch.epoch;

  QueryResult result;
  result.block_candidates.assign(config_.blocks, 0);
  const uint32_t block_len = config_.block_len();
  const auto thresholds = assign_thresholds(k, config_.blocks);
  for (uint32_t j = 0; j < config_.blocks; ++j) {
    const std::span<const Symbol> block(query.data() + j * block_len, block_len);
    search_stat_trie(
        tries_[j], block, thresholds[j],
        [&](std::span<const uint32_t> slice) {
          result.block_candidates[j] += slice.size();
          for (uint32_t id : slice) {
            if (scratch.stamps[id] != epoch) {
              scratch.stamps[id] = epoch;
              result.candidates.push_back(id);
            }
          }
        },
        result.nodes_visited);
  }

  const auto qplanes = store_.encode_query(query);
  for (uint32_t id : result.candidates) {
    if (store_.hamming(id, qplanes) <= k) {
      result.hamming_ids.push_back(id);
    }
  }
  std::sort(result.hamming_ids.begin(), result.hamming_ids.end());
  return result;
}

void StatIndex::verify_frechet(QueryResult& result, const Trajectory& query, double r,
                               std::span<const Trajectory> collection) const {
  if (collection.size() != count()) {
    throw std::invalid_argument("index: collection size does not match the index");
  }
  result.verified.clear();
  for (uint32_t id : result.hamming_ids) {
    if (frechet_leq(collection[id], query, r)) {
      result.verified.emplace_back(id, frechet_distance(collection[id], query));
    }
  }
}

IndexStats StatIndex::stats() const {
  IndexStats s;
  s.per_block.reserve(tries_.size());
  for (const StatTrie& t : tries_) {
    s.per_block.push_back(t.stats());
    s.total_nodes += s.per_block.back().total_nodes;
    s.internal_nodes += s.per_block.back().internal_nodes;
    s.h_payload_bytes += t.h_payload_bytes();
    s.h_directory_bytes += t.h_directory_bytes();
    s.g_bytes += t.g_bytes();
    s.v_bytes += t.v_bytes();
  }
  s.sketch_bytes = store_.payload_bytes();
  return s;
}

void StatIndex::save(std::ostream& os) const {
  io::write_scalar<uint32_t>(os, config_.lsh.length);
  io::write_scalar<uint64_t>(os, config_.lsh.sigma);
  io::write_scalar<double>(os, config_.lsh.delta);
  io::write_scalar<uint32_t>(os, config_.lsh.concat);
  io::write_scalar<uint64_t>(os, config_.lsh.seed);
  io::write_scalar<uint32_t>(os, config_.blocks);
  io::write_scalar<uint64_t>(os, config_.lambda);
  io::write_scalar<double>(os, config_.delta_source_r);
  io::write_scalar<uint32_t>(os, dim_);
  store_.save(os);
  for (const StatTrie& t : tries_) t.save(os);
}

StatIndex StatIndex::load(std::istream& is) {
  StatIndex index;
  index.config_.lsh.length = io::read_scalar<uint32_t>(is);
  index.config_.lsh.sigma = io::read_scalar<uint64_t>(is);
  index.config_.lsh.delta = io::read_scalar<double>(is);
  index.config_.lsh.concat = io::read_scalar<uint32_t>(is);
  index.config_.lsh.seed = io::read_scalar<uint64_t>(is);
  index.config_.blocks = io::read_scalar<uint32_t>(is);
  index.config_.lambda = io::read_scalar<uint64_t>(is);
  index.config_.delta_source_r = io::read_scalar<double>(is);
  index.dim_ = io::read_scalar<uint32_t>(is);
  index.config_.validate();
  index.store_ = VerticalStore::load(is);
  index.tries_.resize(index.config_.blocks);
  for (StatTrie& t : index.tries_) t = StatTrie::load(is);
  if (index.dim_ > 0) {
    index.hashers_ = make_hashers(index.config_.lsh, index.dim_);
  }
  return index;
}

}  // namespace tstat
