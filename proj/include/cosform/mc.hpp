#pragma once

#include <cstdint>
#include <functional>

#include "cosform/meromorphic.hpp"
#include "cosform/rng.hpp"
#include "json.hpp"

namespace cosform::mc {

// Chunk size of the deterministic parallel reduction.  Sample i draws from
// stream (seed, i / kChunk) and chunk sums are combined in index order, so
// estimates are bit-identical for every worker count.
inline constexpr long long kChunk = 65536;

struct McEstimate {
  Cplx mean{0.0, 0.0};
  double std_err = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;

  // {"mean_re", "mean_im", "stderr", "samples", "seed"}
  nlohmann::json to_json() const;
};

struct McOptions {
  long long samples = 100000;
  std::uint64_t seed = 1;
  int threads = 0;  // 0 = hardware concurrency
};

// Mean and standard error of opt.samples draws of sample_one.
McEstimate mc_run(const std::function<Cplx(rng::RngStream&)>& sample_one,
                  const McOptions& opt);

}  // namespace cosform::mc
