#pragma once

#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cosform::rng {

// One SplitMix64 step; mixes (seed, stream) pairs into generator seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// A deterministic random stream.  The (seed, stream) -> sequence mapping is
// fixed, so any consumer that assigns streams by index reproduces bit-equal
// results regardless of thread count or platform.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  double uniform01();  // [0, 1), 53-bit resolution
  double gaussian();   // standard normal, Box-Muller with pair caching
  Eigen::MatrixXd gaussian_matrix(int rows, int cols);  // column-major fill

 private:
  std::mt19937_64 gen_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace cosform::rng
