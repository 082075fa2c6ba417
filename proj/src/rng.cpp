#include "cosform/rng.hpp"

#include <cmath>
#include <numbers>

#include "cosform/errors.hpp"

namespace cosform::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  // Two mixing rounds decouple nearby (seed, stream) pairs.
  std::uint64_t s = seed;
  const std::uint64_t a = splitmix64(s);
  s ^= stream * 0x632BE59BD9B4E019ULL + 0x9E3779B97F4A7C15ULL;
  const std::uint64_t b = splitmix64(s);
  gen_.seed(a ^ (b + 0x2545F4914F6CDD1DULL));
}

double RngStream::uniform01() {
  return double(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; 1 - u keeps the log argument in (0, 1].
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log1p(-u1));
  const double a = 2.0 * std::numbers::pi * u2;
  cached_ = r * std::sin(a);
  has_cached_ = true;
  return r * std::cos(a);
}

Eigen::MatrixXd RngStream::gaussian_matrix(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw InvalidArgument("gaussian_matrix: need rows, cols >= 1");
  Eigen::MatrixXd m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = gaussian();
  return m;
}

}  // namespace cosform::rng
