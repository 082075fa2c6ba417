#include "cosform/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "cosform/errors.hpp"

namespace cosform::quadrature {

namespace {

constexpr double kPi = std::numbers::pi;

struct DeNode {
  double x = 0.0, da = 0.0, db = 0.0, w = 0.0;
};

// Node at parameter u for [a, b] under t = tanh((pi/2) sinh u).  With
// q = exp(-pi |sinh u|), the distance from the node to the near endpoint is
// L q / (1 + q); tracking q directly keeps that distance accurate long after
// the subtraction b - x has lost it.
bool de_node(double a, double b, double u, DeNode& out) {
  const double len = b - a;
  const double s = std::sinh(u);
  const double q = std::exp(-kPi * std::abs(s));
  if (q < 1e-280) return false;  // closer to the endpoint than doubles resolve
  const double near = len * q / (1.0 + q);
  const double far = len / (1.0 + q);
  if (u >= 0.0) {
    out.da = far;
    out.db = near;
    out.x = b - near;
  } else {
    out.da = near;
    out.db = far;
    out.x = a + near;
  }
  out.w = len * kPi * std::cosh(u) * q / ((1.0 + q) * (1.0 + q));
  return true;
}

}  // namespace

Cplx tanh_sinh(const Integrand& f, double a, double b, double tol,
               int max_level) {
  if (!(b > a)) throw InvalidArgument("tanh_sinh: need a < b");
  if (!(tol > 0.0)) throw InvalidArgument("tanh_sinh: need tol > 0");
  // Past |u| ~ 6.8 the node weight underflows the de_node cutoff.
  const double u_max = 6.8;
  double h = 1.0;
  Cplx sum(0.0, 0.0);
  DeNode nd;
  if (de_node(a, b, 0.0, nd)) sum += nd.w * f(nd.x, nd.da, nd.db);
  for (int k = 1; k * h <= u_max; ++k) {
    if (de_node(a, b, k * h, nd)) sum += nd.w * f(nd.x, nd.da, nd.db);
    if (de_node(a, b, -k * h, nd)) sum += nd.w * f(nd.x, nd.da, nd.db);
  }
  Cplx prev = h * sum;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    for (int k = 1; k * h <= u_max; k += 2) {  // new (odd) nodes only
      if (de_node(a, b, k * h, nd)) sum += nd.w * f(nd.x, nd.da, nd.db);
      if (de_node(a, b, -k * h, nd)) sum += nd.w * f(nd.x, nd.da, nd.db);
    }
    const Cplx cur = h * sum;
    if (level >= 3 &&
        std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur)))
      return cur;
    prev = cur;
  }
  return prev;
}

void gauss_legendre(int points, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (points < 1) throw InvalidArgument("gauss_legendre: need points >= 1");
  const int n = points;
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // i-th root counted from +1 downward.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 64; ++it) {
      double pm1 = 1.0, p = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2 * k - 1) * x * p - (k - 1) * pm1) / k;
        pm1 = p;
        p = pk;
      }
      dp = n * (x * p - pm1) / (x * x - 1.0);
      const double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[n - 1 - i] = x;
    nodes[i] = -x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) nodes[n / 2] = 0.0;  // kill the -0.0 from the mirror
}

double weight_mass(int n) {
  if (n < 2) throw InvalidArgument("weight_mass: need n >= 2");
  return std::exp(0.5 * std::log(kPi) + std::lgamma(0.5 * (n - 1)) -
                  std::lgamma(0.5 * n));
}

QuadratureRule zonal_rule(int n, int points) {
  if (n < 2) throw InvalidArgument("zonal_rule: need n >= 2");
  if (points < 2) throw InvalidArgument("zonal_rule: need points >= 2");

  static std::mutex cache_mutex;
  static std::map<std::pair<int, int>, QuadratureRule> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({n, points});
    if (it != cache.end()) return it->second;
  }

  // t = cos(theta) turns the weight into sin^{n-2}(theta) d(theta), which is
  // smooth even at n = 2 where the t-form weight is endpoint-singular.
  std::vector<double> gx, gw;
  gauss_legendre(points, gx, gw);
  QuadratureRule rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  for (int i = 0; i < points; ++i) {
    const double theta = 0.5 * kPi * (gx[i] + 1.0);
    const int j = points - 1 - i;  // ascending in t = cos(theta)
    rule.nodes[j] = std::cos(theta);
    rule.weights[j] =
        0.5 * kPi * gw[i] * std::pow(std::sin(theta), double(n - 2));
  }

  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.insert({{n, points}, rule});
  return rule;
}

}  // namespace cosform::quadrature
