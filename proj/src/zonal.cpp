#include "cosform/zonal.hpp"

#include <algorithm>
#include <cmath>

#include "cosform/errors.hpp"
#include "cosform/quadrature.hpp"

namespace cosform::zonal {

double zonal_harmonic(int n, int j, double t) {
  if (n < 2 || j < 0)
    throw InvalidArgument("zonal_harmonic: need n >= 2, j >= 0");
  if (std::abs(t) > 1.0 + 1e-12)
    throw DomainError("zonal_harmonic: |t| > 1");
  t = std::clamp(t, -1.0, 1.0);
  if (j == 0) return 1.0;
  // The three-term step has the 0/0 form (2k + n - 4)/(k + n - 3) at
  // k = 1, n = 2; seeding with P_1 = t sidesteps it for every n.
  double pm2 = 1.0;
  double pm1 = t;
  for (int k = 2; k <= j; ++k) {
    const double p =
        ((2 * k + n - 4) * t * pm1 - (k - 1) * pm2) / (k + n - 3);
    pm2 = pm1;
    pm1 = p;
  }
  return pm1;
}

nlohmann::json ZonalCoefficients::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Cplx& c : coeffs) arr.push_back({c.real(), c.imag()});
  return nlohmann::json{{"n", n}, {"coeffs", arr}};
}

ZonalCoefficients ZonalCoefficients::from_json(const nlohmann::json& j) {
  ZonalCoefficients out;
  out.n = j.at("n").get<int>();
  if (out.n < 2) throw InvalidArgument("ZonalCoefficients: need n >= 2");
  for (const auto& e : j.at("coeffs")) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidArgument("ZonalCoefficients: coeffs entries must be [re, im]");
    out.coeffs.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

ZonalCoefficients project_zonal(int n, const std::function<double(double)>& f,
                                int band) {
  if (n < 2) throw InvalidArgument("project_zonal: need n >= 2");
  if (band < 0 || band > 2 * kBandLimit)
    throw InvalidArgument("project_zonal: band out of range");
  const quadrature::QuadratureRule rule = quadrature::zonal_rule(n);
  const int pts = static_cast<int>(rule.nodes.size());
  std::vector<double> fv(pts);
  for (int i = 0; i < pts; ++i) fv[i] = f(rule.nodes[i]);

  ZonalCoefficients out;
  out.n = n;
  out.coeffs.assign(band + 1, Cplx(0.0, 0.0));
  // Rolling recurrence: pm1[i] = P_k(t_i), pm2[i] = P_{k-1}(t_i).
  std::vector<double> pm2(pts, 1.0), pm1(pts), cur(pts);
  for (int i = 0; i < pts; ++i) pm1[i] = rule.nodes[i];
  for (int k = 0; k <= band; ++k) {
    const std::vector<double>* pk = nullptr;
    if (k == 0) {
      pk = &pm2;
    } else if (k == 1) {
      pk = &pm1;
    } else {
      for (int i = 0; i < pts; ++i) {
        cur[i] = ((2 * k + n - 4) * rule.nodes[i] * pm1[i] - (k - 1) * pm2[i]) /
                 (k + n - 3);
      }
      pm2.swap(pm1);
      pm1.swap(cur);
      pk = &pm1;
    }
    double num = 0.0, den = 0.0;
    for (int i = 0; i < pts; ++i) {
      num += rule.weights[i] * fv[i] * (*pk)[i];
      den += rule.weights[i] * (*pk)[i] * (*pk)[i];
    }
    out.coeffs[k] = Cplx(num / den, 0.0);
  }
  return out;
}

Cplx synthesize(const ZonalCoefficients& f, double t) {
  if (std::abs(t) > 1.0 + 1e-12) throw DomainError("synthesize: |t| > 1");
  t = std::clamp(t, -1.0, 1.0);
  const int band = f.band();
  if (band < 0) return Cplx(0.0, 0.0);
  Cplx acc = f.coeffs[0];
  if (band >= 1) acc += f.coeffs[1] * t;
  double pm2 = 1.0, pm1 = t;
  for (int k = 2; k <= band; ++k) {
    const double p =
        ((2 * k + f.n - 4) * t * pm1 - (k - 1) * pm2) / (k + f.n - 3);
    acc += f.coeffs[k] * p;
    pm2 = pm1;
    pm1 = p;
  }
  return acc;
}

}  // namespace cosform::zonal
