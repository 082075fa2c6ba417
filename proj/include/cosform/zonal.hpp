#pragma once

#include <functional>
#include <vector>

#include "cosform/meromorphic.hpp"
#include "json.hpp"

namespace cosform::zonal {

// Default band limit for projections and round-trip tests.
inline constexpr int kBandLimit = 40;

// Normalized zonal harmonic of degree j on S^{n-1} as a function of
// t = <u, p>: the Gegenbauer polynomial of parameter (n-2)/2 scaled to 1 at
// t = 1.  For n = 2 this is cos(j arccos t), for n = 3 the Legendre P_j.
double zonal_harmonic(int n, int j, double t);

// Band-limited zonal function: coeffs[j] multiplies the degree-j harmonic.
struct ZonalCoefficients {
  int n = 3;
  std::vector<Cplx> coeffs;

  int band() const { return static_cast<int>(coeffs.size()) - 1; }

  // {"n": n, "coeffs": [[re, im], ...]}
  nlohmann::json to_json() const;
  static ZonalCoefficients from_json(const nlohmann::json& j);
};

// Projection of f onto degrees 0..band in L2((1-t^2)^{(n-3)/2} dt).
ZonalCoefficients project_zonal(int n, const std::function<double(double)>& f,
                                int band = kBandLimit);

Cplx synthesize(const ZonalCoefficients& f, double t);

}  // namespace cosform::zonal
