#pragma once

#include <functional>
#include <vector>

#include "cosform/errors.hpp"
#include "cosform/meromorphic.hpp"

// Gamma-factor machinery shared by every transform in the library: the
// classical complex log-gamma, the gamma function of a matrix cone of rank m
//
//   Gamma_m(a) = pi^{m(m-1)/4} prod_{j=0}^{m-1} Gamma(a - j/2),
//
// its vector-argument extension, the sphere/Grassmann normalization
// constants, and the composition constant zeta(lambda).  All ratios are
// evaluated in log space with explicit pole bookkeeping.

namespace cosform::specfun {

// Everything within this distance of a gamma pole counts as the pole.
inline constexpr double kPoleTol = 1e-9;

// True when z lies within kPoleTol of a non-positive integer.
bool is_gamma_pole(Cplx z);

// Principal-branch log Gamma(z); Lanczos on Re z >= 0.5, reflection below.
// Throws PoleError at (or within kPoleTol of) non-positive integers.
Cplx log_gamma(Cplx z);

// Product of gamma factors  const * prod Gamma(num_i) / prod Gamma(den_j),
// accumulated symbolically and evaluated once.  eval() cancels bit-identical
// numerator/denominator arguments first, then counts the remaining poles:
// more upstairs than downstairs gives a pole, fewer gives an exact zero, and
// a tie with at least one pole gives an indeterminate collision marker.
class GammaProduct {
 public:
  void mul_gamma(Cplx arg) { num_.push_back(arg); }
  void div_gamma(Cplx arg) { den_.push_back(arg); }
  // Multiply by a finite nonzero constant.
  void mul(Cplx c);
  // Multiply by pi^e.
  void mul_pi_power(double e);

  MeromorphicValue eval() const;

 private:
  std::vector<Cplx> num_, den_;
  Cplx log_const_{0.0, 0.0};
  double sign_ = 1.0;
};

// Evaluate f at z; when the result is an indeterminate collision, replace it
// by the symmetric two-point limit (f(z+eps) + f(z-eps))/2 and flag it.
MeromorphicValue resolve_removable(const std::function<MeromorphicValue(Cplx)>& f,
                                   Cplx z, double eps = 1e-6);

// Gamma_m(alpha).  Pole order equals the number of pole factors.
MeromorphicValue siegel_gamma(int m, Cplx alpha);

// Vector-argument gamma: pi^{m(m-1)/4} prod_{j=1}^{m} Gamma(lam_j - (j-1)/2).
MeromorphicValue gamma_omega(int m, const VectorExponent& lam);
MeromorphicValue gamma_omega(int m, Cplx scalar);  // broadcasts

// Sphere normalization  gamma_n(lambda) = sqrt(pi) Gamma(-lambda/2) /
// (Gamma(n/2) Gamma((1+lambda)/2)).
MeromorphicValue gamma_sphere_norm(int n, Cplx lambda);

// Grassmann normalization
//   [Gamma_m(m/2)/Gamma_m(n/2)] * [Gamma_m(-lambda/2)/Gamma_m((lambda+k)/2)].
// Not defined on lambda + m = 1, 2, ...; collisions there are reported as
// poles, never limit-resolved.
MeromorphicValue gamma_grassmann_norm(int n, int m, int k, Cplx lambda);

// Composition constant
//   zeta(lambda) = Gamma_m(n/2)^2 Gamma_m((m+lambda)/2) Gamma_m((m-lambda-n)/2)
//                / [Gamma_m(m/2)^2 Gamma_m(-lambda/2) Gamma_m((n+lambda)/2)],
// invariant under lambda <-> -lambda-n.  Removable points (e.g. (4,2,1)) are
// resolved by the symmetric eps-limit and flagged.
MeromorphicValue zeta_rank(int n, int m, Cplx lambda);

// Real poles >= bound of lambda |-> Gamma_m((lambda+k)/2), descending.  For
// m >= 2 these are the consecutive integers m-k-1, m-k-2, ...; for m = 1 only
// every other integer -k, -k-2, ... survives.
std::vector<double> pole_set(int m, int k, double bound);

}  // namespace cosform::specfun
