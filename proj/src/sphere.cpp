#include "cosform/sphere.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "cosform/errors.hpp"
#include "cosform/quadrature.hpp"

namespace cosform::sphere {

MeromorphicValue multiplier(int n, int j, Cplx lambda) {
  if (n < 2 || j < 0) throw InvalidArgument("multiplier: need n >= 2, j >= 0");
  if (j % 2 == 1) return MeromorphicValue::finite(Cplx(0.0, 0.0));
  specfun::GammaProduct p;
  if ((j / 2) % 2 == 1) p.mul(Cplx(-1.0, 0.0));
  p.mul_gamma(0.5 * (double(j) - lambda));
  p.div_gamma(0.5 * (double(j) + double(n) + lambda));
  return p.eval();
}

Cplx quad_cosine_zonal(int n, Cplx lambda, const zonal::ZonalCoefficients& f,
                       double t0, double tol) {
  if (n < 2) throw InvalidArgument("quad_cosine_zonal: need n >= 2");
  if (f.n != n)
    throw InvalidArgument("quad_cosine_zonal: coefficient dimension mismatch");
  if (std::abs(t0) > 1.0 + 1e-12)
    throw DomainError("quad_cosine_zonal: |t0| > 1");
  if (!(lambda.real() > -1.0))
    throw ConvergenceError(
        "quad_cosine_zonal: direct integration needs Re lambda > -1; use "
        "spectral_apply for the continued transform");
  const MeromorphicValue norm = specfun::gamma_sphere_norm(n, lambda);
  if (norm.is_pole)
    throw PoleError("quad_cosine_zonal: normalization pole at this lambda");

  // Reproducing kernel K(t) = sum_j c_j P_j(t) with c_j = a_j P_j(t0); the
  // transform of f at <u, p> = t0 is the weighted integral of |t|^lambda K(t).
  const int band = f.band();
  std::vector<Cplx> c(std::max(band + 1, 1), Cplx(0.0, 0.0));
  for (int j = 0; j <= band; ++j)
    c[j] = f.coeffs[j] * zonal::zonal_harmonic(n, j, t0);

  auto kernel = [&c, band, n](double t) -> Cplx {
    Cplx acc = c[0];
    if (band >= 1) acc += c[1] * t;
    double pm2 = 1.0, pm1 = t;
    for (int k = 2; k <= band; ++k) {
      const double p =
          ((2 * k + n - 4) * t * pm1 - (k - 1) * pm2) / (k + n - 3);
      acc += c[k] * p;
      pm2 = pm1;
      pm1 = p;
    }
    return acc;
  };

  const double half = 0.5 * (double(n) - 3.0);
  // Right panel [0, 1]: dist to 0 is |t|, 1 - t^2 = (1 - t)(1 + t).
  auto right = [&](double x, double da, double db) -> Cplx {
    return std::exp(lambda * std::log(da)) * kernel(x) *
           std::exp(half * (std::log(db) + std::log1p(x)));
  };
  // Left panel [-1, 0]: dist to 0 is db, 1 + t is the distance to -1.
  auto left = [&](double x, double da, double db) -> Cplx {
    return std::exp(lambda * std::log(db)) * kernel(x) *
           std::exp(half * (std::log(da) + std::log(1.0 - x)));
  };

  const double inner_tol = tol * 1e-2;
  const Cplx integral = quadrature::tanh_sinh(left, -1.0, 0.0, inner_tol) +
                        quadrature::tanh_sinh(right, 0.0, 1.0, inner_tol);
  return norm.value * integral / quadrature::weight_mass(n);
}

Cplx quad_cosine_zonal(int n, Cplx lambda,
                       const std::function<double(double)>& f, double t0,
                       double tol) {
  return quad_cosine_zonal(n, lambda, zonal::project_zonal(n, f), t0, tol);
}

double funk_sphere_zonal(int n, const std::function<double(double)>& f,
                         double t0) {
  if (n < 2) throw InvalidArgument("funk_sphere_zonal: need n >= 2");
  if (std::abs(t0) > 1.0 + 1e-12)
    throw DomainError("funk_sphere_zonal: |t0| > 1");
  // On the subsphere orthogonal to u, <v, p> = sqrt(1 - t0^2) s with s the
  // cosine of a latitude on S^{n-2}.
  const double r = std::sqrt(std::max(0.0, 1.0 - t0 * t0));
  if (n == 2) return 0.5 * (f(r) + f(-r));
  const quadrature::QuadratureRule rule = quadrature::zonal_rule(n - 1);
  double acc = 0.0, mass = 0.0;
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    acc += rule.weights[i] * f(r * rule.nodes[i]);
    mass += rule.weights[i];
  }
  return acc / mass;
}

zonal::ZonalCoefficients spectral_apply(const zonal::ZonalCoefficients& f,
                                        Cplx lambda) {
  zonal::ZonalCoefficients out = f;
  for (int j = 0; j <= f.band(); ++j) {
    if (j % 2 == 1 || f.coeffs[j] == Cplx(0.0, 0.0)) {
      out.coeffs[j] = Cplx(0.0, 0.0);
      continue;
    }
    const MeromorphicValue mj = multiplier(f.n, j, lambda);
    if (mj.is_pole)
      throw PoleError("spectral_apply: multiplier pole at degree " +
                      std::to_string(j));
    out.coeffs[j] = f.coeffs[j] * mj.value;
  }
  return out;
}

zonal::ZonalCoefficients spectral_invert(const zonal::ZonalCoefficients& g,
                                         Cplx lambda) {
  // The inverse multiplier 1/m_{j,lambda} = m_{j,-lambda-n} degenerates
  // exactly where m_{j,lambda} vanishes for some even j <= band, i.e. on the
  // two arithmetic progressions below; everywhere else the band-limited
  // inversion is exact.
  if (specfun::is_gamma_pole(-0.5 * lambda) ||
      specfun::is_gamma_pole(0.5 * (lambda + double(g.n))))
    throw PoleError(
        "spectral_invert: lambda in {0, 2, 4, ...} or {-n, -n-2, ...} is "
        "excluded");
  return spectral_apply(g, -lambda - double(g.n));
}

}  // namespace cosform::sphere
