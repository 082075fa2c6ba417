#pragma once

#include <functional>

#include "cosform/specfun.hpp"
#include "cosform/zonal.hpp"

namespace cosform::sphere {

// Spectrum of the normalized transform on degree-j harmonics:
//   (-1)^{j/2} Gamma((j - lambda)/2) / Gamma((j + n + lambda)/2)
// for even j; odd degrees are annihilated.
MeromorphicValue multiplier(int n, int j, Cplx lambda);

// Normalized transform of a band-limited zonal function, evaluated by
// quadrature at a point u with <u, p> = t0 (p the symmetry axis).  Direct
// integration needs Re lambda > -1; beyond that use spectral_apply.
Cplx quad_cosine_zonal(int n, Cplx lambda, const zonal::ZonalCoefficients& f,
                       double t0, double tol = 1e-8);
Cplx quad_cosine_zonal(int n, Cplx lambda,
                       const std::function<double(double)>& f, double t0,
                       double tol = 1e-8);

// Mean of f over the great subsphere orthogonal to u, with <u, p> = t0.
double funk_sphere_zonal(int n, const std::function<double(double)>& f,
                         double t0);

// Coefficient-wise action of the normalized transform; this is the analytic
// continuation to every non-pole lambda on band-limited functions.
zonal::ZonalCoefficients spectral_apply(const zonal::ZonalCoefficients& f,
                                        Cplx lambda);

// Inverse on band-limited even functions, g -> spectral_apply(g, -lambda-n).
// lambda in {0, 2, 4, ...} and {-n, -n-2, ...} is excluded.
zonal::ZonalCoefficients spectral_invert(const zonal::ZonalCoefficients& g,
                                         Cplx lambda);

}  // namespace cosform::sphere
