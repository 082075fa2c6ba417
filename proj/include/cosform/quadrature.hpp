#pragma once

#include <functional>
#include <vector>

#include "cosform/meromorphic.hpp"

namespace cosform::quadrature {

// Integrand for tanh-sinh integration over [a, b].  Besides the node x the
// callback receives the exact distances to both endpoints, so algebraic
// endpoint factors such as (x-a)^alpha stay accurate even where x-a would
// underflow the naive subtraction.
using Integrand = std::function<Cplx(double x, double dist_a, double dist_b)>;

// Double-exponential quadrature over the finite interval [a, b]; handles
// integrable endpoint singularities.  Refines until two successive levels
// agree to tol (scaled by max(1, |I|)) or max_level is reached.
Cplx tanh_sinh(const Integrand& f, double a, double b, double tol = 1e-10,
               int max_level = 11);

// Rule in t for integrals  int_{-1}^{1} g(t) (1-t^2)^{(n-3)/2} dt, built from
// Gauss-Legendre in the substitution t = cos(theta); the weights carry the
// full mass W_n, including the n = 2 endpoint-singular case.
struct QuadratureRule {
  std::vector<double> nodes;    // ascending, in (-1, 1)
  std::vector<double> weights;  // positive, summing to W_n
  double target_tol = 1e-12;
};

QuadratureRule zonal_rule(int n, int points = 256);

// Gauss-Legendre nodes (ascending) and weights on [-1, 1].
void gauss_legendre(int points, std::vector<double>& nodes,
                    std::vector<double>& weights);

// W_n = int_{-1}^{1} (1-t^2)^{(n-3)/2} dt = sqrt(pi) Gamma((n-1)/2) / Gamma(n/2).
double weight_mass(int n);

}  // namespace cosform::quadrature
