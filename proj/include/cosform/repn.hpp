#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "cosform/cosgrass.hpp"
#include "cosform/stiefel.hpp"

namespace cosform::repn {

// Element of SL(n, R).
struct GroupElement {
  Eigen::MatrixXd mat;

  // Validates squareness and |det - 1| <= 1e-10.
  static GroupElement special(Eigen::MatrixXd m);
};

// Cartan involution g -> (g^{-1})^T.
GroupElement theta(const GroupElement& g);

// (pi_lambda(g) f)(v) = |rad(g^{-1} v)|_m^{-(lambda + n/2)} f(ang(g^{-1} v)).
Cplx pi_apply(const GroupElement& g, Cplx lambda,
              const cosgrass::GrassFunction& f,
              const stiefel::StiefelPoint& v);
cosgrass::GrassFunction pi_operator(const GroupElement& g, Cplx lambda,
                                    const cosgrass::GrassFunction& f);

// j(g, {v}) = det(v^T g^T g v)^{-1/2}; satisfies the cocycle rule
// j(g g', b) = j(g, g'. b) j(g', b).
double jacobian_factor(const GroupElement& g, const stiefel::StiefelPoint& v);

// Symmetric traceless n x n matrix, the parameter of a degree-2 K-type
// eigenfunction.
struct SymTraceless {
  Eigen::MatrixXd Y;

  // Validates symmetry and trace to 1e-12 * ||Y||.
  static SymTraceless make(Eigen::MatrixXd y);
};

// omega(Y)(v) = n/(m(n-m)) tr(Y v v^T); equals 1 at Y = the centred
// base-point projector and is bounded by 1 for beta-normalized Y.
double omega_embed(const SymTraceless& Y, const stiefel::StiefelPoint& v);
cosgrass::GrassFunction omega_function(const SymTraceless& Y, int n, int m);

// Gaussian matrix conditioned away from singularity, sign-fixed and scaled
// onto SL(n, R).
GroupElement random_special(int n, rng::RngStream& rs);

// Random symmetric traceless Y normalized to n/(m(n-m)) tr(Y^2) = 1.
SymTraceless random_traceless(int n, int m, rng::RngStream& rs);

struct IntertwineResult {
  double residual = 0.0;  // worst probe residual
  double sigma = 0.0;     // combined MC standard error at that probe
};

// max over probes u of
//   | C(pi_{lambda+n/2}(g) f)(u) - det(rad(theta(g)^{-1} u))^lambda
//       * (C f)(ang(theta(g)^{-1} u)) |
// with both transforms estimated on common random numbers.
IntertwineResult intertwine_residual(
    const GroupElement& g, Cplx lambda, const cosgrass::GrassFunction& f,
    const std::vector<stiefel::StiefelPoint>& probes, long long samples,
    std::uint64_t seed);

}  // namespace cosform::repn
