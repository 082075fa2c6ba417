#pragma once

#include <functional>

#include "cosform/mc.hpp"
#include "cosform/stiefel.hpp"

namespace cosform::cosgrass {

// Integrand on V_{n,m}.  right_invariant declares f(vQ) = f(v) for right
// orthogonal Q, i.e. f descends to the Grassmannian; transforms spot-check
// the claim on entry.
struct GrassFunction {
  int n = 0;
  int m = 0;
  bool right_invariant = true;
  std::function<Cplx(const stiefel::StiefelPoint&)> eval;
};

GrassFunction constant_function(int n, int m, Cplx value = Cplx(1.0, 0.0));

// (C f)(u) = E_v[ f(v) |u^T v|_m^lambda ], v invariant on V_{n,m}, u a frame
// in V_{n,k}.  Absolute convergence needs Re lambda > m - k - 1; the engine
// enforces a 0.1 safety margin past that bound.
mc::McEstimate mc_cosine(const GrassFunction& f, Cplx lambda,
                         const stiefel::StiefelPoint& u,
                         const mc::McOptions& opt);

// gamma_grassmann_norm(n, m, k, lambda) times mc_cosine; throws PoleError at
// poles of the normalizing constant.
mc::McEstimate mc_cosine_normalized(const GrassFunction& f, Cplx lambda,
                                    const stiefel::StiefelPoint& u,
                                    const mc::McOptions& opt);

// Dual transform: E_u[ phi(u) |u^T v|_m^lambda ], u invariant on V_{n,k}
// (phi lives there), v a frame in V_{n,m} with m <= k.
mc::McEstimate mc_dual_cosine(const GrassFunction& phi, Cplx lambda,
                              const stiefel::StiefelPoint& v,
                              const mc::McOptions& opt);

// Mean of f over {v in V_{n,m} : u^T v = 0}; requires k + m <= n.
mc::McEstimate mc_funk(const GrassFunction& f, const stiefel::StiefelPoint& u,
                       const mc::McOptions& opt);

}  // namespace cosform::cosgrass
