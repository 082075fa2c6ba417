#include "cosform/cosgrass.hpp"

#include <cmath>

#include "cosform/errors.hpp"
#include "cosform/specfun.hpp"

namespace cosform::cosgrass {

namespace {

// Spot-check the declared right invariance at one deterministic frame and
// one random rotation; functions that only live on the Stiefel manifold must
// say so instead.
void check_invariance(const GrassFunction& f, std::uint64_t seed) {
  if (!f.right_invariant) return;
  rng::RngStream rs(seed, 0x5EEDC0DEULL);
  const stiefel::StiefelPoint v = stiefel::haar_sample(f.n, f.m, rs);
  const stiefel::StiefelPoint q = stiefel::haar_sample(f.m, f.m, rs);
  const Cplx a = f.eval(v);
  const Cplx b = f.eval(stiefel::StiefelPoint(v.cols * q.cols));
  if (std::abs(a - b) > 1e-10 * std::max(1.0, std::abs(a)))
    throw InvalidArgument(
        "GrassFunction declared right-invariant but changes under a right "
        "rotation");
}

void check_frame(const GrassFunction& f, const stiefel::StiefelPoint& u) {
  if (!f.eval) throw InvalidArgument("GrassFunction: empty integrand");
  if (f.n < 2 || f.m < 1 || f.m > f.n - 1)
    throw InvalidArgument("GrassFunction: need n >= 2, 1 <= m <= n-1");
  if (u.n() != f.n)
    throw InvalidArgument("transform: probe ambient dimension mismatch");
  if (u.m() > u.n() - 1)
    throw InvalidArgument("transform: probe rank must be at most n - 1");
}

Cplx kernel_pow(double c, Cplx lambda) {
  // c > 0 here; exact 1 at lambda = 0 keeps the trivial transform noiseless.
  if (lambda == Cplx(0.0, 0.0)) return Cplx(1.0, 0.0);
  return std::exp(lambda * std::log(c));
}

}  // namespace

GrassFunction constant_function(int n, int m, Cplx value) {
  GrassFunction f;
  f.n = n;
  f.m = m;
  f.right_invariant = true;
  f.eval = [value](const stiefel::StiefelPoint&) { return value; };
  return f;
}

mc::McEstimate mc_cosine(const GrassFunction& f, Cplx lambda,
                         const stiefel::StiefelPoint& u,
                         const mc::McOptions& opt) {
  check_frame(f, u);
  const int k = u.m();
  if (f.m > k)
    throw InvalidArgument("mc_cosine: need m <= k (integrand rank at most probe rank)");
  if (opt.samples < 1000)
    throw InvalidArgument("mc_cosine: need at least 1000 samples");
  const double bound = double(f.m - k - 1);
  if (!(lambda.real() > bound + 0.1))
    throw ConvergenceError(
        "mc_cosine: need Re lambda > m - k - 1 (+0.1 engine margin); "
        "continue spectrally instead");
  check_invariance(f, opt.seed);
  const int n = f.n, m = f.m;
  auto sample_one = [&f, lambda, &u, n, m](rng::RngStream& rs) -> Cplx {
    for (;;) {
      const stiefel::StiefelPoint v = stiefel::haar_sample(n, m, rs);
      const double c = stiefel::cos_angle(u, v);
      if (c > 0.0) return f.eval(v) * kernel_pow(c, lambda);
      // c = 0: a null set, but fatal for negative exponents; redraw there
      // and keep the exact zero otherwise.
      if (lambda.real() > 0.0) return Cplx(0.0, 0.0);
    }
  };
  return mc::mc_run(sample_one, opt);
}

mc::McEstimate mc_cosine_normalized(const GrassFunction& f, Cplx lambda,
                                    const stiefel::StiefelPoint& u,
                                    const mc::McOptions& opt) {
  check_frame(f, u);
  const MeromorphicValue norm =
      specfun::gamma_grassmann_norm(f.n, f.m, u.m(), lambda);
  if (norm.is_pole)
    throw PoleError(
        "mc_cosine_normalized: lambda is a pole of the normalizing constant");
  mc::McEstimate est = mc_cosine(f, lambda, u, opt);
  est.mean *= norm.value;
  est.std_err *= std::abs(norm.value);
  return est;
}

mc::McEstimate mc_dual_cosine(const GrassFunction& phi, Cplx lambda,
                              const stiefel::StiefelPoint& v,
                              const mc::McOptions& opt) {
  check_frame(phi, v);
  const int m = v.m(), k = phi.m;
  if (m > k) throw InvalidArgument("mc_dual_cosine: need m <= k");
  if (opt.samples < 1000)
    throw InvalidArgument("mc_dual_cosine: need at least 1000 samples");
  const double bound = double(m - k - 1);
  if (!(lambda.real() > bound + 0.1))
    throw ConvergenceError(
        "mc_dual_cosine: need Re lambda > m - k - 1 (+0.1 engine margin)");
  check_invariance(phi, opt.seed);
  const int n = phi.n;
  auto sample_one = [&phi, lambda, &v, n, k](rng::RngStream& rs) -> Cplx {
    for (;;) {
      const stiefel::StiefelPoint u = stiefel::haar_sample(n, k, rs);
      const double c = stiefel::cos_angle(u, v);
      if (c > 0.0) return phi.eval(u) * kernel_pow(c, lambda);
      if (lambda.real() > 0.0) return Cplx(0.0, 0.0);
    }
  };
  return mc::mc_run(sample_one, opt);
}

mc::McEstimate mc_funk(const GrassFunction& f, const stiefel::StiefelPoint& u,
                       const mc::McOptions& opt) {
  check_frame(f, u);
  const int k = u.m(), m = f.m, n = f.n;
  if (k + m > n)
    throw DomainError("mc_funk: need k + m <= n for a nonempty incidence set");
  check_invariance(f, opt.seed);
  // v orthogonal to u is exactly v = B w with B spanning the complement.
  const stiefel::StiefelPoint base = stiefel::orthocomplement(u);
  auto sample_one = [&f, &base, n, m, k](rng::RngStream& rs) -> Cplx {
    const stiefel::StiefelPoint w = stiefel::haar_sample(n - k, m, rs);
    return f.eval(stiefel::StiefelPoint(base.cols * w.cols));
  };
  return mc::mc_run(sample_one, opt);
}

}  // namespace cosform::cosgrass
