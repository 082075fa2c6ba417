#include "cosform/repn.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "cosform/errors.hpp"

namespace cosform::repn {

GroupElement GroupElement::special(Eigen::MatrixXd m) {
  if (m.rows() != m.cols() || m.rows() < 2)
    throw InvalidArgument("GroupElement: need a square matrix, n >= 2");
  const double d = m.determinant();
  if (std::abs(d - 1.0) > 1e-10)
    throw InvalidArgument("GroupElement: determinant must be 1, got " +
                          std::to_string(d));
  return GroupElement{std::move(m)};
}

GroupElement theta(const GroupElement& g) {
  if (g.mat.isIdentity(0.0)) return g;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g.mat);
  if (!lu.isInvertible())
    throw SingularInputError("theta: matrix is singular");
  return GroupElement{lu.inverse().transpose()};
}

Cplx pi_apply(const GroupElement& g, Cplx lambda,
              const cosgrass::GrassFunction& f,
              const stiefel::StiefelPoint& v) {
  const int n = f.n;
  if (v.n() != n || g.mat.rows() != n)
    throw InvalidArgument("pi_apply: dimension mismatch");
  if (g.mat.isIdentity(0.0)) return f.eval(v);
  const Eigen::MatrixXd x = g.mat.partialPivLu().solve(v.cols);
  const stiefel::PolarDecomposition pd = stiefel::rad_ang(x);
  const double det_rad = pd.rad.determinant();
  const Cplx factor =
      std::exp(-(lambda + 0.5 * double(n)) * std::log(det_rad));
  return factor * f.eval(pd.ang);
}

cosgrass::GrassFunction pi_operator(const GroupElement& g, Cplx lambda,
                                    const cosgrass::GrassFunction& f) {
  cosgrass::GrassFunction out;
  out.n = f.n;
  out.m = f.m;
  out.right_invariant = f.right_invariant;
  out.eval = [g, lambda, f](const stiefel::StiefelPoint& v) {
    return pi_apply(g, lambda, f, v);
  };
  return out;
}

double jacobian_factor(const GroupElement& g, const stiefel::StiefelPoint& v) {
  if (g.mat.rows() != v.n())
    throw InvalidArgument("jacobian_factor: dimension mismatch");
  const Eigen::MatrixXd gv = g.mat * v.cols;
  const double det = (gv.transpose() * gv).determinant();
  if (!(det > 1e-24))
    throw SingularInputError("jacobian_factor: image frame lost rank");
  return 1.0 / std::sqrt(det);
}

SymTraceless SymTraceless::make(Eigen::MatrixXd y) {
  if (y.rows() != y.cols() || y.rows() < 2)
    throw InvalidArgument("SymTraceless: need a square matrix, n >= 2");
  const double scale = std::max(1e-300, y.cwiseAbs().maxCoeff());
  if ((y - y.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw InvalidArgument("SymTraceless: matrix is not symmetric");
  if (std::abs(y.trace()) > 1e-12 * scale * y.rows())
    throw InvalidArgument("SymTraceless: matrix has nonzero trace");
  return SymTraceless{std::move(y)};
}

double omega_embed(const SymTraceless& Y, const stiefel::StiefelPoint& v) {
  const int n = v.n(), m = v.m();
  if (Y.Y.rows() != n) throw InvalidArgument("omega_embed: dimension mismatch");
  if (m >= n) throw InvalidArgument("omega_embed: need m < n");
  const double t = (v.cols.transpose() * Y.Y * v.cols).trace();
  return double(n) / (double(m) * double(n - m)) * t;
}

cosgrass::GrassFunction omega_function(const SymTraceless& Y, int n, int m) {
  if (Y.Y.rows() != n) throw InvalidArgument("omega_function: dimension mismatch");
  if (m < 1 || m > n - 1)
    throw InvalidArgument("omega_function: need 1 <= m <= n-1");
  cosgrass::GrassFunction f;
  f.n = n;
  f.m = m;
  f.right_invariant = true;  // tr(Y Q^T v^T Y v Q) is rotation-free
  f.eval = [Y](const stiefel::StiefelPoint& v) {
    return Cplx(omega_embed(Y, v), 0.0);
  };
  return f;
}

GroupElement random_special(int n, rng::RngStream& rs) {
  if (n < 2) throw InvalidArgument("random_special: need n >= 2");
  for (;;) {
    Eigen::MatrixXd a = rs.gaussian_matrix(n, n);
    double d = a.determinant();
    if (std::abs(d) <= 0.05) continue;  // stay away from the singular cone
    if (d < 0.0) {
      a.col(0) = -a.col(0);
      d = -d;
    }
    a /= std::pow(d, 1.0 / double(n));
    return GroupElement::special(std::move(a));
  }
}

SymTraceless random_traceless(int n, int m, rng::RngStream& rs) {
  if (n < 2 || m < 1 || m > n - 1)
    throw InvalidArgument("random_traceless: need n >= 2, 1 <= m <= n-1");
  const Eigen::MatrixXd a = rs.gaussian_matrix(n, n);
  Eigen::MatrixXd y = 0.5 * (a + a.transpose());
  y -= (y.trace() / double(n)) * Eigen::MatrixXd::Identity(n, n);
  const double beta =
      double(n) / (double(m) * double(n - m)) * (y * y).trace();
  y /= std::sqrt(beta);
  return SymTraceless{std::move(y)};
}

IntertwineResult intertwine_residual(
    const GroupElement& g, Cplx lambda, const cosgrass::GrassFunction& f,
    const std::vector<stiefel::StiefelPoint>& probes, long long samples,
    std::uint64_t seed) {
  if (probes.empty())
    throw InvalidArgument("intertwine_residual: need at least one probe");
  const int n = f.n;
  const GroupElement h = theta(g);
  const cosgrass::GrassFunction moved =
      pi_operator(g, lambda + 0.5 * double(n), f);
  mc::McOptions opt;
  opt.samples = samples;
  opt.seed = seed;
  IntertwineResult worst;
  bool first = true;
  for (const stiefel::StiefelPoint& u : probes) {
    const mc::McEstimate lhs = cosgrass::mc_cosine(moved, lambda, u, opt);
    Cplx factor(1.0, 0.0);
    mc::McEstimate rhs;
    if (h.mat.isIdentity(0.0)) {
      // Same integrand, same stream: the two sides agree bit for bit.
      rhs = cosgrass::mc_cosine(f, lambda, u, opt);
    } else {
      const Eigen::MatrixXd x = h.mat.partialPivLu().solve(u.cols);
      const stiefel::PolarDecomposition pd = stiefel::rad_ang(x);
      factor = std::exp(lambda * std::log(pd.rad.determinant()));
      rhs = cosgrass::mc_cosine(f, lambda, pd.ang, opt);
    }
    const double resid = std::abs(lhs.mean - factor * rhs.mean);
    const double sig = std::hypot(lhs.std_err, std::abs(factor) * rhs.std_err);
    if (first || resid > worst.residual) {
      worst.residual = resid;
      worst.sigma = sig;
      first = false;
    }
  }
  return worst;
}

}  // namespace cosform::repn
