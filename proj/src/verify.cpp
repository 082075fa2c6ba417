#include "cosform/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>
#include <vector>

#include "cosform/cosgrass.hpp"
#include "cosform/errors.hpp"
#include "cosform/mc.hpp"
#include "cosform/repn.hpp"
#include "cosform/specfun.hpp"
#include "cosform/spectrum.hpp"
#include "cosform/sphere.hpp"
#include "cosform/stiefel.hpp"
#include "cosform/zonal.hpp"

namespace cosform::verify {

namespace {

constexpr double kPi = std::numbers::pi;

// Each check accumulates max(error / part-tolerance); <= 1 passes.  Checks
// that mix tolerances (absolute, relative, 4-sigma) stay comparable this way.
struct PartTracker {
  double worst = 0.0;
  void add(double err, double tol) { worst = std::max(worst, err / tol); }
};

double dist_to_integer(Cplx z) {
  return std::hypot(z.real() - std::round(z.real()), z.imag());
}

// Random lambda bounded away from the integer lattice, where every gamma
// pole and zero of the spectra under test lives.
Cplx rand_lambda(rng::RngStream& rs, double re_lo, double re_hi, double im_lo,
                 double im_hi, double min_int_dist) {
  for (;;) {
    const Cplx l(re_lo + (re_hi - re_lo) * rs.uniform01(),
                 im_lo + (im_hi - im_lo) * rs.uniform01());
    if (dist_to_integer(l) >= min_int_dist) return l;
  }
}

// Random SL(n) element with singular values in a moderate band, keeping the
// absolute residual tolerances of the group-action checks meaningful.
repn::GroupElement conditioned_special(int n, rng::RngStream& rs,
                                       double max_cond = 6.0) {
  for (;;) {
    repn::GroupElement g = repn::random_special(n, rs);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(g.mat);
    const Eigen::VectorXd& s = svd.singularValues();
    if (s(0) / s(s.size() - 1) <= max_cond) return g;
  }
}

std::vector<spectrum::HighestWeight> nonneg_lattice(int n, int m, int bound) {
  std::vector<spectrum::HighestWeight> out;
  for (spectrum::HighestWeight& w : spectrum::lattice(n, m, bound))
    if (w.mu[m - 1] >= 0) out.push_back(std::move(w));
  return out;
}

// 1: quadrature of the transform reproduces the degree multipliers.
void check_multiplier_quadrature(PartTracker& tr, std::uint64_t, long long,
                                 int) {
  const int n = 3;
  const std::vector<Cplx> lambdas = {
      {-0.9, 0.0}, {-0.5, 0.0}, {1.5, 0.0}, {-0.5, 0.7}};
  for (int j : {0, 2, 4, 6, 8}) {
    zonal::ZonalCoefficients f;
    f.n = n;
    f.coeffs.assign(j + 1, Cplx(0.0, 0.0));
    f.coeffs[j] = Cplx(1.0, 0.0);
    for (const Cplx& l : lambdas) {
      const Cplx mj = sphere::multiplier(n, j, l).value;
      for (int i = 0; i < 20; ++i) {
        const double t0 = std::cos(kPi * (2 * i + 1) / 40.0);
        const double pj = zonal::zonal_harmonic(n, j, t0);
        // Near-zeros of the probe harmonic make the relative error
        // ill-conditioned; skip them.
        if (std::abs(pj) < 0.1) continue;
        const Cplx got = sphere::quad_cosine_zonal(n, l, f, t0, 1e-9);
        tr.add(std::abs(got - mj * pj) / std::abs(mj * pj), 1e-6);
      }
    }
  }
}

// 2: multiplier inversion m(j, l) m(j, -l-n) = 1.
void check_multiplier_inversion(PartTracker& tr, std::uint64_t seed, long long,
                                int) {
  rng::RngStream rs(seed, 9002);
  for (int n : {2, 3, 4, 7}) {
    for (int t = 0; t < 100; ++t) {
      const Cplx l = rand_lambda(rs, -6.0, 3.0, -2.0, 2.0, 0.05);
      for (int j = 0; j <= 40; j += 2) {
        const Cplx prod = sphere::multiplier(n, j, l).value *
                          sphere::multiplier(n, j, -l - double(n)).value;
        tr.add(std::abs(prod - Cplx(1.0, 0.0)), 1e-12);
      }
    }
  }
}

// 3: the l = -1 multiplier equals the equator-mean closed form, plus two
// direct equator means by quadrature.
void check_funk_limit(PartTracker& tr, std::uint64_t, long long, int) {
  for (int n : {3, 4, 5}) {
    const double c = std::sqrt(kPi) / std::exp(std::lgamma(0.5 * (n - 1)));
    for (int j = 0; j <= 20; j += 2) {
      const double want = c * zonal::zonal_harmonic(n, j, 0.0);
      const Cplx got = sphere::multiplier(n, j, Cplx(-1.0, 0.0)).value;
      tr.add(std::abs(got - want), 1e-10);
    }
  }
  auto sq = [](double t) { return t * t; };
  tr.add(std::abs(sphere::funk_sphere_zonal(3, sq, 1.0)), 1e-6);
  tr.add(std::abs(sphere::funk_sphere_zonal(3, sq, 0.0) - 0.5), 1e-6);
}

// 4: constant-function transform versus the zero-weight spectrum.
void check_constant_transform(PartTracker& tr, std::uint64_t seed,
                              long long samples, int threads) {
  struct Case {
    int n, m;
    Cplx l;
  };
  const Case cases[] = {
      {4, 2, {2.0, 0.0}}, {4, 2, {2.5, 0.0}}, {5, 2, {1.5, 0.0}}};
  for (const Case& c : cases) {
    spectrum::HighestWeight zero{c.n, c.m, std::vector<int>(c.m, 0)};
    const Cplx want = spectrum::eta(zero, c.l).value;
    const cosgrass::GrassFunction f = cosgrass::constant_function(c.n, c.m);
    const stiefel::StiefelPoint u(Eigen::MatrixXd::Identity(c.n, c.m));
    mc::McOptions opt;
    opt.samples = std::max<long long>(1000, samples);
    opt.seed = seed;
    opt.threads = threads;
    const mc::McEstimate est = cosgrass::mc_cosine(f, c.l, u, opt);
    tr.add(std::abs(est.mean - want), 4.0 * est.std_err);
  }
}

// 5: the degree-2 embedding is an eigenfunction with the (2,0) eigenvalue.
void check_eigenfunction(PartTracker& tr, std::uint64_t seed,
                         long long samples, int threads) {
  rng::RngStream rs(seed, 9005);
  const repn::SymTraceless y = repn::random_traceless(4, 2, rs);
  const cosgrass::GrassFunction f = repn::omega_function(y, 4, 2);
  const spectrum::HighestWeight mu{4, 2, {2, 0}};
  const Cplx lam(2.5, 0.0);
  const Cplx eig = spectrum::eta(mu, lam).value;
  mc::McOptions opt;
  opt.samples = std::max<long long>(1000, samples / 5);
  opt.seed = seed;
  opt.threads = threads;
  int found = 0;
  for (int attempt = 0; attempt < 2000 && found < 5; ++attempt) {
    const stiefel::StiefelPoint u = stiefel::haar_sample(4, 2, rs);
    const double w = repn::omega_embed(y, u);
    if (std::abs(w) < 0.2) continue;  // conditioning of the relative target
    ++found;
    const mc::McEstimate est = cosgrass::mc_cosine(f, lam, u, opt);
    tr.add(std::abs(est.mean - eig * w), 4.0 * est.std_err);
  }
  if (found < 5) tr.add(2.0, 1.0);
}

// 6: one-step recursion against the closed-form spectrum.
void check_recursion(PartTracker& tr, std::uint64_t seed, long long, int) {
  rng::RngStream rs(seed, 9006);
  const std::pair<int, int> pairs[] = {{3, 1}, {4, 2}, {5, 2}, {6, 3}};
  for (const auto& [n, m] : pairs) {
    const std::vector<spectrum::HighestWeight> lat = nonneg_lattice(n, m, 8);
    int done = 0;
    while (done < 50) {
      const spectrum::HighestWeight& base =
          lat[static_cast<size_t>(rs.uniform01() * double(lat.size())) %
              lat.size()];
      const int j =
          1 + static_cast<int>(rs.uniform01() * double(m)) % m;  // one-based
      const int dir = rs.uniform01() < 0.5 ? 2 : -2;
      spectrum::HighestWeight other = base;
      other.mu[j - 1] += dir;
      if (!other.valid() || other.mu[m - 1] < 0) continue;
      const Cplx l = rand_lambda(rs, -4.0, 3.0, -2.0, 2.0, 0.05);
      const spectrum::HighestWeight& lo = dir > 0 ? base : other;
      const spectrum::HighestWeight& hi = dir > 0 ? other : base;
      const Cplx want = spectrum::eta_ratio(n, lo.mu, j, l);
      const Cplx got =
          spectrum::eta(hi, l).value / spectrum::eta(lo, l).value;
      tr.add(std::abs(got - want) / std::abs(want), 1e-10);
      ++done;
    }
  }
}

// 7: spectral inversion product and the composition constant.
void check_spectral_inversion(PartTracker& tr, std::uint64_t seed, long long,
                              int) {
  rng::RngStream rs(seed, 9007);
  const std::pair<int, int> pairs[] = {{3, 1}, {4, 2}, {5, 2}};
  for (const auto& [n, m] : pairs) {
    for (const spectrum::HighestWeight& w : nonneg_lattice(n, m, 6)) {
      for (int t = 0; t < 100; ++t) {
        const Cplx l = rand_lambda(rs, -5.0, 3.0, -2.0, 2.0, 0.05);
        const Cplx prod = spectrum::eta_normalized(w, l).value *
                          spectrum::eta_normalized(w, -l - double(n)).value;
        tr.add(std::abs(prod - Cplx(1.0, 0.0)), 1e-10);
      }
    }
    for (int t = 0; t < 20; ++t) {
      const Cplx lp = rand_lambda(rs, -4.0, 2.0, -2.0, 2.0, 0.05);
      const Cplx a = spectrum::eta_product(n, m, lp + 0.5 * double(n)).value;
      const Cplx b = specfun::zeta_rank(n, m, lp).value;
      tr.add(std::abs(a - b) / std::abs(b), 1e-10);
    }
  }
}

// 8: normalized spectrum = normalizing constant times plain spectrum, and
// the rank-one spectrum matches the sphere multipliers.
void check_normalization(PartTracker& tr, std::uint64_t seed, long long, int) {
  rng::RngStream rs(seed, 9008);
  const std::pair<int, int> pairs[] = {{3, 1}, {4, 2}, {5, 2}, {6, 3}};
  for (const auto& [n, m] : pairs) {
    const std::vector<spectrum::HighestWeight> lat = nonneg_lattice(n, m, 4);
    for (int t = 0; t < 50; ++t) {
      const Cplx l = rand_lambda(rs, -4.0, 3.0, -2.0, 2.0, 0.05);
      const Cplx norm = specfun::gamma_grassmann_norm(n, m, m, l).value;
      for (const spectrum::HighestWeight& w : lat) {
        const Cplx a = spectrum::eta_normalized(w, l).value;
        const Cplx b = norm * spectrum::eta(w, l).value;
        tr.add(std::abs(a - b) / std::abs(a), 1e-12);
      }
    }
  }
  for (int n : {3, 4, 5}) {
    for (int t = 0; t < 20; ++t) {
      const Cplx l = rand_lambda(rs, -4.0, 3.0, -2.0, 2.0, 0.05);
      for (int j = 0; j <= 20; j += 2) {
        const spectrum::HighestWeight w{n, 1, {j}};
        const Cplx a = spectrum::eta_normalized(w, l).value;
        const Cplx b = sphere::multiplier(n, j, l).value;
        tr.add(std::abs(a - b) / std::abs(b), 1e-12);
      }
    }
  }
}

// 9: group-action identities: cocycle, change of variables, unitarity.
void check_group_action(PartTracker& tr, std::uint64_t seed, long long,
                        int threads) {
  rng::RngStream rs(seed, 9009);
  for (int t = 0; t < 100; ++t) {
    const int n = (t % 2 == 0) ? 3 : 4;
    const int m = (t % 2 == 0) ? 1 : 2;
    const repn::GroupElement g1 = conditioned_special(n, rs);
    const repn::GroupElement g2 = conditioned_special(n, rs);
    const repn::SymTraceless y = repn::random_traceless(n, m, rs);
    const cosgrass::GrassFunction f = repn::omega_function(y, n, m);
    const stiefel::StiefelPoint v = stiefel::haar_sample(n, m, rs);
    const Cplx l(2.0 * rs.uniform01() - 1.0, 2.0 * rs.uniform01() - 1.0);
    const repn::GroupElement g12 =
        repn::GroupElement::special(g1.mat * g2.mat);
    const Cplx lhs = repn::pi_apply(g12, l, f, v);
    const Cplx rhs = repn::pi_apply(g1, l, repn::pi_operator(g2, l, f), v);
    tr.add(std::abs(lhs - rhs), 1e-9);
  }

  mc::McOptions opt;
  opt.samples = 100000;
  opt.seed = seed;
  opt.threads = threads;

  {  // change of variables on G(4,2)
    const repn::GroupElement g = conditioned_special(4, rs);
    const repn::SymTraceless y = repn::random_traceless(4, 2, rs);
    const cosgrass::GrassFunction f = repn::omega_function(y, 4, 2);
    const mc::McEstimate plain = mc::mc_run(
        [&f](rng::RngStream& r) {
          return f.eval(stiefel::haar_sample(4, 2, r));
        },
        opt);
    const mc::McEstimate moved = mc::mc_run(
        [&f, &g](rng::RngStream& r) {
          const stiefel::StiefelPoint v = stiefel::haar_sample(4, 2, r);
          const double jf = repn::jacobian_factor(g, v);
          const stiefel::PolarDecomposition pd =
              stiefel::rad_ang(g.mat * v.cols);
          return f.eval(pd.ang) * std::pow(jf, 4.0);
        },
        opt);
    tr.add(std::abs(plain.mean - moved.mean),
           4.0 * std::hypot(plain.std_err, moved.std_err));
  }

  {  // unitarity on the imaginary axis, S^2
    const repn::GroupElement g = conditioned_special(3, rs);
    const repn::SymTraceless y = repn::random_traceless(3, 1, rs);
    const cosgrass::GrassFunction f = repn::omega_function(y, 3, 1);
    const Cplx l(0.0, 0.8);
    const mc::McEstimate plain = mc::mc_run(
        [&f](rng::RngStream& r) {
          return Cplx(std::norm(f.eval(stiefel::haar_sample(3, 1, r))), 0.0);
        },
        opt);
    const mc::McEstimate moved = mc::mc_run(
        [&f, &g, l](rng::RngStream& r) {
          const stiefel::StiefelPoint v = stiefel::haar_sample(3, 1, r);
          return Cplx(std::norm(repn::pi_apply(g, l, f, v)), 0.0);
        },
        opt);
    tr.add(std::abs(plain.mean - moved.mean),
           4.0 * std::hypot(plain.std_err, moved.std_err));
  }
}

// 10: the intertwining relation on the sphere and on G(4,2).
void check_intertwining(PartTracker& tr, std::uint64_t seed, long long,
                        int) {
  rng::RngStream rs(seed, 9010);
  {
    zonal::ZonalCoefficients zf;
    zf.n = 3;
    zf.coeffs = {Cplx(0.4, 0.0), Cplx(0.0, 0.0), Cplx(1.0, 0.0),
                 Cplx(0.0, 0.0), Cplx(0.25, 0.0)};
    cosgrass::GrassFunction f;
    f.n = 3;
    f.m = 1;
    f.right_invariant = true;  // even band keeps f(-v) = f(v)
    f.eval = [zf](const stiefel::StiefelPoint& v) {
      return zonal::synthesize(zf, v.cols(0, 0));
    };
    for (int t = 0; t < 5; ++t) {
      const repn::GroupElement g = conditioned_special(3, rs);
      std::vector<stiefel::StiefelPoint> probes;
      probes.push_back(stiefel::haar_sample(3, 1, rs));
      probes.push_back(stiefel::haar_sample(3, 1, rs));
      const repn::IntertwineResult r = repn::intertwine_residual(
          g, Cplx(-0.5, 0.0), f, probes, 100000, seed + std::uint64_t(t));
      tr.add(r.residual, std::max(4.0 * r.sigma, 1e-5));
    }
  }
  {
    const repn::SymTraceless y = repn::random_traceless(4, 2, rs);
    const cosgrass::GrassFunction f = repn::omega_function(y, 4, 2);
    for (int t = 0; t < 2; ++t) {
      const repn::GroupElement g = conditioned_special(4, rs);
      std::vector<stiefel::StiefelPoint> probes;
      probes.push_back(stiefel::haar_sample(4, 2, rs));
      probes.push_back(stiefel::haar_sample(4, 2, rs));
      const repn::IntertwineResult r = repn::intertwine_residual(
          g, Cplx(0.5, 0.0), f, probes, 100000,
          seed + 100 + std::uint64_t(t));
      tr.add(r.residual, 4.0 * r.sigma);
    }
  }
}

// 11: the real pole list matches the gamma-factor pole flags exactly.
void check_pole_grid(PartTracker& tr, std::uint64_t, long long, int) {
  const std::pair<int, int> pairs[] = {{1, 1}, {1, 2}, {1, 3}, {2, 2},
                                       {2, 3}, {3, 3}, {2, 4}};
  int mismatches = 0;
  for (const auto& [m, k] : pairs) {
    const std::vector<double> poles = specfun::pole_set(m, k, -10.5);
    for (int i = 0; i <= 48; ++i) {
      const double l = -10.0 + 0.25 * i;
      bool in_set = false;
      for (double p : poles) {
        if (std::abs(p - l) < 1e-12) {
          in_set = true;
          break;
        }
      }
      const bool flagged =
          specfun::siegel_gamma(m, Cplx(0.5 * (l + k), 0.0)).is_pole;
      if (in_set != flagged) ++mismatches;
    }
  }
  // Exactness gauge: a single mismatch already doubles the unit bound.
  tr.add(2.0 * double(mismatches), 1.0);
}

struct CheckSpec {
  int id;
  const char* description;
  const char* method;
  void (*run)(PartTracker&, std::uint64_t, long long, int);
};

const CheckSpec kChecks[] = {
    {1, "sphere quadrature reproduces degree multipliers (rel 1e-6)",
     "quadrature", check_multiplier_quadrature},
    {2, "multiplier inversion product equals 1 (1e-12)", "closed-form",
     check_multiplier_inversion},
    {3, "multiplier at -1 equals equator-mean form (1e-10); equator means "
        "(1e-6)",
     "quadrature", check_funk_limit},
    {4, "constant-function transform matches zero-weight spectrum (4 sigma)",
     "mc", check_constant_transform},
    {5, "degree-2 eigenfunction on G(4,2) at 2.5 (4 sigma)", "mc",
     check_eigenfunction},
    {6, "spectrum recursion vs closed form (rel 1e-10)", "closed-form",
     check_recursion},
    {7, "spectral inversion product (1e-10); composition constant (rel "
        "1e-10)",
     "closed-form", check_spectral_inversion},
    {8, "normalized/plain spectrum coherence (rel 1e-12); rank-one agreement "
        "(rel 1e-12)",
     "closed-form", check_normalization},
    {9, "action cocycle (abs 1e-9); change of variables and unitarity (4 "
        "sigma)",
     "mc", check_group_action},
    {10, "intertwining residual on S^2 at -0.5 and G(4,2) at 0.5 (max(4 "
         "sigma, 1e-5))",
     "mc", check_intertwining},
    {11, "real pole grid matches gamma-factor pole flags (exact)",
     "closed-form", check_pole_grid},
};

std::vector<int> suite_ids(const std::string& suite) {
  if (suite == "sphere") return {1, 2, 3};
  if (suite == "grassmann") return {4};
  if (suite == "spectrum") return {6, 7, 8, 11};
  if (suite == "repn") return {5, 9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  throw InvalidArgument("run_suite: unknown suite '" + suite +
                        "' (sphere|grassmann|spectrum|repn|all)");
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed, long long samples,
                                   int threads) {
  if (samples < 1) throw InvalidArgument("run_suite: need samples >= 1");
  const std::vector<int> ids = suite_ids(suite);
  std::vector<CheckResult> out;
  for (int id : ids) {
    const CheckSpec& spec = kChecks[id - 1];
    CheckResult res;
    res.id = spec.id;
    res.description = spec.description;
    res.method = spec.method;
    res.tolerance = 1.0;
    PartTracker tr;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      spec.run(tr, seed, samples, threads);
      res.measured = tr.worst;
      res.passed = tr.worst <= 1.0;
    } catch (const std::exception& e) {
      res.measured = std::numeric_limits<double>::infinity();
      res.passed = false;
      res.description += std::string(" [error: ") + e.what() + "]";
    }
    const auto t1 = std::chrono::steady_clock::now();
    res.seconds = std::chrono::duration<double>(t1 - t0).count();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace cosform::verify
