#include <complex>
#include <vector>

#include "cosform/errors.hpp"
#include "cosform/specfun.hpp"
#include "cosform/spectrum.hpp"
#include "cosform/sphere.hpp"
#include "doctest.h"

using cosform::Cplx;
using cosform::InvalidArgument;
using cosform::MeromorphicValue;
using cosform::PoleError;
namespace sp = cosform::spectrum;
using sp::HighestWeight;
using sp::Rational;

namespace {

bool close(Cplx a, Cplx b, double rel = 1e-12, double abs_tol = 1e-14) {
  const double d = std::abs(a - b);
  return d <= abs_tol || d <= rel * std::abs(b);
}

HighestWeight weight(int n, int m, std::vector<int> mu) {
  return HighestWeight{n, m, std::move(mu)};
}

// Reference values below were frozen from an independent high-precision
// evaluation (50-digit arithmetic), rounded to 20 significant digits.

}  // namespace

TEST_CASE("weight validity") {
  CHECK(weight(4, 2, {2, 0}).valid());
  CHECK(weight(4, 2, {2, -2}).valid());  // split middle case only
  CHECK(weight(5, 2, {4, 2}).valid());
  CHECK(weight(3, 1, {0}).valid());
  CHECK(weight(6, 3, {4, 2, -2}).valid());

  CHECK(!weight(4, 2, {1, 0}).valid());    // odd entry
  CHECK(!weight(4, 2, {0, 2}).valid());    // increasing
  CHECK(!weight(5, 2, {2, -2}).valid());   // negative outside 2m = n
  CHECK(!weight(4, 2, {2, -4}).valid());   // not dominated
  CHECK(!weight(6, 3, {2, 0, -2}).valid());
  CHECK(!weight(3, 1, {-2}).valid());
  CHECK(!weight(4, 2, {2}).valid());       // wrong length

  CHECK(weight(4, 2, {2, -2}).degree() == 4);
  CHECK(weight(3, 1, {6}).degree() == 6);
}

TEST_CASE("lattice enumeration") {
  const std::vector<std::vector<int>> want42 = {
      {0, 0}, {2, -2}, {2, 0}, {2, 2}, {4, 0}};
  const std::vector<HighestWeight> got42 = sp::lattice(4, 2, 4);
  REQUIRE(got42.size() == want42.size());
  for (size_t i = 0; i < want42.size(); ++i) {
    CHECK(got42[i].mu == want42[i]);
    CHECK(got42[i].valid());
  }

  const std::vector<std::vector<int>> want52 = {{0, 0}, {2, 0}, {2, 2}, {4, 0}};
  const std::vector<HighestWeight> got52 = sp::lattice(5, 2, 4);
  REQUIRE(got52.size() == want52.size());
  for (size_t i = 0; i < want52.size(); ++i) CHECK(got52[i].mu == want52[i]);

  const std::vector<HighestWeight> line = sp::lattice(3, 1, 8);
  REQUIRE(line.size() == 5);
  for (int d = 0; d <= 4; ++d) CHECK(line[d].mu == std::vector<int>{2 * d});

  const std::vector<HighestWeight> rank3 = sp::lattice(6, 3, 2);
  REQUIRE(rank3.size() == 2);
  CHECK(rank3[0].mu == std::vector<int>{0, 0, 0});
  CHECK(rank3[1].mu == std::vector<int>{2, 0, 0});

  CHECK_THROWS_AS(sp::lattice(4, 0, 2), InvalidArgument);
  CHECK_THROWS_AS(sp::lattice(4, 2, -1), InvalidArgument);
}

TEST_CASE("root data") {
  const sp::RootDatum r31 = sp::root_system(3, 1);
  REQUIRE(r31.rho.size() == 1);
  CHECK(r31.rho[0] == Rational(1, 2));
  REQUIRE(r31.roots.size() == 2);
  CHECK(r31.roots[0].multiplicity == 1);  // n - 2m = 1

  const sp::RootDatum r42 = sp::root_system(4, 2);
  REQUIRE(r42.rho.size() == 2);
  CHECK(r42.rho[0] == Rational(1));
  CHECK(r42.rho[1] == Rational(0));
  // Split middle case: no short roots survive.
  for (const sp::Root& root : r42.roots) {
    int nz = 0;
    for (int c : root.coeff) nz += (c != 0);
    CHECK(nz == 2);
    CHECK(root.multiplicity == 1);
  }

  const sp::RootDatum r52 = sp::root_system(5, 2);
  REQUIRE(r52.rho.size() == 2);
  CHECK(r52.rho[0] == Rational(3, 2));
  CHECK(r52.rho[1] == Rational(1, 2));
  int short_count = 0;
  for (const sp::Root& root : r52.roots) {
    int nz = 0;
    for (int c : root.coeff) nz += (c != 0);
    if (nz == 1) {
      ++short_count;
      CHECK(root.multiplicity == 1);  // n - 2m
    }
  }
  CHECK(short_count == 4);  // +-eps_1, +-eps_2

  const sp::RootDatum r62 = sp::root_system(6, 2);
  for (const sp::Root& root : r62.roots) {
    int nz = 0;
    for (int c : root.coeff) nz += (c != 0);
    if (nz == 1) CHECK(root.multiplicity == 2);
  }

  // rho_j = (n - 2j)/2 in one-based coordinates.
  for (auto [n, m] : std::vector<std::pair<int, int>>{
           {3, 1}, {4, 2}, {5, 2}, {6, 3}, {7, 3}, {9, 4}}) {
    const sp::RootDatum rd = sp::root_system(n, m);
    for (int j = 0; j < m; ++j)
      CHECK(rd.rho[j] == Rational(n - 2 * (j + 1), 2));
  }

  CHECK_THROWS_AS(sp::root_system(4, 3), InvalidArgument);
}

TEST_CASE("omega eigenvalues") {
  CHECK(sp::omega_eigenvalue(weight(4, 2, {0, 0})) == Rational(0));
  CHECK(sp::omega_eigenvalue(weight(3, 1, {2})) == Rational(2));
  CHECK(sp::omega_eigenvalue(weight(4, 2, {2, 0})) == Rational(4));
  CHECK(sp::omega_eigenvalue(weight(4, 2, {2, 2})) == Rational(6));
  CHECK(sp::omega_eigenvalue(weight(4, 2, {2, -2})) == Rational(6));
  CHECK(sp::omega_eigenvalue(weight(4, 2, {4, 0})) == Rational(12));
  CHECK(sp::omega_eigenvalue(weight(5, 2, {2, 0})) == Rational(6));
  CHECK(sp::omega_eigenvalue(weight(6, 3, {2, 0, 0})) == Rational(9));

  // Rank one reduces to the classical sphere eigenvalue.
  for (int n : {3, 4, 5})
    for (int j = 0; j <= 8; j += 2)
      CHECK(sp::omega_eigenvalue(weight(n, 1, {j})) ==
            Rational((n - 1) * j * (j + n - 2), 2 * n));

  // <mu + 2 rho, mu> against the root datum, exactly in rationals.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{5, 2}, {6, 3}}) {
    const sp::RootDatum rd = sp::root_system(n, m);
    const Rational pref(m * (n - m), 2 * n);
    for (const HighestWeight& w : sp::lattice(n, m, 6)) {
      Rational dot(0);
      for (int j = 0; j < m; ++j)
        dot += Rational(w.mu[j]) * (Rational(w.mu[j]) + 2 * rd.rho[j]);
      CHECK(sp::omega_eigenvalue(w) == pref * dot);
    }
  }

  CHECK_THROWS_AS(sp::omega_eigenvalue(weight(4, 2, {1, 0})), InvalidArgument);
}

TEST_CASE("neighbors") {
  const auto mus = [](const std::vector<HighestWeight>& ws) {
    std::vector<std::vector<int>> out;
    for (const HighestWeight& w : ws) out.push_back(w.mu);
    return out;
  };

  CHECK(mus(sp::neighbors(weight(4, 2, {2, 0}))) ==
        std::vector<std::vector<int>>{{0, 0}, {2, -2}, {2, 2}, {4, 0}});
  CHECK(mus(sp::neighbors(weight(5, 2, {2, 2}))) ==
        std::vector<std::vector<int>>{{2, 0}, {4, 2}});
  CHECK(mus(sp::neighbors(weight(5, 2, {0, 0}))) ==
        std::vector<std::vector<int>>{{2, 0}});
  CHECK(mus(sp::neighbors(weight(4, 2, {2, -2}))) ==
        std::vector<std::vector<int>>{{2, 0}, {4, -2}});

  for (const HighestWeight& w : sp::neighbors(weight(6, 3, {4, 2, 0})))
    CHECK(w.valid());
  CHECK_THROWS_AS(sp::neighbors(weight(4, 2, {0, 2})), InvalidArgument);
}

TEST_CASE("eta frozen values") {
  // Zero weight (the transform of constants).
  const MeromorphicValue a = sp::eta(weight(4, 2, {0, 0}), Cplx(2.5, 0.0));
  CHECK(!a.is_pole);
  CHECK(!a.limit_evaluated);
  CHECK(close(a.value, 8.0 / 63.0, 1e-12));

  // lambda = 2 cancels a numerator/denominator pair bit-for-bit, so the
  // clean value 1/6 comes out without any limit step.
  const MeromorphicValue b = sp::eta(weight(4, 2, {0, 0}), Cplx(2.0, 0.0));
  CHECK(!b.is_pole);
  CHECK(!b.limit_evaluated);
  CHECK(close(b.value, 1.0 / 6.0, 1e-12));

  CHECK(close(sp::eta(weight(5, 2, {0, 0}), Cplx(1.5, 0.0)).value,
              16.0 / 105.0, 1e-12));
  CHECK(close(sp::eta(weight(4, 2, {2, 0}), Cplx(2.5, 0.0)).value,
              40.0 / 819.0, 1e-12));
  CHECK(close(sp::eta(weight(4, 2, {2, 0}), Cplx(0.5, 0.0)).value,
              8.0 / 135.0, 1e-12));
  CHECK(close(sp::eta(weight(3, 1, {2}), Cplx(-0.5, 0.0)).value, -0.4, 1e-12));
  CHECK(close(sp::eta(weight(4, 1, {0}), Cplx(0.7, 0.0)).value,
              0.52171515425353427181, 1e-12));
  CHECK(close(sp::eta(weight(5, 2, {2, 2}), Cplx(0.5, 0.25)).value,
              Cplx(0.015051382980796781458, 0.0029219983310560090254),
              1e-12));

  // On a nonzero weight lambda = 2 really is a gamma collision; the value
  // 1/18 only exists as the symmetric limit.
  const MeromorphicValue lim = sp::eta(weight(4, 2, {2, 0}), Cplx(2.0, 0.0));
  CHECK(!lim.is_pole);
  CHECK(lim.limit_evaluated);
  CHECK(close(lim.value, 1.0 / 18.0, 1e-9));

  CHECK_THROWS_AS(sp::eta(weight(4, 2, {1, 0}), Cplx(0.5, 0.0)),
                  InvalidArgument);
}

TEST_CASE("eta_normalized frozen values") {
  CHECK(close(sp::eta_normalized(weight(4, 2, {2, 0}), Cplx(-2.0, 0.0)).value,
              -1.0, 1e-12));
  CHECK(close(sp::eta_normalized(weight(5, 2, {2, 0}), Cplx(-2.0, 0.0)).value,
              -4.0 / 3.0, 1e-12));
  CHECK(close(sp::eta_normalized(weight(3, 1, {2}), Cplx(-1.0, 0.0)).value,
              -0.88622692545275801365, 1e-12));
  CHECK(close(sp::eta_normalized(weight(4, 2, {0, 0}), Cplx(2.5, 0.0)).value,
              2.6419148400100781053, 1e-12));
}

TEST_CASE("eta_normalized is the gamma-factor times eta") {
  for (Cplx lam : {Cplx(0.37, 0.21), Cplx(-1.43, 0.77), Cplx(2.66, -0.34)}) {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}}) {
      for (const HighestWeight& w : sp::lattice(n, m, 4)) {
        if (w.mu.back() < 0) continue;
        const Cplx lhs = sp::eta_normalized(w, lam).value;
        const Cplx rhs =
            cosform::specfun::gamma_grassmann_norm(n, m, m, lam).value *
            sp::eta(w, lam).value;
        CHECK(close(lhs, rhs, 1e-11));
      }
    }
  }
}

TEST_CASE("eta_normalized inversion identity") {
  for (Cplx lam : {Cplx(0.63, 0.4), Cplx(-2.35, 1.2)}) {
    for (const HighestWeight& w : sp::lattice(4, 2, 4)) {
      const Cplx prod = sp::eta_normalized(w, lam).value *
                        sp::eta_normalized(w, -lam - 4.0).value;
      CHECK(close(prod, 1.0, 1e-11));
    }
  }
  // Rank one normalized spectrum coincides with the sphere multiplier.
  for (int n : {3, 4}) {
    for (int j : {0, 2, 4, 6}) {
      const Cplx lam(0.47, -0.9);
      CHECK(close(sp::eta_normalized(weight(n, 1, {j}), lam).value,
                  cosform::sphere::multiplier(n, j, lam).value, 1e-12));
    }
  }
}

TEST_CASE("eta_ratio recursion") {
  // Closed form against the direct quotient of eta values.
  const Cplx lam(2.7, 0.0);
  const Cplx r1 = sp::eta_ratio(4, {2, 0}, 1, lam);
  CHECK(close(r1, Cplx(0.7 / 8.7, 0.0), 1e-13));
  CHECK(close(sp::eta(weight(4, 2, {4, 0}), lam).value /
                  sp::eta(weight(4, 2, {2, 0}), lam).value,
              r1, 1e-11));

  const Cplx lam2(1.3, 0.0);
  const Cplx r2 = sp::eta_ratio(5, {2, 0}, 2, lam2);
  CHECK(close(r2, Cplx(2.3 / 5.3, 0.0), 1e-13));
  CHECK(close(sp::eta(weight(5, 2, {2, 2}), lam2).value /
                  sp::eta(weight(5, 2, {2, 0}), lam2).value,
              r2, 1e-11));

  // m = 1: the same recursion steps the sphere multipliers.
  const Cplx lam3(0.9, 0.35);
  CHECK(close(cosform::sphere::multiplier(3, 4, lam3).value /
                  cosform::sphere::multiplier(3, 2, lam3).value,
              sp::eta_ratio(3, {2}, 1, lam3), 1e-11));

  CHECK_THROWS_AS(sp::eta_ratio(4, {2, 0}, 1, Cplx(-6.0, 0.0)), PoleError);
  CHECK_THROWS_AS(sp::eta_ratio(4, {2, 0}, 3, Cplx(1.0, 0.0)),
                  InvalidArgument);
}

TEST_CASE("c function and the intertwining product") {
  // Frozen: c(0) on (3,1) is the zero-weight spectrum at -3/2, exactly -2.
  CHECK(close(sp::c_function(3, 1, Cplx(0.0, 0.0)).value, -2.0, 1e-12));
  // c(lambda) c(-lambda) = 4 at lambda = 0 on (3,1).
  CHECK(close(sp::eta_product(3, 1, Cplx(0.0, 0.0)).value, 4.0, 1e-12));

  // c_function is the shifted zero-weight eta.
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 1}, {5, 2}}) {
    const Cplx lam(0.8, 0.3);
    const HighestWeight zero{n, m, std::vector<int>(m, 0)};
    CHECK(close(sp::c_function(n, m, lam).value,
                sp::eta(zero, lam - 0.5 * double(n)).value, 1e-12));
    // Symmetry and factorization of the product.
    CHECK(close(sp::eta_product(n, m, lam).value,
                sp::eta_product(n, m, -lam).value, 1e-11));
    CHECK(close(sp::eta_product(n, m, lam).value,
                sp::c_function(n, m, lam).value *
                    sp::c_function(n, m, -lam).value,
                1e-11));
  }

  // The product equals the composition constant of the transform pair.
  CHECK(close(sp::eta_product(3, 1, Cplx(0.7, 0.0)).value,
              cosform::specfun::zeta_rank(3, 1, Cplx(-0.8, 0.0)).value,
              1e-11));
  CHECK(close(sp::eta_product(4, 2, Cplx(1.3, 0.6)).value,
              cosform::specfun::zeta_rank(4, 2, Cplx(-0.7, 0.6)).value,
              1e-11));

  // At lambda = 3 on (4,2) both sides only exist as a limit, value 1/18.
  const MeromorphicValue p = sp::eta_product(4, 2, Cplx(3.0, 0.0));
  CHECK(!p.is_pole);
  CHECK(p.limit_evaluated);
  CHECK(close(p.value, 1.0 / 18.0, 1e-8));

  CHECK_THROWS_AS(sp::c_function(4, 3, Cplx(0.5, 0.0)), InvalidArgument);
  CHECK_THROWS_AS(sp::eta_product(4, 3, Cplx(0.5, 0.0)), InvalidArgument);
}
