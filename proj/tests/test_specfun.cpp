#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "cosform/specfun.hpp"
#include "doctest.h"

using cosform::Cplx;
using cosform::InvalidArgument;
using cosform::MeromorphicValue;
using cosform::PoleError;
namespace sf = cosform::specfun;

namespace {

bool close(Cplx a, Cplx b, double rel = 1e-12, double abs_tol = 1e-14) {
  const double d = std::abs(a - b);
  return d <= abs_tol || d <= rel * std::abs(b);
}

// Reference values below were frozen from an independent high-precision
// evaluation (50-digit arithmetic), rounded to 20 significant digits.

}  // namespace

TEST_CASE("log_gamma reference values") {
  CHECK(std::abs(sf::log_gamma(Cplx(1.0, 0.0))) <= 5e-15);
  CHECK(close(sf::log_gamma(Cplx(0.5, 0.0)), 0.57236494292470008707));
  CHECK(close(sf::log_gamma(Cplx(0.001, 0.0)), 6.9071788853838536617));
  CHECK(close(sf::log_gamma(Cplx(5.5, -3.3)),
              Cplx(2.9391476787354148093, -5.5284419499993885941), 1e-13));
  // Gamma(1+i), via exponentiation.
  CHECK(close(std::exp(sf::log_gamma(Cplx(1.0, 1.0))),
              Cplx(0.49801566811835604271, -0.15494982830181068512), 1e-13));
  // Left half plane goes through the reflection formula.  The log may differ
  // from the principal branch by 2*pi*i, so compare exponentials.
  CHECK(close(std::exp(sf::log_gamma(Cplx(-2.5, 0.0))),
              Cplx(-0.94530872048294188547, 0.0), 1e-13, 5e-14));
  CHECK(close(std::exp(sf::log_gamma(Cplx(-3.7, 2.1))),
              std::exp(Cplx(-6.9927710082527359928, -10.095443779952701889)),
              5e-13));
}

TEST_CASE("log_gamma pole handling") {
  CHECK_THROWS_AS(sf::log_gamma(Cplx(0.0, 0.0)), PoleError);
  CHECK_THROWS_AS(sf::log_gamma(Cplx(-1.0, 0.0)), PoleError);
  CHECK_THROWS_AS(sf::log_gamma(Cplx(-7.0, 0.0)), PoleError);
  CHECK_THROWS_AS(sf::log_gamma(Cplx(-3.0, 5e-10)), PoleError);
  CHECK_NOTHROW(sf::log_gamma(Cplx(-3.0 + 1e-6, 0.0)));

  CHECK(sf::is_gamma_pole(Cplx(-2.0 + 5e-10, 0.0)));
  CHECK(!sf::is_gamma_pole(Cplx(-2.0 + 1e-8, 0.0)));
  CHECK(!sf::is_gamma_pole(Cplx(-2.0, 1e-8)));
  CHECK(!sf::is_gamma_pole(Cplx(0.5, 0.0)));
  CHECK(!sf::is_gamma_pole(Cplx(1.0, 0.0)));
}

TEST_CASE("log_gamma satisfies the recursion off the real axis") {
  std::mt19937 gen(20260814u);
  std::uniform_real_distribution<double> re(-4.6, 4.9), im(0.25, 2.0);
  for (int i = 0; i < 50; ++i) {
    const Cplx z(re(gen), im(gen));
    const Cplx ratio = std::exp(sf::log_gamma(z + 1.0) - sf::log_gamma(z)) / z;
    CHECK(close(ratio, 1.0, 1e-12));
  }
}

TEST_CASE("gamma product bookkeeping") {
  SUBCASE("identical factors cancel exactly") {
    sf::GammaProduct p;
    p.mul_gamma(Cplx(0.3, 0.0));
    p.div_gamma(Cplx(0.3, 0.0));
    const MeromorphicValue v = p.eval();
    CHECK(!v.is_pole);
    CHECK(v.value == Cplx(1.0, 0.0));
  }
  SUBCASE("numerator pole") {
    sf::GammaProduct p;
    p.mul_gamma(Cplx(-2.0, 0.0));
    const MeromorphicValue v = p.eval();
    CHECK(v.is_pole);
    CHECK(v.pole_order == 1);
  }
  SUBCASE("two numerator poles") {
    sf::GammaProduct p;
    p.mul_gamma(Cplx(-2.0, 0.0));
    p.mul_gamma(Cplx(0.0, 0.0));
    CHECK(p.eval().pole_order == 2);
  }
  SUBCASE("denominator pole gives an exact zero") {
    sf::GammaProduct p;
    p.mul_gamma(Cplx(1.7, 0.0));
    p.div_gamma(Cplx(-5.0, 0.0));
    const MeromorphicValue v = p.eval();
    CHECK(!v.is_pole);
    CHECK(v.value == Cplx(0.0, 0.0));
  }
  SUBCASE("pole against pole at distinct arguments is a collision") {
    sf::GammaProduct p;
    p.mul_gamma(Cplx(-2.0, 0.0));
    p.div_gamma(Cplx(-5.0, 0.0));
    const MeromorphicValue v = p.eval();
    CHECK(v.is_pole);
    CHECK(v.pole_order == 0);
    CHECK(v.indeterminate);
  }
  SUBCASE("real constants keep the result exactly real") {
    sf::GammaProduct p;
    p.mul(Cplx(-2.0, 0.0));
    p.mul_gamma(Cplx(0.5, 0.0));
    p.div_gamma(Cplx(2.5, 0.0));
    const MeromorphicValue v = p.eval();
    CHECK(v.value.imag() == 0.0);
    CHECK(close(v.value, -8.0 / 3.0, 1e-14));
  }
  SUBCASE("pi powers") {
    sf::GammaProduct p;
    p.mul_pi_power(0.5);
    CHECK(close(p.eval().value, 1.7724538509055160273, 1e-15));
  }
}

TEST_CASE("removable collisions resolve to the two-sided limit") {
  // Gamma(l-1)/Gamma(l-2) = l-2, indeterminate at l = 1, limit -1.
  auto f = [](Cplx lam) {
    sf::GammaProduct p;
    p.mul_gamma(lam - 1.0);
    p.div_gamma(lam - 2.0);
    return p.eval();
  };
  const MeromorphicValue at1 = sf::resolve_removable(f, Cplx(1.0, 0.0));
  CHECK(!at1.is_pole);
  CHECK(at1.limit_evaluated);
  CHECK(close(at1.value, -1.0, 1e-9));

  const MeromorphicValue at_half = sf::resolve_removable(f, Cplx(0.5, 0.0));
  CHECK(!at_half.limit_evaluated);
  CHECK(close(at_half.value, -1.5, 1e-13));
}

TEST_CASE("siegel gamma") {
  CHECK(close(sf::siegel_gamma(1, Cplx(2.5, 0.0)).value, 1.3293403881791370205,
              1e-13));
  CHECK(close(sf::siegel_gamma(2, Cplx(2.0, 0.0)).value, 1.5707963267948966192,
              1e-13));
  CHECK(close(sf::siegel_gamma(2, Cplx(0.75, 0.5)).value,
              Cplx(-0.17874616236642841282, -2.3060074855959835597), 1e-13));
  CHECK(close(sf::siegel_gamma(3, Cplx(2.2, 0.0)).value, 5.1184952949575427212,
              1e-13));

  CHECK(sf::siegel_gamma(2, Cplx(0.5, 0.0)).is_pole);
  CHECK(sf::siegel_gamma(2, Cplx(0.0, 0.0)).pole_order == 1);
  CHECK(sf::siegel_gamma(2, Cplx(-1.0, 0.0)).pole_order == 1);
  CHECK(sf::siegel_gamma(3, Cplx(0.0, 0.0)).pole_order == 2);
  CHECK_THROWS_AS(sf::siegel_gamma(0, Cplx(1.0, 0.0)), InvalidArgument);
}

TEST_CASE("siegel gamma recursion") {
  std::mt19937 gen(7u);
  std::uniform_real_distribution<double> re(0.6, 3.0), im(-2.0, 2.0);
  for (int m = 1; m <= 3; ++m) {
    for (int i = 0; i < 30; ++i) {
      const Cplx a(re(gen), im(gen));
      const Cplx lhs =
          sf::siegel_gamma(m, a + 1.0).value / sf::siegel_gamma(m, a).value;
      Cplx rhs = 1.0;
      for (int j = 0; j < m; ++j) rhs *= a - 0.5 * j;
      CHECK(close(lhs, rhs, 1e-12));
    }
  }
}

TEST_CASE("vector-argument gamma") {
  // Constant vector reduces to the Siegel gamma.
  std::mt19937 gen(11u);
  std::uniform_real_distribution<double> re(0.6, 3.5), im(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    const int m = 1 + i % 4;
    const Cplx a(re(gen), im(gen));
    CHECK(close(sf::gamma_omega(m, a).value, sf::siegel_gamma(m, a).value,
                1e-13));
  }

  CHECK(close(sf::gamma_omega(1, cosform::VectorExponent{Cplx(2.5, 0.0)}).value,
              1.3293403881791370205, 1e-13));
  CHECK(sf::gamma_omega(2, cosform::VectorExponent{Cplx(1.0, 0.0),
                                                   Cplx(0.5, 0.0)})
            .is_pole);
  CHECK_THROWS_AS(sf::gamma_omega(2, cosform::VectorExponent{Cplx(1.0, 0.0)}),
                  InvalidArgument);
}

TEST_CASE("sphere normalization constant") {
  CHECK(close(sf::gamma_sphere_norm(3, Cplx(-2.0, 0.0)).value,
              -0.56418958354775628695, 1e-13));
  CHECK(close(sf::gamma_sphere_norm(4, Cplx(0.7, 0.0)).value,
              -6.3037464979927839708, 1e-13));

  for (double lam : {0.0, 2.0, 4.0, 6.0})
    CHECK(sf::gamma_sphere_norm(3, Cplx(lam, 0.0)).is_pole);
  for (double lam : {-1.0, -3.0, -5.0}) {
    const MeromorphicValue v = sf::gamma_sphere_norm(3, Cplx(lam, 0.0));
    CHECK(!v.is_pole);
    CHECK(v.value == Cplx(0.0, 0.0));
  }
}

TEST_CASE("grassmann normalization constant") {
  SUBCASE("rank one reduces to the sphere constant") {
    const Cplx grid[] = {Cplx(-2.5, 0.0), Cplx(-0.9, 0.0), Cplx(0.5, 0.5),
                         Cplx(1.3, 0.0), Cplx(-4.2, 0.8)};
    for (int n : {3, 5})
      for (const Cplx& lam : grid)
        CHECK(close(sf::gamma_grassmann_norm(n, 1, 1, lam).value,
                    sf::gamma_sphere_norm(n, lam).value, 1e-13));
    CHECK(close(sf::gamma_grassmann_norm(3, 1, 1, Cplx(-0.5, 0.0)).value, 2.0,
                1e-14));
  }
  SUBCASE("reference value") {
    CHECK(close(sf::gamma_grassmann_norm(4, 2, 2, Cplx(0.6, 0.0)).value,
                47.527559190163712131, 1e-13));
  }
  SUBCASE("pole and zero structure") {
    CHECK(sf::gamma_grassmann_norm(4, 2, 2, Cplx(-1.0, 0.0)).is_pole);
    CHECK(sf::gamma_grassmann_norm(4, 2, 2, Cplx(0.0, 0.0)).is_pole);
    CHECK(sf::gamma_grassmann_norm(4, 2, 2, Cplx(0.0, 0.0)).pole_order == 1);
    CHECK(sf::gamma_grassmann_norm(4, 2, 2, Cplx(1.0, 0.0)).is_pole);
    CHECK(sf::gamma_grassmann_norm(4, 2, 2, Cplx(2.0, 0.0)).is_pole);
    const MeromorphicValue zero =
        sf::gamma_grassmann_norm(4, 2, 2, Cplx(-2.0, 0.0));
    CHECK(!zero.is_pole);
    CHECK(zero.value == Cplx(0.0, 0.0));
  }
  CHECK_THROWS_AS(sf::gamma_grassmann_norm(4, 4, 2, Cplx(0.5, 0.0)),
                  InvalidArgument);
}

TEST_CASE("composition constant zeta") {
  CHECK(close(sf::zeta_rank(3, 1, Cplx(-1.5, 0.0)).value, 4.0, 1e-13));
  CHECK(close(sf::zeta_rank(4, 2, Cplx(0.3, 0.4)).value,
              Cplx(0.11726939905890974577, -0.1122436523695082838), 1e-12));
  CHECK(close(sf::zeta_rank(5, 2, Cplx(0.75, 0.0)).value,
              -0.040723295842913067793, 1e-12));

  SUBCASE("removable point at integer lambda") {
    const MeromorphicValue v = sf::zeta_rank(4, 2, Cplx(1.0, 0.0));
    CHECK(!v.is_pole);
    CHECK(v.limit_evaluated);
    CHECK(close(v.value, 1.0 / 18.0, 1e-9));
  }
  SUBCASE("symmetry under lambda <-> -lambda-n") {
    const Cplx grid[] = {Cplx(0.3, 0.4), Cplx(-1.7, 0.2), Cplx(0.75, 0.0),
                         Cplx(2.5, -1.1)};
    const int nm[][2] = {{3, 1}, {4, 2}, {5, 2}};
    for (const auto& p : nm)
      for (const Cplx& lam : grid)
        CHECK(close(sf::zeta_rank(p[0], p[1], lam).value,
                    sf::zeta_rank(p[0], p[1], -lam - double(p[0])).value,
                    1e-12));
  }
  CHECK_THROWS_AS(sf::zeta_rank(3, 2, Cplx(0.5, 0.0)), InvalidArgument);
}

TEST_CASE("pole set") {
  CHECK(sf::pole_set(1, 1, -5.0) == std::vector<double>{-1.0, -3.0, -5.0});
  CHECK(sf::pole_set(2, 2, -3.0) == std::vector<double>{-1.0, -2.0, -3.0});
  CHECK(sf::pole_set(1, 3, 0.0).empty());

  SUBCASE("matches the pole flags of the gamma factor on a grid") {
    const int mk[][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {2, 4}};
    for (const auto& p : mk) {
      const std::vector<double> set = sf::pole_set(p[0], p[1], -10.0);
      for (int i = 0; i <= 48; ++i) {
        const double lam = -10.0 + 0.25 * i;
        const bool in_set = std::find(set.begin(), set.end(), lam) != set.end();
        const bool flagged =
            sf::siegel_gamma(p[0], Cplx(0.5 * (lam + p[1]), 0.0)).is_pole;
        CHECK(in_set == flagged);
      }
    }
  }
}
