#include "cosform/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "cosform/errors.hpp"

namespace cosform::spectrum {

bool HighestWeight::valid() const {
  if (n < 2 || m < 1 || m > n - 1) return false;
  if (static_cast<int>(mu.size()) != m) return false;
  for (int x : mu)
    if (x % 2 != 0) return false;
  for (int j = 0; j + 1 < m; ++j)
    if (mu[j] < mu[j + 1]) return false;
  if (2 * m == n) {
    // Split middle case: the last entry may flip sign, dominated in modulus.
    if (m >= 2 && mu[m - 2] < std::abs(mu[m - 1])) return false;
  } else {
    if (mu[m - 1] < 0) return false;
  }
  return true;
}

int HighestWeight::degree() const {
  int d = 0;
  for (int x : mu) d += std::abs(x);
  return d;
}

namespace {

void enumerate_decreasing(int slots, int budget, int maxv,
                          std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == slots) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v <= std::min(maxv, budget); v += 2) {
    cur.push_back(v);
    enumerate_decreasing(slots, budget - v, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HighestWeight> lattice(int n, int m, int degree_bound) {
  if (n < 2 || m < 1 || m > n - 1)
    throw InvalidArgument("lattice: need n >= 2, 1 <= m <= n-1");
  if (degree_bound < 0) throw InvalidArgument("lattice: negative bound");
  std::vector<std::vector<int>> raw;
  std::vector<int> cur;
  enumerate_decreasing(m, degree_bound, degree_bound, cur, raw);
  std::vector<HighestWeight> out;
  for (std::vector<int>& v : raw) {
    out.push_back(HighestWeight{n, m, v});
    if (2 * m == n && v[m - 1] > 0) {
      std::vector<int> flipped = v;
      flipped[m - 1] = -flipped[m - 1];
      out.push_back(HighestWeight{n, m, flipped});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HighestWeight& a, const HighestWeight& b) {
              return a.mu < b.mu;
            });
  return out;
}

RootDatum root_system(int n, int m) {
  if (m < 1 || 2 * m > n)
    throw InvalidArgument("root_system: need 1 <= m <= n - m");
  RootDatum rd;
  const int short_mult = n - 2 * m;
  if (short_mult > 0) {
    for (int i = 0; i < m; ++i) {
      for (int s : {1, -1}) {
        Root r;
        r.coeff.assign(m, 0);
        r.coeff[i] = s;
        r.multiplicity = short_mult;
        rd.roots.push_back(std::move(r));
      }
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          Root r;
          r.coeff.assign(m, 0);
          r.coeff[i] = si;
          r.coeff[j] = sj;
          r.multiplicity = 1;
          rd.roots.push_back(std::move(r));
        }
      }
    }
  }
  // rho: half the multiplicity-weighted sum of the roots whose leading
  // nonzero coefficient is positive.
  rd.rho.assign(m, Rational(0));
  for (const Root& r : rd.roots) {
    int lead = 0;
    while (lead < m && r.coeff[lead] == 0) ++lead;
    if (lead >= m || r.coeff[lead] < 0) continue;
    for (int t = 0; t < m; ++t)
      rd.rho[t] += Rational(r.coeff[t] * r.multiplicity, 2);
  }
  return rd;
}

Rational omega_eigenvalue(const HighestWeight& mu) {
  if (!mu.valid()) throw InvalidArgument("omega_eigenvalue: invalid weight");
  const long long n = mu.n, m = mu.m;
  Rational acc(0);
  for (int i = 0; i < mu.m; ++i) {
    const long long v = mu.mu[i];
    acc += Rational(v * v + v * (n - 2 * (i + 1)));
  }
  return Rational(m * (n - m), 2 * n) * acc;
}

std::vector<HighestWeight> neighbors(const HighestWeight& mu) {
  if (!mu.valid()) throw InvalidArgument("neighbors: invalid weight");
  std::vector<HighestWeight> out;
  for (int j = 0; j < mu.m; ++j) {
    for (int d : {2, -2}) {
      HighestWeight c = mu;
      c.mu[j] += d;
      if (c.valid()) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const HighestWeight& a, const HighestWeight& b) {
              return a.mu < b.mu;
            });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const HighestWeight& a, const HighestWeight& b) {
                          return a.mu == b.mu;
                        }),
            out.end());
  return out;
}

Cplx eta_ratio(int n, const std::vector<int>& mu, int j, Cplx lambda) {
  if (j < 1 || j > static_cast<int>(mu.size()))
    throw InvalidArgument("eta_ratio: index out of range");
  const double mj = double(mu[j - 1]);
  const Cplx num = lambda - mj + double(j - 1);
  const Cplx den = lambda + mj + double(n - j + 1);
  if (std::abs(den) <= 1e-9)
    throw PoleError("eta_ratio: denominator vanishes at this lambda");
  return num / den;
}

namespace {

// Shared factor shapes matter: arguments that must cancel bit-for-bit in
// GammaProduct::eval are all written as 0.5 * (...) - 0.5 * j.
MeromorphicValue eta_direct(const HighestWeight& hw, Cplx lambda,
                            bool normalized) {
  const int n = hw.n, m = hw.m;
  specfun::GammaProduct p;
  int abs_half = 0;
  for (int x : hw.mu) abs_half += x;
  abs_half /= 2;
  if (abs_half % 2 != 0) p.mul(Cplx(-1.0, 0.0));
  if (!normalized) {
    for (int j = 0; j < m; ++j) {
      p.mul_gamma(Cplx(0.5 * n - 0.5 * j, 0.0));
      p.div_gamma(Cplx(0.5 * m - 0.5 * j, 0.0));
      p.mul_gamma(0.5 * (lambda + double(m)) - 0.5 * j);
      p.div_gamma(0.5 * (Cplx(0.0, 0.0) - lambda) - 0.5 * j);
    }
  }
  for (int j = 0; j < m; ++j) {
    p.mul_gamma(0.5 * (Cplx(double(hw.mu[j]), 0.0) - lambda) - 0.5 * j);
    p.div_gamma(0.5 * (lambda + double(n) + double(hw.mu[j])) - 0.5 * j);
  }
  return p.eval();
}

}  // namespace

MeromorphicValue eta(const HighestWeight& mu, Cplx lambda) {
  if (!mu.valid()) throw InvalidArgument("eta: weight not in the lattice");
  const HighestWeight hw = mu;
  return specfun::resolve_removable(
      [&hw](Cplx l) { return eta_direct(hw, l, false); }, lambda);
}

MeromorphicValue eta_normalized(const HighestWeight& mu, Cplx lambda) {
  if (!mu.valid())
    throw InvalidArgument("eta_normalized: weight not in the lattice");
  const HighestWeight hw = mu;
  return specfun::resolve_removable(
      [&hw](Cplx l) { return eta_direct(hw, l, true); }, lambda);
}

MeromorphicValue c_function(int n, int m, Cplx lambda) {
  if (m < 1 || 2 * m > n)
    throw InvalidArgument("c_function: need 1 <= m <= n - m");
  HighestWeight zero{n, m, std::vector<int>(m, 0)};
  return eta(zero, lambda - 0.5 * double(n));
}

MeromorphicValue eta_product(int n, int m, Cplx lambda) {
  if (m < 1 || 2 * m > n)
    throw InvalidArgument("eta_product: need 1 <= m <= n - m");
  // Product of the two shifted zero-weight spectra, assembled inside a single
  // GammaProduct so removable collisions between the factors resolve.
  auto direct = [n, m](Cplx l) -> MeromorphicValue {
    specfun::GammaProduct p;
    const Cplx shifts[2] = {l - 0.5 * double(n), -l - 0.5 * double(n)};
    for (const Cplx& lp : shifts) {
      for (int j = 0; j < m; ++j) {
        p.mul_gamma(Cplx(0.5 * n - 0.5 * j, 0.0));
        p.div_gamma(Cplx(0.5 * m - 0.5 * j, 0.0));
        p.mul_gamma(0.5 * (lp + double(m)) - 0.5 * j);
        p.div_gamma(0.5 * (lp + double(n)) - 0.5 * j);
      }
    }
    return p.eval();
  };
  return specfun::resolve_removable(direct, lambda);
}

}  // namespace cosform::spectrum
