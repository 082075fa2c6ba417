#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "cosform/specfun.hpp"

namespace cosform::spectrum {

using Rational = boost::rational<long long>;

// Highest weight of a spherical K-type on G_{n,m}: even integers, weakly
// decreasing, nonnegative; in the split middle case 2m = n the last entry
// may be negative with mu_{m-1} >= |mu_m|.
struct HighestWeight {
  int n = 0;
  int m = 0;
  std::vector<int> mu;

  bool valid() const;
  int degree() const;  // sum of |mu_j|
};

// Restricted root c_1 eps_1 + ... + c_m eps_m with its multiplicity.
struct Root {
  std::vector<int> coeff;
  int multiplicity = 1;
};

struct RootDatum {
  std::vector<Root> roots;
  std::vector<Rational> rho;  // half the multiplicity-weighted positive sum
};

// All valid weights of degree <= degree_bound, lexicographically sorted.
std::vector<HighestWeight> lattice(int n, int m, int degree_bound);

// Restricted root system of G_{n,m} (rank m, requires 2m <= n): +-eps_i with
// multiplicity n - 2m and +-eps_i +- eps_j with multiplicity 1.
RootDatum root_system(int n, int m);

// Exact Casimir-normalized Laplacian eigenvalue on the K-type mu:
//   m(n-m)/(2n) * sum_j [ mu_j^2 + mu_j (n - 2j) ].
Rational omega_eigenvalue(const HighestWeight& mu);

// Weights mu +- 2 eps_j that stay in the lattice, lexicographically sorted.
std::vector<HighestWeight> neighbors(const HighestWeight& mu);

// eta_{mu + 2 eps_j}(lambda) / eta_mu(lambda)
//   = (lambda - mu_j + j - 1) / (lambda + mu_j + n - j + 1),  j one-based.
Cplx eta_ratio(int n, const std::vector<int>& mu, int j, Cplx lambda);

// K-spectrum of the transform C^lambda_{m,m} on the type mu.  Removable
// numerator/denominator collisions are limit-evaluated.
MeromorphicValue eta(const HighestWeight& mu, Cplx lambda);

// Spectrum of the normalized transform:
//   (-1)^{|mu|/2} Gamma_Omega((mu - lambda)/2) / Gamma_Omega((lambda + n + mu)/2).
MeromorphicValue eta_normalized(const HighestWeight& mu, Cplx lambda);

// c(lambda) = eta_0(lambda - n/2) and the intertwining product
// c(lambda) c(-lambda), which equals zeta_rank(n, m, lambda - n/2).
MeromorphicValue c_function(int n, int m, Cplx lambda);
MeromorphicValue eta_product(int n, int m, Cplx lambda);

}  // namespace cosform::spectrum
