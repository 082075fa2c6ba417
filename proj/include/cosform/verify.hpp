#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cosform::verify {

struct CheckResult {
  int id = 0;
  std::string description;
  bool passed = false;
  // Worst observed error divided by its part tolerance; <= 1 passes.  Checks
  // with several ingredients (different tolerances per part) all reduce to
  // this dimensionless form.
  double measured = 0.0;
  double tolerance = 1.0;
  double seconds = 0.0;
  std::string method;  // closed-form | quadrature | mc | limit-evaluated
};

// suite: sphere | grassmann | spectrum | repn | all.  samples feeds the
// Monte Carlo checks; closed-form checks ignore it.
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed, long long samples,
                                   int threads = 0);

}  // namespace cosform::verify
