#pragma once

#include <complex>
#include <vector>

namespace cosform {

using Cplx = std::complex<double>;

// Vector argument for the gamma function associated with the cone of positive
// definite matrices; scalar arguments broadcast to constant vectors.
using VectorExponent = std::vector<Cplx>;

// Value of a meromorphic function at one point.  Poles are represented, not
// thrown, so callers can track pole structure across parameter grids.
//
//   is_pole = false  =>  pole_order = 0 and value is finite.
//   is_pole = true, pole_order >= 1: actual pole of that order.
//   is_pole = true, pole_order = 0, indeterminate = true: a 0*inf gamma
//     collision (equal pole counts upstairs and downstairs).  The underlying
//     function is typically finite there but a direct product evaluation is
//     impossible; callers that need the value take a symmetric eps-limit and
//     set limit_evaluated on the result.
struct MeromorphicValue {
  Cplx value{0.0, 0.0};
  bool is_pole = false;
  int pole_order = 0;
  bool indeterminate = false;
  bool limit_evaluated = false;

  static MeromorphicValue finite(Cplx v) {
    MeromorphicValue r;
    r.value = v;
    return r;
  }
  static MeromorphicValue pole(int order) {
    MeromorphicValue r;
    r.is_pole = true;
    r.pole_order = order;
    return r;
  }
  static MeromorphicValue collision() {
    MeromorphicValue r;
    r.is_pole = true;
    r.indeterminate = true;
    return r;
  }
};

}  // namespace cosform
