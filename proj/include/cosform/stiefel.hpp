#pragma once

#include <Eigen/Dense>

#include "cosform/rng.hpp"
#include "json.hpp"

namespace cosform::stiefel {

// Orthonormal n x m frame, a point of V_{n,m}.  Modulo right O(m) rotations
// it represents the subspace it spans.
struct StiefelPoint {
  Eigen::MatrixXd cols;

  // Validates n >= m >= 1 and ||cols^T cols - I||_max <= 1e-12.
  explicit StiefelPoint(Eigen::MatrixXd c);

  int n() const { return static_cast<int>(cols.rows()); }
  int m() const { return static_cast<int>(cols.cols()); }

  // {"n": n, "m": m, "cols": [row-major entries]}
  nlohmann::json to_json() const;
  static StiefelPoint from_json(const nlohmann::json& j);
};

// Subspace wrapper; consumers must be invariant under rep -> rep * Q.
struct GrassmannPoint {
  StiefelPoint rep;
};

struct PolarDecomposition {
  StiefelPoint ang;     // orthonormal factor
  Eigen::MatrixXd rad;  // m x m symmetric positive definite
};

// Invariant sample of V_{n,m}: Gaussian matrix, thin QR, R-diagonal signs
// flipped positive so the map is exactly distribution-preserving.
StiefelPoint haar_sample(int n, int m, rng::RngStream& rs);

// |u^T v|_m = det(v^T u u^T v)^{1/2} in [0, 1]; v must be the frame of rank
// at most that of u.
double cos_angle(const StiefelPoint& u, const StiefelPoint& v);

// x = ang * rad with ang in V_{n,m}, rad = (x^T x)^{1/2}; throws
// SingularInputError when the smallest singular value is <= 1e-12.
PolarDecomposition rad_ang(const Eigen::MatrixXd& x);

// Orthonormal basis of the orthogonal complement of span(u).
StiefelPoint orthocomplement(const StiefelPoint& u);

// Orthogonal projection v v^T onto span(v).
Eigen::MatrixXd projector(const StiefelPoint& v);

}  // namespace cosform::stiefel
