#include "cosform/stiefel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "cosform/errors.hpp"

namespace cosform::stiefel {

StiefelPoint::StiefelPoint(Eigen::MatrixXd c) : cols(std::move(c)) {
  if (cols.rows() < 1 || cols.cols() < 1 || cols.rows() < cols.cols())
    throw InvalidArgument("StiefelPoint: need n >= m >= 1");
  const int m = static_cast<int>(cols.cols());
  const double err =
      (cols.transpose() * cols - Eigen::MatrixXd::Identity(m, m))
          .cwiseAbs()
          .maxCoeff();
  if (!(err <= 1e-12))
    throw InvalidArgument(
        "StiefelPoint: columns not orthonormal (max Gram deviation " +
        std::to_string(err) + ")");
}

nlohmann::json StiefelPoint::to_json() const {
  nlohmann::json flat = nlohmann::json::array();
  for (int r = 0; r < n(); ++r)
    for (int c = 0; c < m(); ++c) flat.push_back(cols(r, c));
  return nlohmann::json{{"n", n()}, {"m", m()}, {"cols", flat}};
}

StiefelPoint StiefelPoint::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  const int m = j.at("m").get<int>();
  const auto& flat = j.at("cols");
  if (n < 1 || m < 1 || !flat.is_array() ||
      static_cast<int>(flat.size()) != n * m)
    throw InvalidArgument("StiefelPoint: malformed JSON frame");
  Eigen::MatrixXd c(n, m);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < m; ++k) c(r, k) = flat[r * m + k].get<double>();
  return StiefelPoint(std::move(c));
}

StiefelPoint haar_sample(int n, int m, rng::RngStream& rs) {
  if (m < 1 || m > n) throw InvalidArgument("haar_sample: need 1 <= m <= n");
  for (;;) {
    const Eigen::MatrixXd g = rs.gaussian_matrix(n, m);
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, m);
    // Positive R diagonal makes the factorization the unique one the
    // invariance argument needs; a (measure-zero) near-rank-drop redraws.
    bool ok = true;
    for (int j = 0; j < m; ++j) {
      const double d = qr.matrixQR()(j, j);
      if (std::abs(d) < 1e-12) {
        ok = false;
        break;
      }
      if (d < 0.0) q.col(j) = -q.col(j);
    }
    if (ok) return StiefelPoint(std::move(q));
  }
}

double cos_angle(const StiefelPoint& u, const StiefelPoint& v) {
  if (u.n() != v.n())
    throw InvalidArgument("cos_angle: ambient dimensions differ");
  if (v.m() > u.m())
    throw InvalidArgument("cos_angle: the second frame must have rank <= the first");
  const Eigen::MatrixXd a = u.cols.transpose() * v.cols;
  const double det = (a.transpose() * a).determinant();
  return std::sqrt(std::clamp(det, 0.0, 1.0));
}

PolarDecomposition rad_ang(const Eigen::MatrixXd& x) {
  if (x.cols() < 1 || x.rows() < x.cols())
    throw InvalidArgument("rad_ang: need a tall n x m matrix");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (!(s(s.size() - 1) > 1e-12))
    throw SingularInputError("rad_ang: input is numerically rank-deficient");
  Eigen::MatrixXd ang = svd.matrixU() * svd.matrixV().transpose();
  Eigen::MatrixXd rad =
      svd.matrixV() * s.asDiagonal() * svd.matrixV().transpose();
  return PolarDecomposition{StiefelPoint(std::move(ang)), std::move(rad)};
}

StiefelPoint orthocomplement(const StiefelPoint& u) {
  const int n = u.n(), m = u.m();
  if (m >= n) throw InvalidArgument("orthocomplement: need m < n");
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(u.cols);
  const Eigen::MatrixXd full =
      qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return StiefelPoint(full.rightCols(n - m));
}

Eigen::MatrixXd projector(const StiefelPoint& v) {
  return v.cols * v.cols.transpose();
}

}  // namespace cosform::stiefel
