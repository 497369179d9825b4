#include "slicedgw/stiefel.hpp"

#include <stdexcept>

namespace slicedgw {

namespace {
constexpr double kOrthoTol = 1e-10;
}

StiefelFrame::StiefelFrame(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() < matrix_.cols() || matrix_.cols() < 1) {
    throw std::invalid_argument("StiefelFrame: need q >= p >= 1");
  }
  const Eigen::MatrixXd gram = matrix_.transpose() * matrix_;
  const Eigen::MatrixXd residual =
      gram - Eigen::MatrixXd::Identity(matrix_.cols(), matrix_.cols());
  if (residual.cwiseAbs().maxCoeff() > kOrthoTol) {
    throw std::invalid_argument("StiefelFrame: columns are not orthonormal");
  }
}

StiefelFrame StiefelFrame::identity(Eigen::Index p) {
  return StiefelFrame(Eigen::MatrixXd::Identity(p, p));
}

StiefelFrame StiefelFrame::padding(Eigen::Index q, Eigen::Index p) {
  if (q < p) {
    throw std::invalid_argument("StiefelFrame::padding: need q >= p");
  }
  return StiefelFrame(Eigen::MatrixXd::Identity(q, p));
}

StiefelFrame retract(const Eigen::MatrixXd& m) {
  const Eigen::Index q = m.rows();
  const Eigen::Index p = m.cols();
  if (q < p || p < 1) {
    throw std::invalid_argument("retract: need q >= p >= 1");
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  Eigen::MatrixXd thin_q =
      qr.householderQ() * Eigen::MatrixXd::Identity(q, p);
  const Eigen::MatrixXd r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();

  const double scale = m.cwiseAbs().maxCoeff();
  for (Eigen::Index j = 0; j < p; ++j) {
    const double d = r(j, j);
    if (std::abs(d) <= 1e-13 * (scale > 0 ? scale : 1.0)) {
      throw std::invalid_argument("retract: rank-deficient input");
    }
    if (d < 0) thin_q.col(j) = -thin_q.col(j);
  }
  return StiefelFrame(std::move(thin_q));
}

}  // namespace slicedgw
