#pragma once

#include <Eigen/Dense>

namespace slicedgw {

/// A q x p matrix with orthonormal columns (a point of the Stiefel manifold
/// V_p(R^q)). The constructor enforces matrix^T * matrix = I_p to 1e-10
/// elementwise.
class StiefelFrame {
 public:
  explicit StiefelFrame(Eigen::MatrixXd matrix);

  /// The identity map on R^p.
  static StiefelFrame identity(Eigen::Index p);

  /// The zero-padding uplift R^p -> R^q: identity on the first p coordinates,
  /// zero on the rest. Requires q >= p.
  static StiefelFrame padding(Eigen::Index q, Eigen::Index p);

  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Eigen::Index rows() const { return matrix_.rows(); }
  Eigen::Index cols() const { return matrix_.cols(); }

 private:
  Eigen::MatrixXd matrix_;
};

/// Orthonormalizes an arbitrary full-column-rank q x p matrix by thin QR with
/// the diagonal of R forced positive. Idempotent on frames that are already
/// orthonormal. Throws std::invalid_argument on rank-deficient input.
StiefelFrame retract(const Eigen::MatrixXd& m);

}  // namespace slicedgw
