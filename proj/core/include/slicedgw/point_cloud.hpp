#pragma once

#include <Eigen/Dense>

namespace slicedgw {

class StiefelFrame;

/// A discrete measure on R^d: n points with implicit uniform weights 1/n.
/// Rows of the matrix are points. Immutable after construction; all
/// coordinates are required to be finite.
class PointCloud {
 public:
  /// `points` is n x d (one point per row). Throws std::invalid_argument if
  /// n < 1, d < 1, or any coordinate is NaN/Inf.
  explicit PointCloud(Eigen::MatrixXd points);

  const Eigen::MatrixXd& points() const { return points_; }
  Eigen::Index size() const { return points_.rows(); }
  Eigen::Index dim() const { return points_.cols(); }

 private:
  Eigen::MatrixXd points_;
};

/// Embeds a p-dimensional cloud into R^q (q >= p) by padding each point with
/// zeros. Throws if q < p.
PointCloud pad_uplift(const PointCloud& cloud, Eigen::Index q);

/// Pushes the cloud forward through a Stiefel frame: point i becomes
/// frame * point i. The frame's column count must equal the cloud dimension.
PointCloud apply_frame(const PointCloud& cloud, const StiefelFrame& frame);

/// Adds `offset` to every point.
PointCloud translate(const PointCloud& cloud, const Eigen::VectorXd& offset);

}  // namespace slicedgw
