#include "slicedgw/point_cloud.hpp"

#include <stdexcept>

#include "slicedgw/stiefel.hpp"

namespace slicedgw {

PointCloud::PointCloud(Eigen::MatrixXd points) : points_(std::move(points)) {
  if (points_.rows() < 1 || points_.cols() < 1) {
    throw std::invalid_argument("PointCloud: need at least one point and one dimension");
  }
  if (!points_.allFinite()) {
    throw std::invalid_argument("PointCloud: coordinates must be finite");
  }
}

PointCloud pad_uplift(const PointCloud& cloud, Eigen::Index q) {
  const Eigen::Index p = cloud.dim();
  if (q < p) {
    throw std::invalid_argument("pad_uplift: target dimension below cloud dimension");
  }
  if (q == p) return cloud;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(cloud.size(), q);
  out.leftCols(p) = cloud.points();
  return PointCloud(std::move(out));
}

PointCloud apply_frame(const PointCloud& cloud, const StiefelFrame& frame) {
  if (frame.cols() != cloud.dim()) {
    throw std::invalid_argument("apply_frame: frame columns must match cloud dimension");
  }
  // point i -> frame * point i, i.e. rows of X * frame^T.
  return PointCloud(cloud.points() * frame.matrix().transpose());
}

PointCloud translate(const PointCloud& cloud, const Eigen::VectorXd& offset) {
  if (offset.size() != cloud.dim()) {
    throw std::invalid_argument("translate: offset dimension mismatch");
  }
  return PointCloud(cloud.points().rowwise() + offset.transpose());
}

}  // namespace slicedgw
