#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "slicedgw/point_cloud.hpp"

namespace slicedgw {

/// L unit vectors on the hypersphere S^{q-1}, stored as rows. Sampling draws
/// q independent standard normals per direction and normalizes; regeneration
/// from the same (seed, L, q) is bit-identical (see rng.hpp for the pinned
/// generator).
class DirectionSet {
 public:
  static DirectionSet sample(Eigen::Index count, Eigen::Index dim,
                             std::uint64_t seed);

  /// Wraps an explicit L x q matrix of unit rows (norm within 1e-12 of 1).
  /// `seed` is only a provenance tag here.
  static DirectionSet from_matrix(Eigen::MatrixXd directions,
                                  std::uint64_t seed = 0);

  const Eigen::MatrixXd& matrix() const { return directions_; }
  Eigen::Index count() const { return directions_.rows(); }
  Eigen::Index dim() const { return directions_.cols(); }
  std::uint64_t seed() const { return seed_; }

  /// Row l as a vector.
  Eigen::VectorXd direction(Eigen::Index l) const {
    return directions_.row(l).transpose();
  }

 private:
  DirectionSet(Eigen::MatrixXd directions, std::uint64_t seed)
      : directions_(std::move(directions)), seed_(seed) {}

  Eigen::MatrixXd directions_;
  std::uint64_t seed_;
};

/// Inner products <x_i, theta>, optionally sorted ascending.
struct ProjectedCloud {
  Eigen::VectorXd values;
  bool sorted = false;
};

/// Projects the cloud onto a unit direction (norm within 1e-9 of 1, else
/// std::invalid_argument).
ProjectedCloud project(const PointCloud& cloud, const Eigen::VectorXd& direction,
                       bool sort);

}  // namespace slicedgw
