#include "slicedgw/directions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slicedgw/rng.hpp"

namespace slicedgw {

DirectionSet DirectionSet::sample(Eigen::Index count, Eigen::Index dim,
                                  std::uint64_t seed) {
  if (count < 1 || dim < 1) {
    throw std::invalid_argument("DirectionSet::sample: need L >= 1 and q >= 1");
  }
  rng::Engine eng(seed);
  Eigen::MatrixXd dirs(count, dim);
  for (Eigen::Index l = 0; l < count; ++l) {
    double norm = 0.0;
    do {
      for (Eigen::Index j = 0; j < dim; ++j) {
        dirs(l, j) = rng::standard_normal(eng);
      }
      norm = dirs.row(l).norm();
    } while (norm < 1e-12);  // resample degenerate draws (probability ~0)
    dirs.row(l) /= norm;
  }
  return DirectionSet(std::move(dirs), seed);
}

DirectionSet DirectionSet::from_matrix(Eigen::MatrixXd directions,
                                       std::uint64_t seed) {
  if (directions.rows() < 1 || directions.cols() < 1) {
    throw std::invalid_argument("DirectionSet::from_matrix: empty matrix");
  }
  for (Eigen::Index l = 0; l < directions.rows(); ++l) {
    if (std::abs(directions.row(l).norm() - 1.0) > 1e-12) {
      throw std::invalid_argument("DirectionSet::from_matrix: row without unit norm");
    }
  }
  return DirectionSet(std::move(directions), seed);
}

ProjectedCloud project(const PointCloud& cloud, const Eigen::VectorXd& direction,
                       bool sort) {
  if (direction.size() != cloud.dim()) {
    throw std::invalid_argument("project: direction dimension mismatch");
  }
  if (std::abs(direction.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("project: direction must have unit norm");
  }
  ProjectedCloud out;
  out.values = cloud.points() * direction;
  if (sort) {
    std::sort(out.values.data(), out.values.data() + out.values.size());
    out.sorted = true;
  }
  return out;
}

}  // namespace slicedgw
