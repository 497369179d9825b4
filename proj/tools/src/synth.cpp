#include "slicedgw/cli/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "slicedgw/rng.hpp"

namespace slicedgw::cli {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

PointCloud make_spiral(Eigen::Index n, std::uint64_t seed, double jitter) {
  if (n < 1) throw std::invalid_argument("make_spiral: need n >= 1");
  rng::Engine eng(seed);
  Eigen::MatrixXd points(n, 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = rng::canonical(eng) * 4.0 * kPi;
    const double r = t / (4.0 * kPi);
    const double phase = (i % 2 == 0) ? 0.0 : kPi;
    points(i, 0) = r * std::cos(t + phase) + jitter * rng::standard_normal(eng);
    points(i, 1) = r * std::sin(t + phase) + jitter * rng::standard_normal(eng);
  }
  return PointCloud(std::move(points));
}

PointCloud gaussian_cloud(Eigen::Index n, Eigen::Index dim, std::uint64_t seed) {
  if (n < 1 || dim < 1) throw std::invalid_argument("gaussian_cloud: bad shape");
  rng::Engine eng(seed);
  Eigen::MatrixXd points(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      points(i, j) = rng::standard_normal(eng);
    }
  }
  return PointCloud(std::move(points));
}

PointCloud rotate2d(const PointCloud& cloud, double angle) {
  if (cloud.dim() != 2) throw std::invalid_argument("rotate2d: need a 2D cloud");
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return PointCloud(cloud.points() * rot.transpose());
}

}  // namespace slicedgw::cli
