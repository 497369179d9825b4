#pragma once

#include <cstdint>

#include "slicedgw/point_cloud.hpp"

namespace slicedgw::cli {

/// Two-arm 2D spiral: point i sits on arm i mod 2; its parameter t is drawn
/// uniformly from [0, 4*pi], the radius is t / (4*pi), the second arm is
/// phase-shifted by pi, and i.i.d. Gaussian jitter of standard deviation
/// `jitter` is added per coordinate. Deterministic in the seed.
PointCloud make_spiral(Eigen::Index n, std::uint64_t seed, double jitter = 0.05);

/// n x dim cloud of i.i.d. standard normals.
PointCloud gaussian_cloud(Eigen::Index n, Eigen::Index dim, std::uint64_t seed);

/// Rotates a 2D cloud counterclockwise by `angle` radians.
PointCloud rotate2d(const PointCloud& cloud, double angle);

}  // namespace slicedgw::cli
