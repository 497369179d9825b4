#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>

#include "slicedgw/point_cloud.hpp"

namespace slicedgw::cli {

/// Unreadable or malformed input file. Maps to exit code 1.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a command's contract (sizes, dimensions, counts).
/// Maps to exit code 2.
class ContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Loads a point cloud, dispatching on the extension: ".off" is parsed as an
/// OFF mesh (vertices only), everything else as CSV (one point per row,
/// comma-separated; a single header row is skipped when any token of the
/// first row is not numeric). Parse errors carry 1-based line numbers.
PointCloud load_cloud(const std::filesystem::path& path);

PointCloud load_csv(std::istream& in, const std::string& name);
PointCloud load_off(std::istream& in, const std::string& name);

/// Seeded uniform subsample without replacement down to `target` points;
/// selected points keep their original order.
PointCloud subsample(const PointCloud& cloud, Eigen::Index target,
                     std::uint64_t seed);

/// Centers the cloud and divides by the root-mean-square point norm of the
/// centered points (no-op scale for a single repeated point).
PointCloud normalize_cloud(const PointCloud& cloud);

/// 17 significant digits; parses back to the same 64-bit value.
std::string format_double(double v);

}  // namespace slicedgw::cli
