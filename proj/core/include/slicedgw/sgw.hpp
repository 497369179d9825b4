#pragma once

#include <cstdint>
#include <vector>

#include "slicedgw/directions.hpp"
#include "slicedgw/gw1d.hpp"
#include "slicedgw/point_cloud.hpp"
#include "slicedgw/stiefel.hpp"

namespace slicedgw {

/// Monte-Carlo estimate of a sliced discrepancy: per-direction 1D costs and
/// their arithmetic mean (summed in direction order, so the value does not
/// depend on how many threads ran the loop).
struct SgwResult {
  double value = 0.0;
  std::vector<double> per_direction;
  Eigen::Index directions = 0;
  std::uint64_t seed = 0;
};

/// Sliced Gromov-Wasserstein: for each direction, project frame#mu and nu,
/// sort, and take the exact 1D GW^2 cost; the value is the mean over
/// directions. Requires mu.size() == nu.size(), frame mapping mu's dimension
/// to nu's, and dirs on S^{q-1}. threads = 0 picks the hardware count; any
/// thread count yields bit-identical results.
SgwResult sgw(const PointCloud& mu, const PointCloud& nu,
              const StiefelFrame& frame, const DirectionSet& dirs,
              unsigned threads = 0);

/// sgw with the default frame: identity when dimensions match, zero-padding
/// uplift otherwise.
SgwResult sgw(const PointCloud& mu, const PointCloud& nu,
              const DirectionSet& dirs, unsigned threads = 0);

/// Sliced Wasserstein through a frame: per direction the squared 2-Wasserstein
/// distance between sorted projections, (1/n) * sum (x_(i) - y_(i))^2.
SgwResult sw_delta(const PointCloud& mu, const PointCloud& nu,
                   const StiefelFrame& frame, const DirectionSet& dirs,
                   unsigned threads = 0);

SgwResult sw_delta(const PointCloud& mu, const PointCloud& nu,
                   const DirectionSet& dirs, unsigned threads = 0);

/// Default projector used when none is given.
StiefelFrame default_frame(Eigen::Index p, Eigen::Index q);

namespace detail {

/// Which 1D cost a sliced metric runs per direction.
enum class SliceCost { gromov, wasserstein };

/// Per-direction bookkeeping for the fixed-assignment objective: the order
/// that sorts each projected cloud (rank -> original index) and the winning
/// permutation kind (identity for SliceCost::wasserstein).
struct DirectionAssignment {
  std::vector<std::int32_t> mu_order;
  std::vector<std::int32_t> nu_order;
  PermKind kind = PermKind::identity;
};

using FixedAssignments = std::vector<DirectionAssignment>;

/// sgw/sw evaluation that also records the assignments, for the optimizer.
SgwResult sliced_metric(const PointCloud& mu, const PointCloud& nu,
                        const StiefelFrame& frame, const DirectionSet& dirs,
                        SliceCost cost, unsigned threads,
                        FixedAssignments* assignments);

}  // namespace detail

}  // namespace slicedgw
