#pragma once

#include <vector>

#include "slicedgw/sgw.hpp"

namespace slicedgw {

struct RisgwOptions {
  int max_iters = 30;
  double step0 = 1.0;
  double backtrack_factor = 0.5;
  double rel_tol = 1e-6;
  int max_backtracks = 20;
  /// Extra descent runs from random Stiefel frames (seeded from the direction
  /// set); the best result wins. 0 = single run from the padding frame.
  int restarts = 0;
  unsigned threads = 0;
};

/// Objective values of accepted steps (nonincreasing), the frame reached, the
/// number of accepted iterations, and whether the run stopped because no
/// meaningful further decrease was possible.
struct OptTrace {
  std::vector<double> objective_per_iter;
  StiefelFrame final_frame;
  int iters = 0;
  bool converged = false;
};

struct RisgwResult {
  double value = 0.0;
  OptTrace trace;
};

/// Rotation-invariant SGW: minimizes SGW_frame(mu, nu) over the Stiefel
/// manifold V_p(R^q) by projected gradient descent with backtracking line
/// search and QR retraction, starting from the padding frame (identity when
/// p = q). Deterministic given (inputs, dirs, options).
RisgwResult risgw(const PointCloud& mu, const PointCloud& nu,
                  const DirectionSet& dirs, const RisgwOptions& options = {});

/// Same scheme with the sliced Wasserstein objective.
RisgwResult risw(const PointCloud& mu, const PointCloud& nu,
                 const DirectionSet& dirs, const RisgwOptions& options = {});

/// The SGW objective with the per-direction sort orders and permutation kinds
/// frozen: a polynomial in the (not necessarily orthonormal) frame. This is
/// the function the Euclidean gradient differentiates, and what a finite-
/// difference check must evaluate.
double fixed_assignment_objective(const PointCloud& mu, const PointCloud& nu,
                                  const Eigen::MatrixXd& frame,
                                  const DirectionSet& dirs,
                                  const detail::FixedAssignments& assignments);

/// Exact q x p Euclidean gradient of fixed_assignment_objective at `frame`.
Eigen::MatrixXd euclidean_gradient(const PointCloud& mu, const PointCloud& nu,
                                   const Eigen::MatrixXd& frame,
                                   const DirectionSet& dirs,
                                   const detail::FixedAssignments& assignments);

}  // namespace slicedgw
