#include "slicedgw/risgw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "slicedgw/rng.hpp"

namespace slicedgw {

namespace {

using detail::DirectionAssignment;
using detail::FixedAssignments;
using detail::SliceCost;

void check_assignments(const FixedAssignments& assignments, Eigen::Index L,
                       Eigen::Index n) {
  if (static_cast<Eigen::Index>(assignments.size()) != L) {
    throw std::invalid_argument("fixed assignments: one entry per direction required");
  }
  for (const DirectionAssignment& da : assignments) {
    if (static_cast<Eigen::Index>(da.mu_order.size()) != n ||
        static_cast<Eigen::Index>(da.nu_order.size()) != n) {
      throw std::invalid_argument("fixed assignments: order length mismatch");
    }
  }
}

// With sort orders and permutation kind frozen, the per-direction cost is a
// polynomial in the frame through a_r = <theta, frame * x_{order(r)}>. The
// mean over directions is what gets differentiated.
double fixed_objective_impl(const PointCloud& mu, const PointCloud& nu,
                            const Eigen::MatrixXd& frame,
                            const DirectionSet& dirs,
                            const FixedAssignments& assignments,
                            SliceCost cost) {
  const Eigen::Index n = mu.size();
  const Eigen::Index L = dirs.count();
  check_assignments(assignments, L, n);

  std::vector<double> a(n), b(n);
  double total = 0.0;
  for (Eigen::Index l = 0; l < L; ++l) {
    const Eigen::VectorXd theta = dirs.matrix().row(l).transpose();
    const Eigen::VectorXd pulled = frame.transpose() * theta;
    const Eigen::VectorXd z = mu.points() * pulled;
    const Eigen::VectorXd w = nu.points() * theta;
    const DirectionAssignment& da = assignments[static_cast<std::size_t>(l)];
    for (Eigen::Index r = 0; r < n; ++r) {
      a[r] = z[da.mu_order[r]];
      const Eigen::Index s =
          da.kind == PermKind::identity ? r : n - 1 - r;
      b[r] = w[da.nu_order[s]];
    }
    if (cost == SliceCost::gromov) {
      total += detail::paired_cost(a, b);
    } else {
      double acc = 0.0;
      for (Eigen::Index r = 0; r < n; ++r) {
        const double d = a[r] - b[r];
        acc += d * d;
      }
      total += acc / static_cast<double>(n);
    }
  }
  return total / static_cast<double>(L);
}

Eigen::MatrixXd gradient_impl(const PointCloud& mu, const PointCloud& nu,
                              const Eigen::MatrixXd& frame,
                              const DirectionSet& dirs,
                              const FixedAssignments& assignments,
                              SliceCost cost) {
  const Eigen::Index n = mu.size();
  const Eigen::Index L = dirs.count();
  check_assignments(assignments, L, n);
  const double dn = static_cast<double>(n);

  Eigen::MatrixXd grad = Eigen::MatrixXd::Zero(frame.rows(), frame.cols());
  std::vector<double> a(n), b(n), grad_z(n);
  Eigen::VectorXd point_weight(n);

  for (Eigen::Index l = 0; l < L; ++l) {
    const Eigen::VectorXd theta = dirs.matrix().row(l).transpose();
    const Eigen::VectorXd pulled = frame.transpose() * theta;
    const Eigen::VectorXd z = mu.points() * pulled;
    const Eigen::VectorXd w = nu.points() * theta;
    const DirectionAssignment& da = assignments[static_cast<std::size_t>(l)];
    for (Eigen::Index r = 0; r < n; ++r) {
      a[r] = z[da.mu_order[r]];
      const Eigen::Index s = da.kind == PermKind::identity ? r : n - 1 - r;
      b[r] = w[da.nu_order[s]];
    }

    if (cost == SliceCost::gromov) {
      // d/d a_t of (1/n^2) sum_{r,s} ((a_r-a_s)^2 - (b_r-b_s)^2)^2 is
      // (8/n^2) sum_s D_{ts} (a_t - a_s); both inner sums reduce to power
      // sums, so the whole pass stays O(n).
      double s1a = 0, s2a = 0, s3a = 0, s1b = 0, s2b = 0, sab = 0, sab2 = 0;
      for (Eigen::Index r = 0; r < n; ++r) {
        const double av = a[r];
        const double bv = b[r];
        s1a += av;
        s2a += av * av;
        s3a += av * av * av;
        s1b += bv;
        s2b += bv * bv;
        sab += av * bv;
        sab2 += av * bv * bv;
      }
      const double scale = 8.0 / (dn * dn);
      for (Eigen::Index r = 0; r < n; ++r) {
        const double at = a[r];
        const double bt = b[r];
        const double cubic = dn * at * at * at - 3.0 * at * at * s1a +
                             3.0 * at * s2a - s3a;
        const double mixed = bt * bt * (dn * at - s1a) -
                             2.0 * bt * (at * s1b - sab) + at * s2b - sab2;
        grad_z[da.mu_order[r]] = scale * (cubic - mixed);
      }
    } else {
      for (Eigen::Index r = 0; r < n; ++r) {
        grad_z[da.mu_order[r]] = 2.0 / dn * (a[r] - b[r]);
      }
    }

    for (Eigen::Index i = 0; i < n; ++i) point_weight[i] = grad_z[i];
    grad.noalias() += theta * (mu.points().transpose() * point_weight).transpose();
  }
  return grad / static_cast<double>(L);
}

struct DescentOutcome {
  double value;
  OptTrace trace;
};

DescentOutcome descend(const PointCloud& mu, const PointCloud& nu,
                       const DirectionSet& dirs, const RisgwOptions& options,
                       SliceCost cost, StiefelFrame frame) {
  FixedAssignments assignments;
  SgwResult eval = detail::sliced_metric(mu, nu, frame, dirs, cost,
                                         options.threads, &assignments);
  double value = eval.value;
  std::vector<double> history{value};
  int iters = 0;
  bool converged = value == 0.0;

  for (int iter = 0; iter < options.max_iters && !converged; ++iter) {
    const Eigen::MatrixXd grad =
        gradient_impl(mu, nu, frame.matrix(), dirs, assignments, cost);
    if (!grad.allFinite()) {
      throw std::runtime_error("risgw: non-finite gradient");
    }
    // Tangent-space projection: G - frame * sym(frame^T G).
    const Eigen::MatrixXd ftg = frame.matrix().transpose() * grad;
    Eigen::MatrixXd riemannian =
        grad - frame.matrix() * (0.5 * (ftg + ftg.transpose()));
    const double grad_norm = riemannian.norm();
    if (grad_norm < 1e-18) {
      converged = true;  // first-order stationary
      break;
    }
    // Steps measure Frobenius arc length: the direction is normalized so
    // step0 means the same thing regardless of the objective's scale.
    riemannian /= grad_norm;

    double step = options.step0;
    bool accepted = false;
    StiefelFrame candidate = frame;
    SgwResult cand_eval;
    FixedAssignments cand_assignments;
    for (int bt = 0; bt < options.max_backtracks; ++bt) {
      bool retracted = true;
      try {
        candidate = retract(frame.matrix() - step * riemannian);
      } catch (const std::invalid_argument&) {
        retracted = false;  // degenerate step; shrink and retry
      }
      if (retracted) {
        cand_eval = detail::sliced_metric(mu, nu, candidate, dirs, cost,
                                          options.threads, &cand_assignments);
        if (cand_eval.value < value) {
          accepted = true;
          break;
        }
      }
      step *= options.backtrack_factor;
    }
    if (!accepted) {
      converged = true;  // no descent direction left at line-search resolution
      break;
    }
    const double improvement =
        (value - cand_eval.value) /
        std::max(value, std::numeric_limits<double>::min());
    frame = std::move(candidate);
    value = cand_eval.value;
    assignments = std::move(cand_assignments);
    history.push_back(value);
    ++iters;
    if (value == 0.0 || improvement < options.rel_tol) converged = true;
  }

  return DescentOutcome{value,
                        OptTrace{std::move(history), std::move(frame), iters, converged}};
}

RisgwResult minimize_over_stiefel(const PointCloud& mu, const PointCloud& nu,
                                  const DirectionSet& dirs,
                                  const RisgwOptions& options, SliceCost cost) {
  const Eigen::Index p = mu.dim();
  const Eigen::Index q = nu.dim();
  if (q < p) {
    throw std::invalid_argument("risgw: target dimension must be >= source dimension");
  }
  DescentOutcome best = descend(mu, nu, dirs, options, cost, default_frame(p, q));
  for (int r = 0; r < options.restarts; ++r) {
    rng::Engine eng(rng::mix(dirs.seed(), 0xA11CE + static_cast<std::uint64_t>(r)));
    Eigen::MatrixXd m(q, p);
    for (Eigen::Index i = 0; i < q; ++i) {
      for (Eigen::Index j = 0; j < p; ++j) m(i, j) = rng::standard_normal(eng);
    }
    StiefelFrame start = retract(m);
    DescentOutcome candidate = descend(mu, nu, dirs, options, cost, std::move(start));
    if (candidate.value < best.value) best = std::move(candidate);
  }
  return RisgwResult{best.value, std::move(best.trace)};
}

}  // namespace

RisgwResult risgw(const PointCloud& mu, const PointCloud& nu,
                  const DirectionSet& dirs, const RisgwOptions& options) {
  return minimize_over_stiefel(mu, nu, dirs, options, SliceCost::gromov);
}

RisgwResult risw(const PointCloud& mu, const PointCloud& nu,
                 const DirectionSet& dirs, const RisgwOptions& options) {
  return minimize_over_stiefel(mu, nu, dirs, options, SliceCost::wasserstein);
}

double fixed_assignment_objective(const PointCloud& mu, const PointCloud& nu,
                                  const Eigen::MatrixXd& frame,
                                  const DirectionSet& dirs,
                                  const detail::FixedAssignments& assignments) {
  return fixed_objective_impl(mu, nu, frame, dirs, assignments, SliceCost::gromov);
}

Eigen::MatrixXd euclidean_gradient(const PointCloud& mu, const PointCloud& nu,
                                   const Eigen::MatrixXd& frame,
                                   const DirectionSet& dirs,
                                   const detail::FixedAssignments& assignments) {
  return gradient_impl(mu, nu, frame, dirs, assignments, SliceCost::gromov);
}

}  // namespace slicedgw
