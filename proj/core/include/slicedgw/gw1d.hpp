#pragma once

#include <span>
#include <vector>

namespace slicedgw {

/// The two candidate permutations of the 1D problem: sigma(i) = i or
/// sigma(i) = n+1-i on sorted inputs. No other permutation can beat both.
enum class PermKind { identity, anti_identity };

/// Output of the exact 1D solver: winning permutation kind and the
/// 1/n^2-normalized quadratic assignment cost.
struct Assignment1D {
  PermKind kind;
  double cost;
};

/// Power sums s_k = sum z_i^k, k = 1..4, of a real vector.
struct MomentSummary {
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
  double s4 = 0.0;
};

MomentSummary compute_moments(std::span<const double> values);

/// Cross power sums of a paired sequence (x_i, u_i): c_ab = sum x_i^a u_i^b.
struct CrossMoments {
  double c22 = 0.0;  // sum x^2 u^2
  double c12 = 0.0;  // sum x   u^2
  double c21 = 0.0;  // sum x^2 u
  double c11 = 0.0;  // sum x   u
};

/// The 1D Gromov-Monge cost (1/n^2) * sum_{i,j} ((x_i-x_j)^2 -
/// (y_{s(i)}-y_{s(j)})^2)^2 for s = identity or the order reversal, evaluated
/// through the O(n) moment expansion of the double sum (never the O(n^2)
/// loop). Inputs must be sorted nondecreasing and of equal length >= 1.
double gm_cost_for_perm(std::span<const double> xs, std::span<const double> ys,
                        PermKind kind);

/// Same value as gm_cost_for_perm via the direct O(n^2) double sum. Test
/// oracle; kept independent of the moment path.
double gm_cost_naive(std::span<const double> xs, std::span<const double> ys,
                     PermKind kind);

/// Exact 1D GW/GM solver: sorts copies of both inputs ascending, evaluates
/// the two candidate permutations in O(n), returns the cheaper (ties go to
/// identity). O(n log n) total. Throws on length mismatch or non-finite
/// entries.
Assignment1D solve_gw1d(std::span<const double> xs, std::span<const double> ys);

namespace detail {

/// Moment-expansion cost of an explicitly paired sequence (a_r, b_r), no
/// sortedness requirement: the polynomial itself does not need order. This is
/// what the fixed-assignment objective of the Stiefel optimizer evaluates.
double paired_cost(std::span<const double> a, std::span<const double> b);

/// Both candidate costs of two sorted sequences in one pass; scratch-free.
Assignment1D solve_sorted(std::span<const double> xs, std::span<const double> ys);

}  // namespace detail

}  // namespace slicedgw
