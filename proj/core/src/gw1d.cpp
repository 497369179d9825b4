#include "slicedgw/gw1d.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slicedgw/sort.hpp"

namespace slicedgw {

namespace {

void check_sorted(std::span<const double> v, const char* who) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] > v[i]) {
      throw std::invalid_argument(std::string(who) + ": input must be sorted nondecreasing");
    }
  }
}

void check_pair(std::span<const double> xs, std::span<const double> ys,
                const char* who) {
  if (xs.size() != ys.size()) {
    throw std::invalid_argument(std::string(who) + ": length mismatch");
  }
  if (xs.empty()) {
    throw std::invalid_argument(std::string(who) + ": need n >= 1");
  }
}

// Expanding sum_{i,j} ((x_i-x_j)^2 - (u_i-u_j)^2)^2 gives, with power sums
// sK = sum x^K, tK = sum u^K and cross sums c_ab = sum x^a u^b:
//
//   2n*s4 - 8*s3*s1 + 6*s2^2              (x part)
// + 2n*t4 - 8*t3*t1 + 6*t2^2              (u part)
// - 4n*c22 + 8*(s1*c12 + t1*c21)
// - 4*s2*t2 - 8*c11^2                     (mixed part)
//
// The terms below are regrouped into differences that vanish term-by-term
// when x and u are bitwise identical, so a zero-cost pair evaluates to an
// exact 0.0 instead of accumulated rounding noise. The grouping is algebra,
// not approximation: it expands to exactly the sum above.
double raw_cost(double n, const MomentSummary& mx, const MomentSummary& mu,
                const CrossMoments& c) {
  const double quartic = 2.0 * n * (mx.s4 - 2.0 * c.c22 + mu.s4);
  const double cubic_x = 8.0 * mx.s1 * (c.c12 - mx.s3);
  const double cubic_u = 8.0 * mu.s1 * (c.c21 - mu.s3);
  const double d2 = mx.s2 - mu.s2;
  const double quad = 2.0 * d2 * d2 + 4.0 * (mx.s2 - c.c11) * (mx.s2 + c.c11) +
                      4.0 * (mu.s2 - c.c11) * (mu.s2 + c.c11);
  return quartic + cubic_x + cubic_u + quad;
}

CrossMoments cross_identity(std::span<const double> xs, std::span<const double> ys) {
  CrossMoments c;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double x = xs[i];
    const double u = ys[i];
    const double x2 = x * x;
    const double u2 = u * u;
    c.c22 += x2 * u2;
    c.c12 += x * u2;
    c.c21 += x2 * u;
    c.c11 += x * u;
  }
  return c;
}

CrossMoments cross_anti(std::span<const double> xs, std::span<const double> ys) {
  CrossMoments c;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = xs[i];
    const double u = ys[n - 1 - i];
    const double x2 = x * x;
    const double u2 = u * u;
    c.c22 += x2 * u2;
    c.c12 += x * u2;
    c.c21 += x2 * u;
    c.c11 += x * u;
  }
  return c;
}

}  // namespace

MomentSummary compute_moments(std::span<const double> values) {
  MomentSummary m;
  for (const double x : values) {
    const double x2 = x * x;
    m.s1 += x;
    m.s2 += x2;
    m.s3 += x * x2;
    m.s4 += x2 * x2;
  }
  return m;
}

double gm_cost_for_perm(std::span<const double> xs, std::span<const double> ys,
                        PermKind kind) {
  check_pair(xs, ys, "gm_cost_for_perm");
  check_sorted(xs, "gm_cost_for_perm");
  check_sorted(ys, "gm_cost_for_perm");
  if (xs.size() == 1) return 0.0;  // no pairs
  const double n = static_cast<double>(xs.size());
  const MomentSummary mx = compute_moments(xs);
  const MomentSummary my = compute_moments(ys);
  const CrossMoments c =
      kind == PermKind::identity ? cross_identity(xs, ys) : cross_anti(xs, ys);
  return std::max(0.0, raw_cost(n, mx, my, c)) / (n * n);
}

double gm_cost_naive(std::span<const double> xs, std::span<const double> ys,
                     PermKind kind) {
  check_pair(xs, ys, "gm_cost_naive");
  check_sorted(xs, "gm_cost_naive");
  check_sorted(ys, "gm_cost_naive");
  const std::size_t n = xs.size();
  auto pick = [&](std::size_t i) {
    return kind == PermKind::identity ? ys[i] : ys[n - 1 - i];
  };
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = pick(i) - pick(j);
      const double diff = dx * dx - dy * dy;
      total += diff * diff;
    }
  }
  const double nn = static_cast<double>(n);
  return total / (nn * nn);
}

Assignment1D solve_gw1d(std::span<const double> xs, std::span<const double> ys) {
  check_pair(xs, ys, "solve_gw1d");
  for (const double v : xs) {
    if (!std::isfinite(v)) throw std::invalid_argument("solve_gw1d: non-finite entry");
  }
  for (const double v : ys) {
    if (!std::isfinite(v)) throw std::invalid_argument("solve_gw1d: non-finite entry");
  }
  std::vector<double> sx(xs.begin(), xs.end());
  std::vector<double> sy(ys.begin(), ys.end());
  std::vector<double> scratch;
  sort_values(sx, scratch);
  sort_values(sy, scratch);
  return detail::solve_sorted(sx, sy);
}

namespace detail {

double paired_cost(std::span<const double> a, std::span<const double> b) {
  if (a.size() == 1) return 0.0;
  const double n = static_cast<double>(a.size());
  const MomentSummary ma = compute_moments(a);
  const MomentSummary mb = compute_moments(b);
  const CrossMoments c = cross_identity(a, b);
  return std::max(0.0, raw_cost(n, ma, mb, c)) / (n * n);
}

Assignment1D solve_sorted(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() == 1) return {PermKind::identity, 0.0};
  const double n = static_cast<double>(xs.size());
  const MomentSummary mx = compute_moments(xs);
  const MomentSummary my = compute_moments(ys);
  const double cost_id =
      std::max(0.0, raw_cost(n, mx, my, cross_identity(xs, ys))) / (n * n);
  const double cost_anti =
      std::max(0.0, raw_cost(n, mx, my, cross_anti(xs, ys))) / (n * n);
  if (cost_id <= cost_anti) {
    return {PermKind::identity, cost_id};
  }
  return {PermKind::anti_identity, cost_anti};
}

}  // namespace detail

}  // namespace slicedgw
