#include "slicedgw/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "slicedgw/rng.hpp"

namespace slicedgw::oracle {

namespace {

constexpr int kEnumerationLimit = 9;  // 9! = 362,880 permutations
constexpr double kMarginalTol = 1e-9;

void check_instance(std::span<const double> xs, std::span<const double> ys,
                    int limit, const char* who) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument(std::string(who) + ": need equal nonempty inputs");
  }
  if (static_cast<int>(xs.size()) > limit) {
    throw std::invalid_argument(std::string(who) + ": instance too large to enumerate");
  }
}

}  // namespace

CostMatrix cost_matrix(const PointCloud& cloud) {
  const Eigen::Index n = cloud.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const double d = (cloud.points().row(i) - cloud.points().row(k)).squaredNorm();
      m(i, k) = d;
      m(k, i) = d;
    }
  }
  return CostMatrix{std::move(m)};
}

Coupling::Coupling(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  const Eigen::Index n = matrix_.rows();
  const Eigen::Index m = matrix_.cols();
  if (n < 1 || m < 1) {
    throw std::invalid_argument("Coupling: empty matrix");
  }
  if ((matrix_.array() < -1e-12).any()) {
    throw std::invalid_argument("Coupling: negative entry");
  }
  const double row_target = 1.0 / static_cast<double>(n);
  const double col_target = 1.0 / static_cast<double>(m);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(matrix_.row(i).sum() - row_target) > kMarginalTol) {
      throw std::invalid_argument("Coupling: row marginal violated");
    }
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    if (std::abs(matrix_.col(j).sum() - col_target) > kMarginalTol) {
      throw std::invalid_argument("Coupling: column marginal violated");
    }
  }
}

Coupling Coupling::from_permutation(std::span<const int> sigma) {
  const Eigen::Index n = static_cast<Eigen::Index>(sigma.size());
  std::vector<bool> seen(sigma.size(), false);
  for (const int s : sigma) {
    if (s < 0 || s >= static_cast<int>(sigma.size()) || seen[s]) {
      throw std::invalid_argument("Coupling::from_permutation: not a permutation");
    }
    seen[s] = true;
  }
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    m(i, sigma[i]) = 1.0 / static_cast<double>(n);
  }
  return Coupling(std::move(m));
}

double gw_cost(const Coupling& pi, const CostMatrix& cx, const CostMatrix& cy) {
  const Eigen::Index n = pi.matrix().rows();
  const Eigen::Index m = pi.matrix().cols();
  if (cx.m.rows() != n || cx.m.cols() != n || cy.m.rows() != m || cy.m.cols() != m) {
    throw std::invalid_argument("gw_cost: shape mismatch");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const double pij = pi.matrix()(i, j);
      if (pij == 0.0) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < m; ++l) {
          const double pkl = pi.matrix()(k, l);
          if (pkl == 0.0) continue;
          const double d = cx.m(i, k) - cy.m(j, l);
          total += d * d * pij * pkl;
        }
      }
    }
  }
  return total;
}

double gm_objective(std::span<const double> xs, std::span<const double> ys,
                    std::span<const int> sigma) {
  const std::size_t n = xs.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[sigma[i]] - ys[sigma[j]];
      const double diff = dx * dx - dy * dy;
      total += diff * diff;
    }
  }
  const double dn = static_cast<double>(n);
  return total / (dn * dn);
}

double qap_objective(std::span<const double> xs, std::span<const double> ys,
                     std::span<const int> sigma) {
  const std::size_t n = xs.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[sigma[i]] - ys[sigma[j]];
      total += dx * dx * dy * dy;
    }
  }
  return total;
}

BruteforceResult gm_bruteforce(std::span<const double> xs,
                               std::span<const double> ys) {
  check_instance(xs, ys, kEnumerationLimit, "gm_bruteforce");
  std::vector<int> sigma(xs.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  BruteforceResult best{std::numeric_limits<double>::infinity(), {}};
  do {
    const double c = gm_objective(xs, ys, sigma);
    if (c < best.value) {  // strict: first (lexicographically smallest) argmin wins
      best.value = c;
      best.sigma = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

BruteforceResult qap_bruteforce(std::span<const double> xs,
                                std::span<const double> ys) {
  check_instance(xs, ys, kEnumerationLimit, "qap_bruteforce");
  std::vector<int> sigma(xs.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  BruteforceResult best{-std::numeric_limits<double>::infinity(), {}};
  do {
    const double z = qap_objective(xs, ys, sigma);
    if (z > best.value) {
      best.value = z;
      best.sigma = sigma;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

double coupling_search(std::span<const double> xs, std::span<const double> ys,
                       int trials, std::uint64_t seed) {
  check_instance(xs, ys, 6, "coupling_search");
  const Eigen::Index n = static_cast<Eigen::Index>(xs.size());
  const double dn = static_cast<double>(n);

  Eigen::MatrixXd px(n, 1), py(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    px(i, 0) = xs[i];
    py(i, 0) = ys[i];
  }
  const CostMatrix cx = cost_matrix(PointCloud(px));
  const CostMatrix cy = cost_matrix(PointCloud(py));

  // All permutation couplings (the polytope's vertices).
  std::vector<Eigen::MatrixXd> vertices;
  std::vector<int> sigma(xs.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    Coupling pi = Coupling::from_permutation(sigma);
    best = std::min(best, gw_cost(pi, cx, cy));
    vertices.push_back(pi.matrix());
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  rng::Engine eng(seed);
  for (int t = 0; t < trials; ++t) {
    // Random interior point: exp of Gaussians, iterative proportional
    // fitting until row and column sums are within 1e-10 of one.
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        m(i, j) = std::exp(rng::standard_normal(eng));
      }
    }
    for (int sweep = 0; sweep < 10000; ++sweep) {
      for (Eigen::Index i = 0; i < n; ++i) m.row(i) /= m.row(i).sum();
      for (Eigen::Index j = 0; j < n; ++j) m.col(j) /= m.col(j).sum();
      double residual = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        residual = std::max(residual, std::abs(m.row(i).sum() - 1.0));
      }
      if (residual < 1e-10) break;
    }
    best = std::min(best, gw_cost(Coupling(m / dn), cx, cy));
  }

  for (int t = 0; t < trials; ++t) {
    // Random convex combination of up to four vertices.
    const int k = std::min<int>(4, static_cast<int>(vertices.size()));
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    double weight_sum = 0.0;
    std::vector<double> weights(k);
    for (int c = 0; c < k; ++c) {
      weights[c] = rng::canonical(eng) + 1e-12;
      weight_sum += weights[c];
    }
    for (int c = 0; c < k; ++c) {
      const std::size_t idx =
          static_cast<std::size_t>(eng() % vertices.size());
      m += (weights[c] / weight_sum) * vertices[idx];
    }
    best = std::min(best, gw_cost(Coupling(std::move(m)), cx, cy));
  }

  return best;
}

}  // namespace slicedgw::oracle
