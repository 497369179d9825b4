#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "slicedgw/point_cloud.hpp"

namespace slicedgw::oracle {

// Brute-force and randomized validators for the library's closed-form
// claims on small instances. Everything here is slow on purpose and stays
// independent of the O(n) implementation paths it checks.

/// Symmetric matrix of pairwise squared Euclidean distances, zero diagonal.
struct CostMatrix {
  Eigen::MatrixXd m;
};

CostMatrix cost_matrix(const PointCloud& cloud);

/// An n x m nonnegative matrix with uniform marginals: row sums 1/n and
/// column sums 1/m, both within 1e-9 (validated on construction).
class Coupling {
 public:
  explicit Coupling(Eigen::MatrixXd matrix);

  /// The coupling supported on a permutation: pi(i, sigma(i)) = 1/n.
  static Coupling from_permutation(std::span<const int> sigma);

  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  Eigen::MatrixXd matrix_;
};

/// The quadruple sum J = sum_{i,j,k,l} |cx(i,k) - cy(j,l)|^2 pi_ij pi_kl,
/// evaluated directly. O(n^2 m^2); intended for n, m <= 30.
double gw_cost(const Coupling& pi, const CostMatrix& cx, const CostMatrix& cy);

/// The (1/n^2)-normalized Gromov-Monge objective of one permutation.
double gm_objective(std::span<const double> xs, std::span<const double> ys,
                    std::span<const int> sigma);

/// The maximization-form objective Z = sum (x_i-x_j)^2 (y_s(i)-y_s(j))^2.
double qap_objective(std::span<const double> xs, std::span<const double> ys,
                     std::span<const int> sigma);

struct BruteforceResult {
  double value = 0.0;
  std::vector<int> sigma;  // lexicographically smallest argopt
};

/// Exhaustive minimum of the GM objective over all n! permutations. n <= 9.
BruteforceResult gm_bruteforce(std::span<const double> xs,
                               std::span<const double> ys);

/// Exhaustive maximum of the Z objective over all n! permutations. n <= 9.
BruteforceResult qap_bruteforce(std::span<const double> xs,
                                std::span<const double> ys);

/// Randomized search over the coupling polytope: `trials` doubly stochastic
/// matrices (iterative proportional fitting of exp(Gaussian) entries to a
/// 1e-10 marginal residual), all n! permutation couplings, and `trials`
/// random convex combinations of permutation couplings. Returns the smallest
/// gw_cost found. n <= 6.
double coupling_search(std::span<const double> xs, std::span<const double> ys,
                       int trials, std::uint64_t seed);

}  // namespace slicedgw::oracle
