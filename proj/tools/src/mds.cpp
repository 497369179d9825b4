#include "slicedgw/cli/mds.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace slicedgw::cli {

EigenDecomposition jacobi_eigh(Eigen::MatrixXd a) {
  const Eigen::Index k = a.rows();
  if (a.cols() != k || k < 1) {
    throw std::invalid_argument("jacobi_eigh: square matrix required");
  }
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(k, k);
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double tol = 1e-10 * scale;

  for (int sweep = 0; sweep < 100; ++sweep) {
    double max_off = 0.0;
    for (Eigen::Index p = 0; p < k; ++p) {
      for (Eigen::Index q = p + 1; q < k; ++q) {
        max_off = std::max(max_off, std::abs(a(p, q)));
      }
    }
    if (max_off <= tol) break;

    for (Eigen::Index p = 0; p < k; ++p) {
      for (Eigen::Index q = p + 1; q < k; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= tol) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (Eigen::Index i = 0; i < k; ++i) {
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = c * aip - s * aiq;
          a(i, q) = s * aip + c * aiq;
        }
        for (Eigen::Index i = 0; i < k; ++i) {
          const double api = a(p, i);
          const double aqi = a(q, i);
          a(p, i) = c * api - s * aqi;
          a(q, i) = s * api + c * aqi;
        }
        for (Eigen::Index i = 0; i < k; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i) > a(j, j) || (a(i, i) == a(j, j) && i < j);
  });

  EigenDecomposition out;
  out.values.resize(k);
  out.vectors.resize(k, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    out.values[c] = a(order[c], order[c]);
    Eigen::VectorXd col = v.col(order[c]);
    // Sign convention: the largest-magnitude component is positive.
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < k; ++i) {
      if (std::abs(col[i]) > std::abs(col[arg])) arg = i;
    }
    if (col[arg] < 0) col = -col;
    out.vectors.col(c) = col;
  }
  return out;
}

Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& values, int out_dim) {
  const Eigen::Index k = values.rows();
  if (values.cols() != k || k < 2) {
    throw std::invalid_argument("classical_mds: need a square matrix, k >= 2");
  }
  const Eigen::MatrixXd squared = values.array().square();
  const Eigen::MatrixXd j =
      Eigen::MatrixXd::Identity(k, k) -
      Eigen::MatrixXd::Constant(k, k, 1.0 / static_cast<double>(k));
  Eigen::MatrixXd b = -0.5 * j * squared * j;
  b = 0.5 * (b + b.transpose()).eval();  // kill roundoff asymmetry

  const EigenDecomposition eig = jacobi_eigh(b);
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(k, out_dim);
  for (int d = 0; d < out_dim && d < k; ++d) {
    const double lambda = std::max(0.0, eig.values[d]);
    coords.col(d) = eig.vectors.col(d) * std::sqrt(lambda);
  }
  return coords;
}

}  // namespace slicedgw::cli
