#pragma once

#include <Eigen/Dense>

namespace slicedgw::cli {

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations
/// (off-diagonal tolerance 1e-10, scale-aware). Eigenpairs come back sorted
/// by descending eigenvalue with a deterministic sign convention.
struct EigenDecomposition {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // columns
};

EigenDecomposition jacobi_eigh(Eigen::MatrixXd a);

/// Classical (Torgerson) MDS: square the value matrix, double-center, take
/// the top `out_dim` eigenpairs, scale eigenvectors by sqrt of eigenvalues
/// (negative eigenvalues clamp to coordinate zero). Returns k x out_dim
/// coordinates.
Eigen::MatrixXd classical_mds(const Eigen::MatrixXd& values, int out_dim = 2);

}  // namespace slicedgw::cli
