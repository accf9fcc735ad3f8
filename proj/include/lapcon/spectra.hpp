#pragma once

#include <ostream>

#include <Eigen/Core>

#include "lapcon/graphs.hpp"

namespace lapcon {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

/// Verified eigendecomposition of a dense symmetric matrix.
///
/// Eigenvalues ascend; eigenvector columns are orthonormal with a fixed
/// sign convention (largest-magnitude entry positive, ties broken by the
/// lowest index), so downstream alignment metrics are reproducible.
struct Spectrum {
  Vec eigenvalues;
  Mat eigenvectors;  // column k pairs with eigenvalues[k]

  int n() const { return static_cast<int>(eigenvalues.size()); }
};

// Row sums of A.
Vec degrees(const Adjacency& A);

// A + (tau/n) * ones, including the diagonal.
Mat regularize(const Adjacency& A, double tau);

// I - D^{-1/2} M D^{-1/2} with D = diag(d). All d_i must be positive;
// for a regularized adjacency pass d_i = deg_i(A) + tau.
Mat laplacian(const Mat& M, const Vec& d);

Spectrum eig_sym(const Mat& M);

// max_k |lambda_k|
double spectral_norm(const Mat& M);

// sqrt(sum_ij M_ij^2); dominates the spectral norm.
double hs_norm(const Mat& M);

// Unit vector with entries sqrt(d_i)/sqrt(sum d); spans the kernel of the
// normalized Laplacian built from d.
Vec v0(const Vec& d);

struct ExpectedRegLaplacian {
  Mat matrix;
  double norm;  // closed form: 1 + p / ((n-1)p + tau)
};

// L(EA_tau) for the homogeneous model together with its closed-form
// spectral norm; the closed form serves as an independent oracle for the
// dense eigensolver.
ExpectedRegLaplacian expected_reg_laplacian_homog(int n, double p, double tau);

// CSV "index,eigenvalue" rows, ascending, 1-based index.
void write_spectrum_csv(const Vec& eigenvalues, std::ostream& out);

// Dense rows, comma separated, 17 significant digits.
void write_matrix_csv(const Mat& M, std::ostream& out);

}  // namespace lapcon
