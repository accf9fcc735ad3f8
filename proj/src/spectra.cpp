#include "lapcon/spectra.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "lapcon/errors.hpp"
#include "lapcon/stats.hpp"

namespace lapcon {

namespace {

void check_square(const Mat& M, const char* where) {
  if (M.rows() != M.cols())
    throw invalid_dimension_error(std::string(where) + ": matrix is not square");
  if (M.rows() < 1) throw invalid_dimension_error(std::string(where) + ": empty matrix");
}

void check_symmetric(const Mat& M, const char* where) {
  check_square(M, where);
  const double scale = M.cwiseAbs().maxCoeff();
  const double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * std::max(1.0, scale))
    throw invalid_parameter_error(std::string(where) + ": matrix is not symmetric");
}

// Largest-magnitude entry positive; ties resolved by the lowest index.
void fix_sign(Eigen::Ref<Vec> v) {
  int best = 0;
  double best_abs = std::abs(v(0));
  for (int i = 1; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (v(best) < 0.0) v = -v;
}

}  // namespace

Vec degrees(const Adjacency& A) { return A.degrees(); }

Mat regularize(const Adjacency& A, double tau) {
  if (!(tau >= 0.0))
    throw invalid_parameter_error("regularize: tau must be >= 0");
  const int n = A.n();
  Mat M = A.dense();
  M.array() += tau / n;
  return M;
}

Mat laplacian(const Mat& M, const Vec& d) {
  check_symmetric(M, "laplacian");
  if (d.size() != M.rows())
    throw invalid_dimension_error("laplacian: degree vector size mismatch");
  if ((d.array() <= 0.0).any())
    throw zero_degree_error("laplacian: nonpositive degree; regularize first");
  const Vec s = d.array().rsqrt();
  Mat L = -(s.asDiagonal() * M * s.asDiagonal());
  L.diagonal().array() += 1.0;
  return L;
}

Spectrum eig_sym(const Mat& M) {
  check_symmetric(M, "eig_sym");
  if (!M.allFinite()) throw numeric_error("eig_sym: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Mat> solver(M);
  if (solver.info() != Eigen::Success)
    throw numeric_error("eig_sym: eigensolver did not converge");
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (int k = 0; k < s.eigenvectors.cols(); ++k) fix_sign(s.eigenvectors.col(k));
  return s;
}

double spectral_norm(const Mat& M) {
  check_symmetric(M, "spectral_norm");
  if (!M.allFinite()) throw numeric_error("spectral_norm: non-finite entries");
  Eigen::SelfAdjointEigenSolver<Mat> solver(M, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw numeric_error("spectral_norm: eigensolver did not converge");
  const Vec& ev = solver.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

double hs_norm(const Mat& M) { return M.norm(); }

Vec v0(const Vec& d) {
  if (d.size() < 1) throw invalid_dimension_error("v0: empty degree vector");
  if ((d.array() <= 0.0).any())
    throw zero_degree_error("v0: nonpositive degree");
  Vec v = d.array().sqrt();
  v /= std::sqrt(d.sum());
  return v;
}

ExpectedRegLaplacian expected_reg_laplacian_homog(int n, double p, double tau) {
  if (n < 2) throw invalid_dimension_error("expected_reg_laplacian_homog: n must be >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw invalid_parameter_error("expected_reg_laplacian_homog: p must lie in [0,1]");
  if (!(tau >= 0.0))
    throw invalid_parameter_error("expected_reg_laplacian_homog: tau must be >= 0");
  const double dbar = (n - 1) * p + tau;
  if (!(dbar > 0.0))
    throw zero_degree_error("expected_reg_laplacian_homog: (n-1)p + tau must be positive");
  Mat EA = Mat::Constant(n, n, p + tau / n);
  EA.diagonal().setConstant(tau / n);
  ExpectedRegLaplacian out;
  out.matrix = laplacian(EA, Vec::Constant(n, dbar));
  out.norm = 1.0 + p / dbar;
  return out;
}

void write_spectrum_csv(const Vec& eigenvalues, std::ostream& out) {
  out << "index,eigenvalue\n";
  for (int i = 0; i < eigenvalues.size(); ++i)
    out << (i + 1) << ',' << format_double(eigenvalues(i)) << '\n';
}

void write_matrix_csv(const Mat& M, std::ostream& out) {
  for (int i = 0; i < M.rows(); ++i) {
    for (int j = 0; j < M.cols(); ++j) {
      if (j) out << ',';
      out << format_double(M(i, j));
    }
    out << '\n';
  }
}

}  // namespace lapcon
