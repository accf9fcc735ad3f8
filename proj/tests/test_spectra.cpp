#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lapcon/errors.hpp"
#include "lapcon/rng.hpp"
#include "lapcon/spectra.hpp"

using namespace lapcon;

namespace {

Mat random_symmetric(int n, std::uint64_t seed, double scale = 1.0) {
  SplitMix64 gen(seed);
  Mat M(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double x = scale * (2.0 * gen.next_unit() - 1.0);
      M(i, j) = x;
      M(j, i) = x;
    }
  }
  return M;
}

}  // namespace

TEST_CASE("degrees of small graphs") {
  CHECK(degrees(Adjacency(3)).isZero(0.0));
  const Vec dp = degrees(path_graph(3));
  CHECK(dp(0) == 1.0);
  CHECK(dp(1) == 2.0);
  CHECK(dp(2) == 1.0);
  CHECK(degrees(complete_graph(4)).isConstant(3.0));
}

TEST_CASE("regularize") {
  CHECK(regularize(Adjacency(3), 3.0).isApprox(Mat::Ones(3, 3)));
  const Adjacency K2 = complete_graph(2);
  CHECK(regularize(K2, 0.0).isApprox(K2.dense()));
  const Mat R = regularize(K2, 1.0);
  CHECK(R(0, 0) == 0.5);
  CHECK(R(0, 1) == 1.5);
  CHECK(R(1, 0) == 1.5);
  CHECK(R(1, 1) == 0.5);
  CHECK_THROWS_AS(regularize(K2, -1.0), invalid_parameter_error);
}

TEST_CASE("laplacian of reference graphs") {
  // Empty graph plus regularization: I - J/n, eigenvalues {0, 1 x (n-1)}.
  const int n = 6;
  const Mat At = regularize(Adjacency(n), 2.0);
  const Spectrum s = eig_sym(laplacian(At, Vec::Constant(n, 2.0)));
  CHECK(std::abs(s.eigenvalues(0)) < 1e-12);
  for (int k = 1; k < n; ++k) CHECK(s.eigenvalues(k) == doctest::Approx(1.0));

  const Adjacency P3 = path_graph(3);
  const Spectrum sp = eig_sym(laplacian(P3.dense(), degrees(P3)));
  CHECK(std::abs(sp.eigenvalues(0) - 0.0) < 1e-10);
  CHECK(std::abs(sp.eigenvalues(1) - 1.0) < 1e-10);
  CHECK(std::abs(sp.eigenvalues(2) - 2.0) < 1e-10);

  for (int m : {3, 5, 8}) {
    const Adjacency K = complete_graph(m);
    const Spectrum sk = eig_sym(laplacian(K.dense(), degrees(K)));
    CHECK(std::abs(sk.eigenvalues(0)) < 1e-10);
    for (int k = 1; k < m; ++k)
      CHECK(std::abs(sk.eigenvalues(k) - double(m) / (m - 1)) < 1e-10);
  }

  CHECK_THROWS_AS(laplacian(P3.dense(), degrees(Adjacency(3))), zero_degree_error);
}

TEST_CASE("eig_sym reference cases and sign convention") {
  const Spectrum si = eig_sym(Mat::Identity(5, 5));
  CHECK(si.eigenvalues.isConstant(1.0));

  Mat D = Mat::Zero(3, 3);
  D(0, 0) = 1.0;
  D(1, 1) = -3.0;
  D(2, 2) = 2.0;
  const Spectrum sd = eig_sym(D);
  CHECK(sd.eigenvalues(0) == doctest::Approx(-3.0));
  CHECK(sd.eigenvalues(1) == doctest::Approx(1.0));
  CHECK(sd.eigenvalues(2) == doctest::Approx(2.0));
  // Standard basis vectors, made positive by the sign rule.
  CHECK(sd.eigenvectors.col(0)(1) == doctest::Approx(1.0));
  CHECK(sd.eigenvectors.col(1)(0) == doctest::Approx(1.0));
  CHECK(sd.eigenvectors.col(2)(2) == doctest::Approx(1.0));

  const Adjacency P3 = path_graph(3);
  const Spectrum sp = eig_sym(laplacian(P3.dense(), degrees(P3)));
  const Vec kernel = sp.eigenvectors.col(0);
  CHECK(kernel(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(kernel(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(kernel(2) == doctest::Approx(0.5).epsilon(1e-12));

  Mat bad = Mat::Identity(2, 2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(eig_sym(bad), invalid_parameter_error);
  Mat inf = Mat::Zero(2, 2);
  inf(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(eig_sym(inf), numeric_error);
}

TEST_CASE("spectrum invariants on random matrices") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Mat M = random_symmetric(40, seed, 2.0);
    const Spectrum s = eig_sym(M);
    const double scale = std::max(1.0, spectral_norm(M));
    // Residuals and orthonormality.
    const Mat R = M * s.eigenvectors - s.eigenvectors * s.eigenvalues.asDiagonal();
    for (int k = 0; k < M.rows(); ++k) CHECK(R.col(k).norm() <= 1e-10 * scale);
    const Mat G = s.eigenvectors.transpose() * s.eigenvectors;
    CHECK((G - Mat::Identity(40, 40)).cwiseAbs().maxCoeff() <= 1e-10);
    // Reconstruction.
    const Mat back =
        s.eigenvectors * s.eigenvalues.asDiagonal() * s.eigenvectors.transpose();
    CHECK(spectral_norm(back - M) <= 1e-9 * scale);
    // Ascending order.
    for (int k = 1; k < 40; ++k) CHECK(s.eigenvalues(k) >= s.eigenvalues(k - 1));
  }
}

TEST_CASE("spectral and Hilbert-Schmidt norms") {
  CHECK(spectral_norm(Mat::Identity(4, 4)) == doctest::Approx(1.0));
  Mat D = Mat::Zero(3, 3);
  D(0, 0) = 1.0;
  D(1, 1) = -3.0;
  D(2, 2) = 2.0;
  CHECK(spectral_norm(D) == doctest::Approx(3.0));
  const Adjacency P3 = path_graph(3);
  CHECK(spectral_norm(laplacian(P3.dense(), degrees(P3))) == doctest::Approx(2.0));

  CHECK(hs_norm(Mat::Identity(4, 4)) == doctest::Approx(2.0));
  CHECK(hs_norm(Mat::Zero(3, 3)) == 0.0);
  Mat X = Mat::Zero(2, 2);
  X(0, 1) = X(1, 0) = 1.0;
  CHECK(hs_norm(X) == doctest::Approx(std::sqrt(2.0)));
  CHECK(spectral_norm(X) == doctest::Approx(1.0));

  for (std::uint64_t seed : {11u, 12u, 13u, 14u}) {
    const Mat M = random_symmetric(25, seed);
    CHECK(spectral_norm(M) <= hs_norm(M) + 1e-12);
  }
}

TEST_CASE("kernel vector v0") {
  CHECK(v0(Vec::Constant(7, 3.0)).isApproxToConstant(1.0 / std::sqrt(7.0), 1e-14));
  const Vec vp = v0(degrees(path_graph(3)));
  CHECK(vp(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(vp(1) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(vp(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(vp.norm() == doctest::Approx(1.0).epsilon(1e-14));

  Vec dz = Vec::Constant(3, 1.0);
  dz(2) = 0.0;
  CHECK_THROWS_AS(v0(dz), zero_degree_error);

  // L(A) v0 = 0 on random graphs without isolated vertices.
  int done = 0;
  for (std::uint64_t t = 0; done < 5 && t < 50; ++t) {
    const Adjacency A = threshold(sample_uniforms(50, derive_seed(5, t)),
                                  ProbMatrix::homogeneous(50, 0.2));
    if (A.has_isolated_vertex()) continue;
    const Vec d = degrees(A);
    const Vec res = laplacian(A.dense(), d) * v0(d);
    CHECK(res.cwiseAbs().maxCoeff() <= 1e-10);
    ++done;
  }
  CHECK(done == 5);
}

TEST_CASE("regularized Laplacian spectrum stays in [0,2] with kernel at v0") {
  for (double tau : {0.5, 5.0, 50.0}) {
    const Adjacency A = threshold(sample_uniforms(60, 77),
                                  ProbMatrix::homogeneous(60, 0.1));
    const Vec dt = degrees(A).array() + tau;
    const Spectrum s = eig_sym(laplacian(regularize(A, tau), dt));
    CHECK(s.eigenvalues(0) >= -1e-10);
    CHECK(s.eigenvalues(59) <= 2.0 + 1e-10);
    CHECK(std::abs(s.eigenvalues(0)) <= 1e-10);
    const Vec v = s.eigenvectors.col(0);
    const Vec v_ref = v0(dt);
    const double dot = v.dot(v_ref);
    const double sin_angle = (v - dot * v_ref).norm();
    CHECK(sin_angle <= 1e-8);
  }
}

TEST_CASE("closed-form norm of the expected regularized Laplacian") {
  CHECK(expected_reg_laplacian_homog(10, 0.0, 2.0).norm == doctest::Approx(1.0));
  CHECK(expected_reg_laplacian_homog(11, 0.1, 0.0).norm == doctest::Approx(1.1));
  CHECK(expected_reg_laplacian_homog(1000, 0.007, 7.0).norm ==
        doctest::Approx(1.0 + 0.007 / (6.993 + 7.0)).epsilon(1e-14));

  for (int n : {10, 100}) {
    for (double p : {0.01, 0.1, 0.5, 1.0}) {
      for (double tau : {0.0, 1.0, 10.0}) {
        if ((n - 1) * p + tau <= 0.0) continue;
        const ExpectedRegLaplacian ref = expected_reg_laplacian_homog(n, p, tau);
        CHECK(std::abs(spectral_norm(ref.matrix) - ref.norm) <= 1e-10);
      }
    }
  }

  CHECK_THROWS_AS(expected_reg_laplacian_homog(10, 0.0, 0.0), zero_degree_error);
  CHECK_THROWS_AS(expected_reg_laplacian_homog(10, -0.1, 1.0), invalid_parameter_error);
}

TEST_CASE("spectrum and matrix CSV formats") {
  Mat D = Mat::Zero(2, 2);
  D(0, 0) = 0.5;
  D(1, 1) = 1.0;
  std::ostringstream spec_out;
  write_spectrum_csv(eig_sym(D).eigenvalues, spec_out);
  CHECK(spec_out.str() == "index,eigenvalue\n1,0.5\n2,1\n");

  std::ostringstream mat_out;
  write_matrix_csv(D, mat_out);
  CHECK(mat_out.str() == "0.5,0\n0,1\n");
}
