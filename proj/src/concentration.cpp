#include "lapcon/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "lapcon/errors.hpp"
#include "lapcon/stats.hpp"

namespace lapcon {

namespace {

void check_bound_params(const BoundParams& bp, const char* where) {
  if (!(bp.r >= 1.0)) throw invalid_parameter_error(std::string(where) + ": r must be >= 1");
  if (!(bp.d >= 0.0)) throw invalid_parameter_error(std::string(where) + ": d must be >= 0");
}

double nan_max(double acc, double x) {
  if (std::isnan(x)) return acc;
  if (std::isnan(acc)) return x;
  return std::max(acc, x);
}

}  // namespace

double bound_new(const BoundParams& bp) {
  check_bound_params(bp, "bound_new");
  if (!(bp.tau > 0.0)) throw invalid_parameter_error("bound_new: tau must be positive");
  return bp.C * bp.r * bp.r / std::sqrt(bp.tau) * std::sqrt(1.0 + bp.d / bp.tau);
}

double bound_old(const BoundParams& bp) {
  check_bound_params(bp, "bound_old");
  if (!(bp.tau > 0.0)) throw invalid_parameter_error("bound_old: tau must be positive");
  return bp.C * bp.r * bp.r / std::sqrt(bp.tau) * std::pow(1.0 + bp.d / bp.tau, 2.5);
}

double bound_tau_independent(const BoundParams& bp, double p) {
  check_bound_params(bp, "bound_tau_independent");
  if (!(bp.alpha > 0.0 && bp.alpha < 0.5))
    throw invalid_parameter_error("bound_tau_independent: alpha must lie in (0, 1/2)");
  if (!(bp.beta > 0.0 && bp.beta < 0.25))
    throw invalid_parameter_error("bound_tau_independent: beta must lie in (0, 1/4)");
  if (!(bp.tau >= 0.0))
    throw invalid_parameter_error("bound_tau_independent: tau must be >= 0");
  const double np = bp.n * p;
  if (!(np > 0.0)) throw invalid_parameter_error("bound_tau_independent: np must be positive");
  return bp.C * bp.r * bp.r / std::sqrt(std::pow(np, 1.0 - 4.0 * bp.beta) + bp.tau / np);
}

DeviationRecord deviation_laplacian(const Adjacency& A, const ProbMatrix& P,
                                    double tau, const MetricSelect& metrics) {
  if (A.n() != P.n())
    throw invalid_dimension_error("deviation_laplacian: graph and model sizes differ");
  if (!(tau >= 0.0))
    throw invalid_parameter_error("deviation_laplacian: tau must be >= 0");

  const int n = A.n();
  const Vec deg = A.degrees();
  const Vec dbar = P.expected_degrees();

  DeviationRecord rec;
  if (metrics.degree_stats) {
    const Vec diff = deg - dbar;
    rec.deg_sq = diff.squaredNorm();
    rec.deg_max = diff.cwiseAbs().maxCoeff();
    rec.deg_l2 = diff.norm();
    rec.sum_reg_sq = sum_reg_sq_degrees(deg, tau);
  }

  const bool need_dense = metrics.dev_l || metrics.b_split || metrics.adjacency || metrics.plain;
  Mat Ad;
  Mat EA;
  if (need_dense) {
    Ad = A.dense();
    EA = expected_adjacency(P);
  }

  if (metrics.dev_l || metrics.b_split) {
    if ((dbar.array() + tau <= 0.0).any() || (deg.array() + tau <= 0.0).any())
      throw zero_degree_error("deviation_laplacian: zero regularized degree");
    Mat At = Ad;
    At.array() += tau / n;
    Mat EAt = EA;
    EAt.array() += tau / n;
    const Vec dt = deg.array() + tau;
    const Vec dbt = dbar.array() + tau;
    const Mat L = laplacian(At, dt);
    const Mat Lbar = laplacian(EAt, dbt);
    if (metrics.dev_l) rec.dev_L = spectral_norm(L - Lbar);
    if (metrics.b_split) {
      // Intermediate with the random degrees but the expected adjacency.
      const Mat N = laplacian(EAt, dt);
      rec.dev_B1 = spectral_norm(L - N);
      rec.dev_B2 = spectral_norm(N - Lbar);
    }
  }

  if (metrics.adjacency) rec.dev_A = spectral_norm(Ad - EA);

  if (metrics.plain) {
    // These describe the unregularized Laplacian; a trial with an
    // isolated vertex leaves them NaN instead of failing the whole
    // record, since the regularized metrics above are still defined.
    if ((deg.array() > 0.0).all()) {
      rec.v0_align = v0_alignment(deg);
      const Spectrum s = eig_sym(laplacian(Ad, deg));
      const double top = std::max(std::abs(s.eigenvalues(0)),
                                  std::abs(s.eigenvalues(n - 1)));
      rec.norm_gap = std::abs(top - 1.0);
      rec.top_overlap =
          std::abs(s.eigenvectors.col(n - 1).sum() / std::sqrt(double(n)));
    }
  }
  return rec;
}

double degree_sq_deviation(const Adjacency& A, const ProbMatrix& P) {
  if (A.n() != P.n())
    throw invalid_dimension_error("degree_sq_deviation: graph and model sizes differ");
  return (A.degrees() - P.expected_degrees()).squaredNorm();
}

double sum_reg_sq_degrees(const Vec& d, double tau) {
  if (!(tau >= 0.0))
    throw invalid_parameter_error("sum_reg_sq_degrees: tau must be >= 0");
  return (d.array() + tau).square().sum();
}

double norm_gap(const Adjacency& A) {
  const Vec deg = A.degrees();
  if ((deg.array() <= 0.0).any())
    throw zero_degree_error("norm_gap: isolated vertex");
  return std::abs(spectral_norm(laplacian(A.dense(), deg)) - 1.0);
}

double v0_alignment(const Vec& d) {
  const Vec v = v0(d);
  const double inv_sqrt_n = 1.0 / std::sqrt(double(d.size()));
  return (v.array() - inv_sqrt_n).matrix().norm();
}

double top_overlap(const Mat& L) {
  const Spectrum s = eig_sym(L);
  const int n = s.n();
  return std::abs(s.eigenvectors.col(n - 1).sum() / std::sqrt(double(n)));
}

double fit_constant(std::span<const double> samples, double shape, double q) {
  if (samples.empty()) throw invalid_parameter_error("fit_constant: no samples");
  if (!(shape > 0.0)) throw invalid_parameter_error("fit_constant: shape must be positive");
  return quantile_exact(samples, q) / shape;
}

SweepFamily homogeneous_family(int n) {
  return [n](double p) { return ProbMatrix::homogeneous(n, p); };
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo))
    throw invalid_parameter_error("log_grid: need 0 < lo < hi");
  if (points < 2) throw invalid_parameter_error("log_grid: need at least 2 points");
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = hi / lo;
  for (int k = 0; k < points; ++k)
    grid[k] = lo * std::pow(ratio, double(k) / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

SweepResult sweep(const CoupledSample& U, const SweepFamily& model,
                  std::span<const double> grid, double tau,
                  const MetricSelect& metrics) {
  if (grid.empty()) throw invalid_parameter_error("sweep: empty grid");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] >= 0.0 && grid[k] <= 1.0))
      throw invalid_parameter_error("sweep: grid values must lie in [0,1]");
    if (k > 0 && !(grid[k] > grid[k - 1]))
      throw invalid_parameter_error("sweep: grid must be strictly increasing");
  }

  SweepResult result;
  result.grid.assign(grid.begin(), grid.end());
  result.records.reserve(grid.size());
  for (double p : grid) {
    const ProbMatrix P = model(p);
    const Adjacency A = threshold(U, P);
    result.records.push_back(deviation_laplacian(A, P, tau, metrics));
  }

  DeviationRecord& sup = result.sup;
  for (const DeviationRecord& r : result.records) {
    sup.dev_L = nan_max(sup.dev_L, r.dev_L);
    sup.dev_B1 = nan_max(sup.dev_B1, r.dev_B1);
    sup.dev_B2 = nan_max(sup.dev_B2, r.dev_B2);
    sup.dev_A = nan_max(sup.dev_A, r.dev_A);
    sup.deg_sq = nan_max(sup.deg_sq, r.deg_sq);
    sup.deg_max = nan_max(sup.deg_max, r.deg_max);
    sup.deg_l2 = nan_max(sup.deg_l2, r.deg_l2);
    sup.sum_reg_sq = nan_max(sup.sum_reg_sq, r.sum_reg_sq);
    sup.norm_gap = nan_max(sup.norm_gap, r.norm_gap);
    sup.v0_align = nan_max(sup.v0_align, r.v0_align);
    sup.top_overlap = nan_max(sup.top_overlap, r.top_overlap);
  }
  return result;
}

}  // namespace lapcon
