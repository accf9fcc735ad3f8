#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "lapcon/graphs.hpp"
#include "lapcon/spectra.hpp"

namespace lapcon {

/// Parameters of the deviation bounds. C is a fitted constant, never a
/// hard-coded truth: the bounds hold up to an unspecified universal
/// factor, so every evaluator takes C explicitly.
struct BoundParams {
  double C = 1.0;
  double r = 1.0;       // tail parameter, >= 1
  double tau = 0.0;     // regularization, >= 0
  double d = 0.0;       // max_{ij} n * p_ij
  int n = 0;
  double alpha = 0.25;  // in (0, 1/2)
  double beta = 0.125;  // in (0, 1/4)
};

// C * r^2 * tau^{-1/2} * (1 + d/tau)^{1/2}
double bound_new(const BoundParams& bp);

// C * r^2 * tau^{-1/2} * (1 + d/tau)^{5/2}
double bound_old(const BoundParams& bp);

// C * r^2 / sqrt((np)^{1-4 beta} + tau/(np)); tau = 0 removes the
// regularization term entirely.
double bound_tau_independent(const BoundParams& bp, double p);

/// Which metric groups deviation_laplacian computes. Each dense spectral
/// norm costs an O(n^3) solve, so heavy sweeps switch the unused ones off.
struct MetricSelect {
  bool dev_l = true;       // ||L(A_tau) - L(EA_tau)||
  bool b_split = true;     // ||B1||, ||B2|| of the two-term decomposition
  bool adjacency = true;   // ||A - EA||
  bool degree_stats = true;
  bool plain = true;       // norm gap, v0 alignment, top overlap of L(A)

  static MetricSelect all() { return {}; }
  static MetricSelect deviation_only() { return {true, true, true, true, false}; }
  static MetricSelect dev_l_only() { return {true, false, false, true, false}; }
  static MetricSelect plain_only() { return {false, false, false, true, true}; }
};

/// Per-trial deviation metrics. Fields not requested, or undefined for the
/// trial (the unregularized metrics need every degree positive), are NaN.
struct DeviationRecord {
  double dev_L = kUnset;        // ||L(A_tau) - L(EA_tau)||
  double dev_B1 = kUnset;       // ||L(A_tau) - N||
  double dev_B2 = kUnset;       // ||N - L(EA_tau)||
  double dev_A = kUnset;        // ||A - EA||
  double deg_sq = kUnset;       // sum_i (d_i - dbar_i)^2
  double deg_max = kUnset;      // max_i |d_i - dbar_i|
  double deg_l2 = kUnset;       // ||d - dbar||_2
  double sum_reg_sq = kUnset;   // sum_i (d_i + tau)^2
  double norm_gap = kUnset;     // | ||L(A)|| - 1 |
  double v0_align = kUnset;     // ||v0 - ones/sqrt(n)||_2
  double top_overlap = kUnset;  // |<v_top(L(A)), ones/sqrt(n)>|

  static constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
};

// Full deviation record at regularization tau. The two-term split goes
// through the mixed intermediate N = I - Dtau^{-1/2} EA_tau Dtau^{-1/2}
// (random degrees, expected adjacency), so B1 + B2 telescopes to the
// whole deviation exactly.
DeviationRecord deviation_laplacian(const Adjacency& A, const ProbMatrix& P,
                                    double tau,
                                    const MetricSelect& metrics = MetricSelect::all());

// sum_i (d_i - dbar_i)^2
double degree_sq_deviation(const Adjacency& A, const ProbMatrix& P);

// sum_i (d_i + tau)^2
double sum_reg_sq_degrees(const Vec& d, double tau);

// | ||L(A)|| - 1 | for the unregularized Laplacian.
double norm_gap(const Adjacency& A);

// ||v0(d) - ones/sqrt(n)||_2
double v0_alignment(const Vec& d);

// |<v_1, ones/sqrt(n)>| where v_1 belongs to the largest eigenvalue of L.
double top_overlap(const Mat& L);

// Exact order-statistic quantile of `samples` divided by `shape`: the
// smallest C that makes C * shape cover that quantile.
double fit_constant(std::span<const double> samples, double shape, double q);

using SweepFamily = std::function<ProbMatrix(double)>;

// The homogeneous family p -> G(n, p).
SweepFamily homogeneous_family(int n);

// Log-spaced grid from lo to hi inclusive (the default sweep grid uses 32
// points).
std::vector<double> log_grid(double lo, double hi, int points);

/// Metrics along a probability grid driven by one shared CoupledSample,
/// so the adjacency family is nested and the grid supremum lower-bounds
/// the continuum supremum with coupled randomness.
struct SweepResult {
  std::vector<double> grid;
  std::vector<DeviationRecord> records;  // one per grid point
  DeviationRecord sup;                   // per-metric max over defined values
};

SweepResult sweep(const CoupledSample& U, const SweepFamily& model,
                  std::span<const double> grid, double tau,
                  const MetricSelect& metrics = MetricSelect::all());

}  // namespace lapcon
