#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapcon/graphs.hpp"
#include "lapcon/spectra.hpp"

namespace lapcon {

// Entries are +1 or -1.
using CommunityLabels = std::vector<int>;

// Ground truth of the two-block model: +1 on the first half, -1 on the
// second. n must be even.
CommunityLabels sbm_truth(int n);

// Twice the mean degree.
double tau_default(const Vec& d);

// Sign of the eigenvector of the second-smallest eigenvalue of L(A_tau);
// zero entries map to +1.
CommunityLabels spectral_partition(const Adjacency& A, double tau);

// min(err, 1 - err) over the global label flip.
double misclassification(const CommunityLabels& labels, const CommunityLabels& truth);

// min over beta = +-1 of ||v_hat + beta * v_bar||_2; both inputs unit.
double alignment(const Vec& v_hat, const Vec& v_bar);

// Distance from the second-smallest eigenvalue of L_bar to the rest of
// its spectrum. Errors out if that eigenvalue is degenerate.
double spectral_gap(const Mat& L_bar);

/// Outcome of one regularized spectral-clustering run against the
/// two-block model, with the eigenvector-perturbation certificate.
struct RecoveryReport {
  CommunityLabels labels;
  double misclassification = 0.0;
  double alignment = 0.0;  // min_beta ||v2_hat + beta v2_bar||
  double delta = 0.0;      // spectral gap of L(EA_tau)
  double dk_bound = 0.0;   // 2 * ||L(A_tau) - L(EA_tau)|| / delta
  double tau = 0.0;
  double threshold_ratio = 0.0;  // (a-b)^2 / (a+b)
  bool threshold_met = false;    // threshold_ratio > c_eps, when c_eps given
  std::optional<double> c_eps;
  int n = 0;
  double a = 0.0;
  double b = 0.0;

  // {n, a, b, tau, misclassification, alignment, delta, dk_bound,
  //  threshold_ratio}
  std::string to_json() const;
};

// Full recovery run on an SBM draw. tau defaults to tau_default of the
// observed degrees. Checks alignment <= dk_bound (with 1e-8 slack) and
// throws numeric_error on violation: that inequality is a theorem, so a
// breach means a numerical defect, not bad luck.
RecoveryReport recover(const Adjacency& A, const ProbMatrix& P,
                       std::optional<double> tau = std::nullopt,
                       std::optional<double> c_eps = std::nullopt);

}  // namespace lapcon
