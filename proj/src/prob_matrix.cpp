#include "lapcon/prob_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

#include "lapcon/errors.hpp"

namespace lapcon {

ProbMatrix ProbMatrix::homogeneous(int n, double p) {
  if (n < 2) throw invalid_dimension_error("homogeneous: n must be >= 2");
  if (!(p >= 0.0 && p <= 1.0))
    throw invalid_parameter_error("homogeneous: p must lie in [0,1]");
  return ProbMatrix(n, Homogeneous{p});
}

ProbMatrix ProbMatrix::sbm(int n, double a, double b) {
  if (n < 2 || n % 2 != 0)
    throw invalid_dimension_error("sbm: n must be even and >= 2");
  if (!(a >= 0.0 && b >= 0.0 && a <= n && b <= n))
    throw invalid_parameter_error("sbm: need 0 <= a, b <= n so probabilities stay in [0,1]");
  return ProbMatrix(n, Sbm{a, b});
}

ProbMatrix ProbMatrix::weighted(std::vector<double> w) {
  const int n = static_cast<int>(w.size());
  if (n < 2) throw invalid_dimension_error("weighted: need at least 2 weights");
  double sum = 0.0, max_w = 0.0;
  for (double x : w) {
    if (!(x >= 0.0) || !std::isfinite(x))
      throw invalid_profile_error("weighted: weights must be finite and nonnegative");
    sum += x;
    max_w = std::max(max_w, x);
  }
  if (!(sum > 0.0)) throw invalid_profile_error("weighted: weights sum to zero");
  if (max_w * max_w > sum)
    throw invalid_profile_error("weighted: max w_i^2 exceeds sum of weights");
  return ProbMatrix(n, Weighted{std::move(w), sum});
}

double ProbMatrix::p(int i, int j) const {
  if (i == j) return 0.0;
  if (const auto* h = std::get_if<Homogeneous>(&kind_)) return h->p;
  if (const auto* s = std::get_if<Sbm>(&kind_)) {
    const int half = n_ / 2;
    const bool same = (i < half) == (j < half);
    return (same ? s->a : s->b) / n_;
  }
  const auto& w = std::get<Weighted>(kind_);
  return w.w[i] * w.w[j] / w.w_sum;
}

double ProbMatrix::max_p() const {
  if (const auto* h = std::get_if<Homogeneous>(&kind_)) return h->p;
  if (const auto* s = std::get_if<Sbm>(&kind_)) return std::max(s->a, s->b) / n_;
  const auto& w = std::get<Weighted>(kind_);
  // The two largest weights give the largest product.
  double m1 = 0.0, m2 = 0.0;
  for (double x : w.w) {
    if (x >= m1) {
      m2 = m1;
      m1 = x;
    } else {
      m2 = std::max(m2, x);
    }
  }
  return m1 * m2 / w.w_sum;
}

double ProbMatrix::expected_degree(int i) const {
  if (const auto* h = std::get_if<Homogeneous>(&kind_)) return (n_ - 1) * h->p;
  if (const auto* s = std::get_if<Sbm>(&kind_)) {
    const int half = n_ / 2;
    return (half - 1) * s->a / n_ + half * s->b / n_;
  }
  const auto& w = std::get<Weighted>(kind_);
  return w.w[i] * (w.w_sum - w.w[i]) / w.w_sum;
}

Eigen::VectorXd ProbMatrix::expected_degrees() const {
  Eigen::VectorXd d(n_);
  for (int i = 0; i < n_; ++i) d(i) = expected_degree(i);
  return d;
}

std::string ProbMatrix::to_json() const {
  nlohmann::json j;
  j["n"] = n_;
  if (const auto* h = std::get_if<Homogeneous>(&kind_)) {
    j["kind"] = "homogeneous";
    j["parameters"] = {{"p", h->p}};
  } else if (const auto* s = std::get_if<Sbm>(&kind_)) {
    j["kind"] = "sbm";
    j["parameters"] = {{"a", s->a}, {"b", s->b}};
  } else {
    const auto& w = std::get<Weighted>(kind_);
    j["kind"] = "weighted";
    j["parameters"] = {{"weights", w.w}};
  }
  return j.dump();
}

ProbMatrix figure1_profile(int n, double low_deg, double high_deg, double high_frac) {
  if (n < 2) throw invalid_dimension_error("figure1_profile: n must be >= 2");
  if (!(high_frac >= 0.0 && high_frac <= 1.0))
    throw invalid_parameter_error("figure1_profile: high_frac must lie in [0,1]");
  const int n_low = static_cast<int>(std::floor((1.0 - high_frac) * n));
  std::vector<double> w(static_cast<std::size_t>(n), high_deg);
  std::fill(w.begin(), w.begin() + n_low, low_deg);
  return ProbMatrix::weighted(std::move(w));
}

Eigen::MatrixXd expected_adjacency(const ProbMatrix& P) {
  const int n = P.n();
  Eigen::MatrixXd M(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) M(i, j) = P.p(i, j);
  }
  return M;
}

}  // namespace lapcon
