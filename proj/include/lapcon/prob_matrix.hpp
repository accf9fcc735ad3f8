#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Core>

namespace lapcon {

/// Symmetric edge-probability model P = (p_ij) with zero diagonal.
///
/// Three shapes are supported:
///  - Homogeneous(p): every pair connects with the same probability.
///  - Sbm(a, b): two equal communities (first and second half of the
///    vertices); probability a/n inside a community, b/n across.
///  - Weighted(w): product form p_ij = w_i * w_j / sum(w), the minimal
///    model matching a prescribed expected-degree sequence.
class ProbMatrix {
 public:
  struct Homogeneous {
    double p;
  };
  struct Sbm {
    double a;
    double b;
  };
  struct Weighted {
    std::vector<double> w;
    double w_sum;
  };
  using Kind = std::variant<Homogeneous, Sbm, Weighted>;

  static ProbMatrix homogeneous(int n, double p);
  static ProbMatrix sbm(int n, double a, double b);
  static ProbMatrix weighted(std::vector<double> w);

  int n() const { return n_; }
  const Kind& kind() const { return kind_; }

  // p_ij; zero on the diagonal.
  double p(int i, int j) const;

  double max_p() const;

  // sum_{j != i} p_ij
  double expected_degree(int i) const;
  Eigen::VectorXd expected_degrees() const;

  // {n, kind, parameters} record.
  std::string to_json() const;

 private:
  ProbMatrix(int n, Kind kind) : n_(n), kind_(std::move(kind)) {}

  int n_ = 0;
  Kind kind_;
};

// Two-tier product-form profile: the first floor((1-high_frac)*n) vertices
// get weight low_deg, the rest high_deg.
ProbMatrix figure1_profile(int n = 1000, double low_deg = 7.0,
                           double high_deg = 35.0, double high_frac = 0.1);

// Dense EA: entry (i,j) is p_ij, diagonal zero.
Eigen::MatrixXd expected_adjacency(const ProbMatrix& P);

}  // namespace lapcon
