#include "lapcon/graphs.hpp"

#include <numeric>

#include "lapcon/errors.hpp"
#include "lapcon/rng.hpp"

namespace lapcon {

std::size_t CoupledSample::pair_index(int n, int i, int j) {
  const auto ni = static_cast<std::size_t>(n);
  const auto ii = static_cast<std::size_t>(i);
  const auto jj = static_cast<std::size_t>(j);
  return ii * (2 * ni - ii - 1) / 2 + (jj - ii - 1);
}

CoupledSample::CoupledSample(int n, std::uint64_t seed) : n_(n), seed_(seed) {
  if (n < 2) throw invalid_dimension_error("sample_uniforms: n must be >= 2");
  const std::size_t m = static_cast<std::size_t>(n) * (n - 1) / 2;
  u_.resize(m);
  SplitMix64 gen(seed);
  for (double& x : u_) x = gen.next_unit();
}

CoupledSample sample_uniforms(int n, std::uint64_t seed) {
  return CoupledSample(n, seed);
}

Adjacency::Adjacency(int n) : n_(n) {
  if (n < 1) throw invalid_dimension_error("adjacency: n must be >= 1");
  bits_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, 0);
}

Adjacency Adjacency::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Adjacency A(n);
  for (auto [i, j] : edges) A.set_edge(i, j);
  return A;
}

bool Adjacency::at(int i, int j) const {
  if (i == j) return false;
  if (i > j) std::swap(i, j);
  return bits_[CoupledSample::pair_index(n_, i, j)] != 0;
}

void Adjacency::set_edge(int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_)
    throw invalid_dimension_error("set_edge: vertex pair out of range");
  if (i > j) std::swap(i, j);
  bits_[CoupledSample::pair_index(n_, i, j)] = 1;
}

std::int64_t Adjacency::edge_count() const {
  return std::accumulate(bits_.begin(), bits_.end(), std::int64_t{0},
                         [](std::int64_t acc, std::uint8_t b) { return acc + b; });
}

Eigen::VectorXd Adjacency::degrees() const {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(n_);
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      if (bits_[k]) {
        d(i) += 1.0;
        d(j) += 1.0;
      }
    }
  }
  return d;
}

bool Adjacency::has_isolated_vertex() const {
  const Eigen::VectorXd d = degrees();
  return (d.array() == 0.0).any();
}

Eigen::MatrixXd Adjacency::dense() const {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n_, n_);
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      if (bits_[k]) {
        M(i, j) = 1.0;
        M(j, i) = 1.0;
      }
    }
  }
  return M;
}

bool Adjacency::subgraph_of(const Adjacency& other) const {
  if (other.n_ != n_)
    throw invalid_dimension_error("subgraph_of: vertex counts differ");
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] && !other.bits_[k]) return false;
  }
  return true;
}

void Adjacency::write_edge_list(std::ostream& out) const {
  std::size_t k = 0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j, ++k) {
      if (bits_[k]) out << (i + 1) << ' ' << (j + 1) << '\n';
    }
  }
}

Adjacency threshold(const CoupledSample& U, const ProbMatrix& P) {
  if (U.n() != P.n())
    throw invalid_dimension_error("threshold: sample and model sizes differ");
  const int n = U.n();
  Adjacency A(n);
  std::size_t k = 0;
  const std::vector<double>& u = U.data();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if (u[k] < P.p(i, j)) A.set_edge(i, j);
    }
  }
  return A;
}

Adjacency path_graph(int n) {
  Adjacency A(n);
  for (int i = 0; i + 1 < n; ++i) A.set_edge(i, i + 1);
  return A;
}

Adjacency complete_graph(int n) {
  Adjacency A(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) A.set_edge(i, j);
  }
  return A;
}

}  // namespace lapcon
