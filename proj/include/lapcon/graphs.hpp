#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lapcon/prob_matrix.hpp"

namespace lapcon {

/// One upper-triangular matrix of uniforms U_ij in [0,1), i < j.
///
/// A single sample drives the whole monotone family {A_p}: thresholding
/// the same uniforms at p <= p' gives nested edge sets. Regeneration from
/// (n, seed) is bit-identical.
class CoupledSample {
 public:
  CoupledSample(int n, std::uint64_t seed);

  int n() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t size() const { return u_.size(); }

  // U_ij for i < j.
  double u(int i, int j) const { return u_[pair_index(n_, i, j)]; }

  const std::vector<double>& data() const { return u_; }

  // Linear index of the pair (i, j), i < j, in row-major upper-triangle
  // order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
  static std::size_t pair_index(int n, int i, int j);

 private:
  int n_;
  std::uint64_t seed_;
  std::vector<double> u_;
};

/// Simple undirected graph as a symmetric 0/1 matrix, zero diagonal.
class Adjacency {
 public:
  explicit Adjacency(int n);

  static Adjacency from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  bool at(int i, int j) const;
  void set_edge(int i, int j);

  std::int64_t edge_count() const;
  Eigen::VectorXd degrees() const;
  bool has_isolated_vertex() const;

  Eigen::MatrixXd dense() const;

  // Entrywise A <= other (both on the same vertex set).
  bool subgraph_of(const Adjacency& other) const;

  // One "i j" pair per line, 1-based, i < j, lexicographically sorted.
  void write_edge_list(std::ostream& out) const;

  const std::vector<std::uint8_t>& upper() const { return bits_; }

 private:
  int n_;
  std::vector<std::uint8_t> bits_;  // upper triangle, pair_index order
};

// n(n-1)/2 uniforms, deterministic in (n, seed).
CoupledSample sample_uniforms(int n, std::uint64_t seed);

// A_ij = 1 iff U_ij < p_ij, symmetrized, zero diagonal.
Adjacency threshold(const CoupledSample& U, const ProbMatrix& P);

Adjacency path_graph(int n);
Adjacency complete_graph(int n);

}  // namespace lapcon
