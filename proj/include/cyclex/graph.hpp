#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclex/bigint.hpp"

namespace cyclex {

using VertexMask = std::uint64_t;
using Edge = std::pair<int, int>;

inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on at most 64 vertices; one adjacency word per vertex.
///
/// Instances are immutable: the editing helpers below return new graphs.
class Graph {
 public:
  /// Builds from adjacency rows. Throws std::invalid_argument unless the rows
  /// describe a symmetric, irreflexive relation on [0, rows.size()).
  static Graph from_rows(std::vector<VertexMask> rows);

  int n() const { return static_cast<int>(adj_.size()); }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  std::span<const VertexMask> rows() const { return adj_; }
  bool has_edge(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const { return std::popcount(neighbors(v)); }
  int edge_count() const;
  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;
  VertexMask all_vertices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexMask> rows) : adj_(std::move(rows)) {}
  std::vector<VertexMask> adj_;
};

/// Composition (c_1, ..., c_k) of n; defines the complete multipartite graph K_c.
class ClassVector {
 public:
  /// Throws std::invalid_argument on an empty vector, a nonpositive part, or n > 64.
  explicit ClassVector(std::vector<int> parts);

  /// Balanced k-part vector of n, nonincreasing (class sizes of T_k(n)).
  static ClassVector balanced(int n, int k);

  std::span<const int> parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int k() const { return static_cast<int>(parts_.size()); }
  int n() const { return n_; }
  bool is_balanced() const;
  ClassVector sorted_descending() const;
  std::string to_string() const;

  friend bool operator==(const ClassVector&, const ClassVector&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Graph make_graph(int n, std::span<const Edge> edges);
Graph make_graph(int n, std::initializer_list<Edge> edges);
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);

/// T_k(n): classes of size floor(n/k) or ceil(n/k), larger classes first.
Graph turan_graph(int n, int k);
BigCount turan_edge_count(int n, int k);
/// t_k(n) as a machine integer (n <= 2^16 keeps it well inside 64 bits).
long long turan_edges(long long n, long long k);

/// Vertices are numbered class by class, in the order of c.
Graph complete_multipartite(const ClassVector& c);

Graph add_edge(const Graph& g, int u, int v);
Graph remove_edge(const Graph& g, int u, int v);
Graph remove_edges(const Graph& g, std::span<const Edge> edges);
/// Vertex v of g becomes perm[v] in the result.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace cyclex
