#include "cyclex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cyclex {

namespace {

void check_vertex_count(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count must lie in [1, 64], got " + std::to_string(n));
  }
}

VertexMask bit(int v) { return VertexMask{1} << v; }

}  // namespace

Graph Graph::from_rows(std::vector<VertexMask> rows) {
  const int n = static_cast<int>(rows.size());
  check_vertex_count(n);
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  for (int v = 0; v < n; ++v) {
    const VertexMask row = rows[static_cast<std::size_t>(v)];
    if (row & ~all) throw std::invalid_argument("adjacency row references a vertex out of range");
    if (row & bit(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    for (VertexMask r = row; r; r &= r - 1) {
      const int u = std::countr_zero(r);
      if (!(rows[static_cast<std::size_t>(u)] & bit(v))) {
        throw std::invalid_argument("adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexMask row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (VertexMask r = neighbors(u) & ~((bit(u) << 1) - 1); r; r &= r - 1) {
      out.emplace_back(u, std::countr_zero(r));
    }
  }
  return out;
}

VertexMask Graph::all_vertices() const { return n() == 64 ? ~VertexMask{0} : bit(n()) - 1; }

ClassVector::ClassVector(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("class vector must have at least one part");
  long long total = 0;
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("class sizes must be positive");
    total += p;
  }
  if (total > kMaxVertices) throw std::invalid_argument("class vector describes more than 64 vertices");
  n_ = static_cast<int>(total);
}

ClassVector ClassVector::balanced(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("balanced composition needs 1 <= k <= n");
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++parts[static_cast<std::size_t>(i)];
  return ClassVector(std::move(parts));
}

bool ClassVector::is_balanced() const {
  const auto [lo, hi] = std::minmax_element(parts_.begin(), parts_.end());
  return *hi - *lo <= 1;
}

ClassVector ClassVector::sorted_descending() const {
  std::vector<int> p = parts_;
  std::sort(p.begin(), p.end(), std::greater<>());
  return ClassVector(std::move(p));
}

std::string ClassVector::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

Graph make_graph(int n, std::span<const Edge> edges) {
  check_vertex_count(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph::from_rows(std::move(rows));
}

Graph make_graph(int n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph empty_graph(int n) { return make_graph(n, std::span<const Edge>{}); }

Graph complete_graph(int n) {
  check_vertex_count(n);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = all & ~bit(v);
  return Graph::from_rows(std::move(rows));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return make_graph(n, e);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return make_graph(n, e);
}

Graph turan_graph(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("turan_graph requires 1 <= k <= n");
  return complete_multipartite(ClassVector::balanced(n, k));
}

long long turan_edges(long long n, long long k) {
  if (k < 1 || k > n) throw std::invalid_argument("turan edge count requires 1 <= k <= n");
  const long long q = n / k;
  const long long r = n % k;
  // Sum over pairs of classes: (n^2 - sum of squared class sizes) / 2.
  const long long squares = r * (q + 1) * (q + 1) + (k - r) * q * q;
  return (n * n - squares) / 2;
}

BigCount turan_edge_count(int n, int k) { return BigCount(static_cast<long>(turan_edges(n, k))); }

Graph complete_multipartite(const ClassVector& c) {
  const int n = c.n();
  std::vector<VertexMask> rows(static_cast<std::size_t>(n));
  const VertexMask all = n == 64 ? ~VertexMask{0} : bit(n) - 1;
  int start = 0;
  for (int size : c.parts()) {
    const VertexMask cls = (size == 64 ? ~VertexMask{0} : bit(size) - 1) << start;
    for (int v = start; v < start + size; ++v) rows[static_cast<std::size_t>(v)] = all & ~cls;
    start += size;
  }
  return Graph::from_rows(std::move(rows));
}

Graph add_edge(const Graph& g, int u, int v) {
  auto e = g.edges();
  e.emplace_back(u, v);
  return make_graph(g.n(), e);
}

Graph remove_edge(const Graph& g, int u, int v) {
  const Edge one{u, v};
  return remove_edges(g, std::span<const Edge>(&one, 1));
}

Graph remove_edges(const Graph& g, std::span<const Edge> edges) {
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) throw std::out_of_range("edge out of range");
    rows[static_cast<std::size_t>(u)] &= ~bit(v);
    rows[static_cast<std::size_t>(v)] &= ~bit(u);
  }
  return Graph::from_rows(std::move(rows));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> seen(perm.size(), 0);
  for (int p : perm) {
    if (p < 0 || p >= g.n() || seen[static_cast<std::size_t>(p)]++) {
      throw std::invalid_argument("relabel: not a permutation");
    }
  }
  std::vector<VertexMask> rows(static_cast<std::size_t>(g.n()), 0);
  for (int u = 0; u < g.n(); ++u) {
    for (VertexMask r = g.neighbors(u); r; r &= r - 1) {
      rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] |=
          bit(perm[static_cast<std::size_t>(std::countr_zero(r))]);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace cyclex
