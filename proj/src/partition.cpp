#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "cyclex/error.hpp"
#include "cyclex/structure.hpp"

namespace cyclex {

namespace {

int irregular_count(const Graph& g, const std::vector<int>& assignment) {
  int count = 0;
  for (auto [u, v] : g.edges()) count += assignment[u] == assignment[v] ? 1 : 0;
  return count;
}

// Greedy placement followed by single-vertex moves until no move lowers the
// number of edges inside classes.
std::vector<int> local_search(const Graph& g, int k) {
  const int n = g.n();
  std::vector<int> assignment(n, 0);
  std::vector<VertexMask> classes(k, 0);
  for (int v = 0; v < n; ++v) {
    int best = 0;
    int best_cost = n + 1;
    for (int c = 0; c < k; ++c) {
      const int cost = std::popcount(g.neighbors(v) & classes[c]);
      if (cost < best_cost || (cost == best_cost && std::popcount(classes[c]) < std::popcount(classes[best]))) {
        best = c;
        best_cost = cost;
      }
    }
    assignment[v] = best;
    classes[best] |= VertexMask{1} << v;
  }
  for (bool improved = true; improved;) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      const int from = assignment[v];
      const VertexMask self = VertexMask{1} << v;
      const int here = std::popcount(g.neighbors(v) & classes[from] & ~self);
      for (int c = 0; c < k; ++c) {
        if (c == from) continue;
        if (std::popcount(g.neighbors(v) & classes[c]) < here) {
          classes[from] &= ~self;
          classes[c] |= self;
          assignment[v] = c;
          improved = true;
          break;
        }
      }
    }
  }
  return assignment;
}

// Branch and bound over restricted-growth assignments (class labels appear in
// first-use order), visited in lexicographic order, so the first minimiser
// reached is the lexicographically smallest assignment overall.
class ExhaustivePartitioner {
 public:
  ExhaustivePartitioner(const Graph& g, int k, int upper_bound)
      : g_(g), k_(k), best_cost_(upper_bound + 1), current_(g.n(), 0), classes_(k, 0) {}

  std::vector<int> run() {
    search(0, 0, 0);
    return best_;
  }

 private:
  void search(int v, int used, int cost) {
    if (cost >= best_cost_) return;
    if (v == g_.n()) {
      best_cost_ = cost;
      best_ = current_;
      return;
    }
    const int limit = std::min(k_ - 1, used);
    for (int c = 0; c <= limit; ++c) {
      const int added = std::popcount(g_.neighbors(v) & classes_[c]);
      current_[v] = c;
      classes_[c] |= VertexMask{1} << v;
      search(v + 1, std::max(used, c + 1), cost + added);
      classes_[c] &= ~(VertexMask{1} << v);
    }
  }

  const Graph& g_;
  int k_;
  int best_cost_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::vector<VertexMask> classes_;
};

}  // namespace

PartitionInfo partition_from_assignment(const Graph& g, int k, std::vector<int> assignment) {
  if (k < 1) throw std::invalid_argument("partition needs k >= 1");
  if (static_cast<int>(assignment.size()) != g.n()) {
    throw std::invalid_argument("partition assignment size does not match vertex count");
  }
  for (int c : assignment) {
    if (c < 0 || c >= k) throw std::invalid_argument("partition class index out of range");
  }
  PartitionInfo info;
  info.k = k;
  for (auto [u, v] : g.edges()) {
    if (assignment[u] == assignment[v]) {
      info.irregular_edges.emplace_back(u, v);
    } else {
      ++info.regular_edges;
    }
  }
  info.assignment = std::move(assignment);
  return info;
}

PartitionInfo best_k_partition(const Graph& g, int k, PartitionMode mode) {
  if (k < 1) throw std::invalid_argument("best_k_partition needs k >= 1");
  std::vector<int> heuristic = local_search(g, k);
  if (mode == PartitionMode::heuristic) {
    PartitionInfo info = partition_from_assignment(g, k, std::move(heuristic));
    info.certified = false;
    return info;
  }
  if (g.n() > kMaxExhaustivePartitionVertices) {
    throw CapExceeded("exhaustive best partition limited to " + std::to_string(kMaxExhaustivePartitionVertices) +
                      " vertices, got " + std::to_string(g.n()));
  }
  ExhaustivePartitioner search(g, k, irregular_count(g, heuristic));
  PartitionInfo info = partition_from_assignment(g, k, search.run());
  info.certified = true;
  return info;
}

}  // namespace cyclex
