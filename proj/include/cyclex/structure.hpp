#pragma once

#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// True iff some (not necessarily induced) subgraph of g is isomorphic to h.
bool contains_subgraph(const Graph& g, const Graph& h);

inline constexpr int kMaxColoringVertices = 16;

/// Exact chromatic number; throws CapExceeded above 16 vertices.
int chromatic_number(const Graph& h);

/// Some edge e with chi(h - e) = chi(h) - 1.
bool has_critical_edge(const Graph& h);

struct PartitionInfo {
  int k = 0;
  std::vector<int> assignment;       // vertex -> class in [0, k)
  std::vector<Edge> irregular_edges;  // edges inside a class, (u < v), sorted
  int regular_edges = 0;
  /// False when produced by the local-search fallback.
  bool certified = false;
};

enum class PartitionMode { exhaustive, heuristic };

inline constexpr int kMaxExhaustivePartitionVertices = 16;

/// Partition of the vertices into k classes minimising the number of edges
/// inside classes. Exhaustive mode returns the lexicographically smallest
/// minimiser and throws CapExceeded above 16 vertices; heuristic mode is a
/// local search whose result is flagged as not certified.
PartitionInfo best_k_partition(const Graph& g, int k, PartitionMode mode = PartitionMode::exhaustive);

/// Builds a PartitionInfo for a given assignment (validated against g and k).
PartitionInfo partition_from_assignment(const Graph& g, int k, std::vector<int> assignment);

}  // namespace cyclex
