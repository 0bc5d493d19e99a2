#pragma once

#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex {

/// Labelling perm (vertex v goes to perm[v]) such that relabel(g, perm) is the
/// same graph for every graph isomorphic to g.
std::vector<int> canonical_labelling(const Graph& g);
Graph canonical_form(const Graph& g);
std::string canonical_graph6(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace cyclex
