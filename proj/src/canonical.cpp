#include "cyclex/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cyclex/graph_io.hpp"

namespace cyclex {

namespace {

using Cells = std::vector<std::vector<int>>;

// Equitable refinement: split cells by neighbour counts into every cell until
// nothing changes. Sub-cells are ordered by their count signature, which keeps
// the procedure isomorphism-invariant.
Cells refine(const Graph& g, Cells cells) {
  const int n = g.n();
  std::vector<int> cell_of(static_cast<std::size_t>(n));
  while (true) {
    std::vector<VertexMask> masks(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (int v : cells[c]) {
        cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
        masks[c] |= VertexMask{1} << v;
      }
    }
    Cells next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) sig[c] = std::popcount(g.neighbors(v) & masks[c]);
        groups[sig].push_back(v);
      }
      for (auto& [sig, members] : groups) next.push_back(std::move(members));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

bool all_twins(const Graph& g, const std::vector<int>& cell) {
  for (std::size_t a = 0; a < cell.size(); ++a) {
    for (std::size_t b = a + 1; b < cell.size(); ++b) {
      const int u = cell[a];
      const int v = cell[b];
      const VertexMask pair = (VertexMask{1} << u) | (VertexMask{1} << v);
      if ((g.neighbors(u) & ~pair) != (g.neighbors(v) & ~pair)) return false;
    }
  }
  return true;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g) {}

  std::vector<int> run() {
    Cells start{{}};
    for (int v = 0; v < g_.n(); ++v) start[0].push_back(v);
    search(refine(g_, std::move(start)));
    return best_perm_;
  }

 private:
  void search(const Cells& cells) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    const std::vector<int>& cell = cells[t];
    const std::size_t branches = all_twins(g_, cell) ? 1 : cell.size();
    for (std::size_t b = 0; b < branches; ++b) {
      Cells next;
      next.reserve(cells.size() + 1);
      next.insert(next.end(), cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(t));
      next.push_back({cell[b]});
      std::vector<int> rest;
      for (int v : cell) {
        if (v != cell[b]) rest.push_back(v);
      }
      next.push_back(std::move(rest));
      next.insert(next.end(), cells.begin() + static_cast<std::ptrdiff_t>(t) + 1, cells.end());
      search(refine(g_, std::move(next)));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<int> perm(static_cast<std::size_t>(g_.n()));
    for (std::size_t c = 0; c < cells.size(); ++c) perm[static_cast<std::size_t>(cells[c][0])] = static_cast<int>(c);
    std::vector<VertexMask> rows(static_cast<std::size_t>(g_.n()), 0);
    for (int v = 0; v < g_.n(); ++v) {
      VertexMask row = 0;
      for (VertexMask r = g_.neighbors(v); r; r &= r - 1) row |= VertexMask{1} << perm[std::countr_zero(r)];
      rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = row;
    }
    if (best_perm_.empty() || rows > best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = std::move(perm);
    }
  }

  const Graph& g_;
  std::vector<int> best_perm_;
  std::vector<VertexMask> best_rows_;
};

}  // namespace

std::vector<int> canonical_labelling(const Graph& g) { return CanonicalSearch(g).run(); }

Graph canonical_form(const Graph& g) { return relabel(g, canonical_labelling(g)); }

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cyclex
