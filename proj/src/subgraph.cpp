#include <algorithm>
#include <bit>

#include "cyclex/structure.hpp"

namespace cyclex {

namespace {

// Backtracking embedding of pattern vertices (in a connectivity-first order)
// into target vertices, intersecting neighbourhoods of already-mapped
// pattern neighbours and pruning by degree.
class Embedder {
 public:
  Embedder(const Graph& target, const Graph& pattern) : g_(target), h_(pattern) {
    const int hn = h_.n();
    std::vector<bool> placed(hn, false);
    for (int step = 0; step < hn; ++step) {
      int best = -1;
      int best_links = -1;
      for (int u = 0; u < hn; ++u) {
        if (placed[u] || h_.degree(u) == 0) continue;
        int links = 0;
        for (int w : order_) links += h_.has_edge(u, w) ? 1 : 0;
        if (links > best_links || (links == best_links && h_.degree(u) > h_.degree(best))) {
          best = u;
          best_links = links;
        }
      }
      if (best < 0) break;
      placed[best] = true;
      order_.push_back(best);
    }
    isolated_ = hn - static_cast<int>(order_.size());
    image_.assign(hn, -1);
    by_degree_.assign(g_.n() + 1, 0);
    for (int d = 0; d <= g_.n(); ++d) {
      for (int v = 0; v < g_.n(); ++v) {
        if (g_.degree(v) >= d) by_degree_[d] |= VertexMask{1} << v;
      }
    }
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, VertexMask used) {
    if (depth == order_.size()) return g_.n() - std::popcount(used) >= isolated_;
    const int u = order_[depth];
    VertexMask cand = by_degree_[h_.degree(u)] & ~used;
    for (std::size_t i = 0; i < depth && cand; ++i) {
      const int w = order_[i];
      if (h_.has_edge(u, w)) cand &= g_.neighbors(image_[w]);
    }
    for (; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      image_[u] = v;
      if (extend(depth + 1, used | (VertexMask{1} << v))) return true;
    }
    image_[u] = -1;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<VertexMask> by_degree_;
  int isolated_ = 0;
};

}  // namespace

bool contains_subgraph(const Graph& g, const Graph& h) {
  if (h.n() > g.n() || h.edge_count() > g.edge_count()) return false;
  std::vector<int> gdeg, hdeg;
  for (int v = 0; v < g.n(); ++v) gdeg.push_back(g.degree(v));
  for (int v = 0; v < h.n(); ++v) hdeg.push_back(h.degree(v));
  std::sort(gdeg.rbegin(), gdeg.rend());
  std::sort(hdeg.rbegin(), hdeg.rend());
  for (std::size_t i = 0; i < hdeg.size(); ++i) {
    if (hdeg[i] > gdeg[i]) return false;
  }
  return Embedder(g, h).run();
}

}  // namespace cyclex
