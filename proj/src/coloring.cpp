#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclex/error.hpp"
#include "cyclex/structure.hpp"

namespace cyclex {

namespace {

// chi[S] = 1 + min over independent I containing the lowest vertex of S of
// chi[S \ I]. Enumerating only I through the lowest vertex keeps the
// recurrence exact and avoids the symmetric duplicates.
int chromatic_number_dp(const Graph& h) {
  const int n = h.n();
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint8_t> independent(std::size_t{1} << n, 0);
  independent[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && !(h.neighbors(v) & rest);
  }
  std::vector<std::uint8_t> chi(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const int lowv = std::countr_zero(s);
    const std::uint32_t others = (s ^ low) & ~static_cast<std::uint32_t>(h.neighbors(lowv));
    int best = n;
    // Subsets of the non-neighbours, joined with the lowest vertex.
    for (std::uint32_t sub = others;; sub = (sub - 1) & others) {
      const std::uint32_t cls = sub | low;
      if (independent[cls]) {
        const int c = 1 + chi[s ^ cls];
        if (c < best) best = c;
      }
      if (sub == 0) break;
    }
    chi[s] = static_cast<std::uint8_t>(best);
  }
  return chi[full];
}

void check_size(const Graph& h) {
  if (h.n() > kMaxColoringVertices) {
    throw CapExceeded("chromatic number limited to " + std::to_string(kMaxColoringVertices) + " vertices, got " +
                      std::to_string(h.n()));
  }
}

}  // namespace

int chromatic_number(const Graph& h) {
  check_size(h);
  return chromatic_number_dp(h);
}

bool has_critical_edge(const Graph& h) {
  check_size(h);
  const int chi = chromatic_number_dp(h);
  for (auto [u, v] : h.edges()) {
    if (chromatic_number_dp(remove_edge(h, u, v)) == chi - 1) return true;
  }
  return false;
}

}  // namespace cyclex
