#pragma once

// Shared DP driver, instantiated once per kernel translation unit so the
// accumulate step inlines into the subset loop.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclex/simd/path_kernel.hpp"

namespace cyclex::simd::detail {

inline std::uint64_t add_mod(Modulus mod, std::uint64_t a, std::uint64_t b) {
  if (mod == Modulus::wrap64) return a + b;
  const std::uint64_t s = a + b;
  return s >= kMersenne61 ? s - kMersenne61 : s;
}

inline std::size_t lane_stride(int m) { return static_cast<std::size_t>((m + 1 + 3) / 4 * 4); }

inline std::vector<std::uint64_t> build_lane_masks(const PathDpProblem& p, std::size_t stride) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(p.m) * stride, 0);
  for (int v = 0; v < p.m; ++v) {
    std::uint64_t* lanes = masks.data() + static_cast<std::size_t>(v) * stride;
    for (int w = 0; w < p.m; ++w) lanes[w] = ((p.out[v] >> w) & 1U) ? ~std::uint64_t{0} : 0;
    lanes[p.m] = ((p.close >> v) & 1U) ? ~std::uint64_t{0} : 0;
  }
  return masks;
}

template <class Accumulate>
std::vector<std::uint64_t> run_path_dp(Modulus mod, const PathDpProblem& p, Accumulate accumulate) {
  const int m = p.m;
  if (m < 0 || m > kMaxWorkingVertices) throw std::invalid_argument("path DP: working vertex count out of range");
  if (static_cast<int>(p.out.size()) != m) throw std::invalid_argument("path DP: adjacency size mismatch");
  std::vector<std::uint64_t> totals(static_cast<std::size_t>(m) + 1, 0);
  if (m == 0) return totals;

  const std::size_t stride = lane_stride(m);
  const std::vector<std::uint64_t> masks = build_lane_masks(p, stride);
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  std::vector<std::uint64_t> table((full + 1) * stride, 0);
  for (std::uint64_t r = p.start & full; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    table[(std::uint64_t{1} << v) * stride + static_cast<std::size_t>(v)] = 1;
  }

  std::vector<std::uint64_t> sums(stride, 0);
  for (std::uint64_t s = 1; s <= full; ++s) {
    const std::uint64_t* row = table.data() + s * stride;
    std::uint64_t live = 0;
    for (std::uint64_t r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (row[v]) live |= std::uint64_t{1} << v;
    }
    if (!live) continue;
    accumulate(row, live, masks.data(), stride, sums.data());
    const auto size = static_cast<std::size_t>(std::popcount(s));
    totals[size] = add_mod(mod, totals[size], sums[static_cast<std::size_t>(m)]);
    for (std::uint64_t r = ~s & full; r; r &= r - 1) {
      const int w = std::countr_zero(r);
      if (sums[static_cast<std::size_t>(w)]) {
        table[(s | (std::uint64_t{1} << w)) * stride + static_cast<std::size_t>(w)] = sums[static_cast<std::size_t>(w)];
      }
    }
  }
  return totals;
}

}  // namespace cyclex::simd::detail
