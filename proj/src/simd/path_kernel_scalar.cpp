#include <bit>

#include "path_dp_impl.hpp"

namespace cyclex::simd::scalar {

void accumulate_masked(Modulus mod, const std::uint64_t* row, std::uint64_t members, const std::uint64_t* lane_masks,
                       std::size_t stride, std::uint64_t* out) {
  for (std::size_t w = 0; w < stride; ++w) out[w] = 0;
  for (std::uint64_t r = members; r; r &= r - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(r));
    const std::uint64_t value = row[v];
    const std::uint64_t* lanes = lane_masks + v * stride;
    if (mod == Modulus::wrap64) {
      for (std::size_t w = 0; w < stride; ++w) out[w] += value & lanes[w];
    } else {
      for (std::size_t w = 0; w < stride; ++w) out[w] = detail::add_mod(mod, out[w], value & lanes[w]);
    }
  }
}

std::vector<std::uint64_t> path_dp_totals(Modulus mod, const PathDpProblem& problem) {
  return detail::run_path_dp(mod, problem,
                             [mod](const std::uint64_t* row, std::uint64_t members, const std::uint64_t* masks,
                                   std::size_t stride, std::uint64_t* out) {
                               accumulate_masked(mod, row, members, masks, stride, out);
                             });
}

}  // namespace cyclex::simd::scalar
