#include <immintrin.h>

#include <bit>

#include "path_dp_impl.hpp"

namespace cyclex::simd::avx2 {

namespace {

constexpr std::size_t kMaxBlocks = kMaxStride / 4;

template <Modulus Mod>
inline void accumulate(const std::uint64_t* row, std::uint64_t members, const std::uint64_t* lane_masks,
                       std::size_t stride, std::uint64_t* out) {
  const std::size_t blocks = stride / 4;
  __m256i acc[kMaxBlocks];
  for (std::size_t b = 0; b < blocks; ++b) acc[b] = _mm256_setzero_si256();
  const __m256i prime = _mm256_set1_epi64x(static_cast<long long>(kMersenne61));
  const __m256i prime_minus_one = _mm256_set1_epi64x(static_cast<long long>(kMersenne61 - 1));
  for (std::uint64_t r = members; r; r &= r - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(r));
    const __m256i value = _mm256_set1_epi64x(static_cast<long long>(row[v]));
    const auto* lanes = reinterpret_cast<const __m256i*>(lane_masks + v * stride);
    for (std::size_t b = 0; b < blocks; ++b) {
      __m256i sum = _mm256_add_epi64(acc[b], _mm256_and_si256(value, _mm256_loadu_si256(lanes + b)));
      if constexpr (Mod == Modulus::mersenne61) {
        // Operands are below 2^61, so the signed compare is safe.
        const __m256i over = _mm256_cmpgt_epi64(sum, prime_minus_one);
        sum = _mm256_sub_epi64(sum, _mm256_and_si256(over, prime));
      }
      acc[b] = sum;
    }
  }
  for (std::size_t b = 0; b < blocks; ++b) _mm256_storeu_si256(reinterpret_cast<__m256i*>(out) + b, acc[b]);
}

}  // namespace

void accumulate_masked(Modulus mod, const std::uint64_t* row, std::uint64_t members, const std::uint64_t* lane_masks,
                       std::size_t stride, std::uint64_t* out) {
  if (mod == Modulus::wrap64) {
    accumulate<Modulus::wrap64>(row, members, lane_masks, stride, out);
  } else {
    accumulate<Modulus::mersenne61>(row, members, lane_masks, stride, out);
  }
}

std::vector<std::uint64_t> path_dp_totals(Modulus mod, const PathDpProblem& problem) {
  if (mod == Modulus::wrap64) return detail::run_path_dp(mod, problem, accumulate<Modulus::wrap64>);
  return detail::run_path_dp(mod, problem, accumulate<Modulus::mersenne61>);
}

}  // namespace cyclex::simd::avx2
