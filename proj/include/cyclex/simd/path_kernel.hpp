#pragma once

// Subset dynamic programme for counting simple paths from a fixed anchor.
//
// The hot loop is a masked broadcast-accumulate over 64-bit lanes: for a
// vertex subset S, out[w] = sum_{v in S} f[S][v] * [v -> w], where the 0/1
// factor is stored as an all-ones/all-zeros lane mask. A portable scalar
// kernel is always built; an AVX2 kernel is compiled separately and chosen
// at runtime. Both are exact modulo 2^64 or modulo the Mersenne prime 2^61-1;
// callers combine the two residues when counts may exceed 64 bits.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace cyclex::simd {

enum class Isa { scalar, avx2 };
enum class Modulus { wrap64, mersenne61 };

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Widest kernel this binary and CPU support. Setting the environment
/// variable CYCLEX_ISA=scalar forces the portable kernel.
Isa detect_isa();
bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

inline constexpr int kMaxWorkingVertices = 30;
/// Lanes per row: working vertices plus the collection lane, rounded up to 4.
inline constexpr std::size_t kMaxStride = (kMaxWorkingVertices + 1 + 3) / 4 * 4;

/// out[w] = sum over set bits v of `members` of (row[v] & lane_masks[v * stride + w]),
/// for w in [0, stride), reduced modulo `mod`. `stride` must be a multiple of 4
/// and at most kMaxStride.
/// Row values must already be reduced (below 2^61 - 1 for mersenne61).
void accumulate_masked(Isa isa, Modulus mod, const std::uint64_t* row, std::uint64_t members,
                       const std::uint64_t* lane_masks, std::size_t stride, std::uint64_t* out);


struct PathDpProblem {
  int m = 0;                        // working vertices are 0..m-1
  std::vector<std::uint64_t> out;   // out[v]: working vertices a path may step to from v
  std::uint64_t start = 0;          // working vertices adjacent to the anchor
  std::uint64_t close = 0;          // endpoints whose path counts are collected
};

/// Let f[S][v] be the number of paths that leave the anchor, visit exactly
/// the working vertices S and end at v. Returns totals[s] for s in [0, m]:
/// the sum over |S| = s and v in S & close of f[S][v], modulo `mod`.
std::vector<std::uint64_t> path_dp_totals(Isa isa, Modulus mod, const PathDpProblem& problem);

}  // namespace cyclex::simd
