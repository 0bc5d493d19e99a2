#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "cyclex/simd/path_kernel.hpp"

namespace cyclex::simd {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (isa_available(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

u64 reduce(u128 x, Modulus mod) {
  return mod == Modulus::wrap64 ? static_cast<u64>(x) : static_cast<u64>(x % kMersenne61);
}

TEST(Kernel, DetectReturnsAvailableIsa) {
  EXPECT_TRUE(isa_available(detect_isa()));
  EXPECT_TRUE(isa_available(Isa::scalar));
  EXPECT_EQ(isa_name(Isa::scalar), "scalar");
}

TEST(Kernel, AccumulateMatchesNaive) {
  std::mt19937_64 rng(1);
  for (Modulus mod : {Modulus::wrap64, Modulus::mersenne61}) {
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t stride = 4 * (1 + rng() % (kMaxStride / 4));
      const std::size_t rows = stride;
      std::vector<u64> row(rows), masks(rows * stride);
      for (u64& r : row) r = mod == Modulus::wrap64 ? rng() : rng() % kMersenne61;
      // Near-maximal values stress the modular reduction.
      if (trial % 4 == 0) {
        for (u64& r : row) r = mod == Modulus::wrap64 ? ~u64{0} : kMersenne61 - 1;
      }
      for (u64& m : masks) m = (rng() & 1) ? ~u64{0} : 0;
      const u64 members = rng() & ((rows == 64 ? 0 : (u64{1} << rows)) - 1);
      std::vector<u128> expect(stride, 0);
      for (std::size_t v = 0; v < rows; ++v) {
        if (!((members >> v) & 1)) continue;
        for (std::size_t w = 0; w < stride; ++w) expect[w] += row[v] & masks[v * stride + w];
      }
      for (Isa isa : available_isas()) {
        std::vector<u64> out(stride, 0);
        accumulate_masked(isa, mod, row.data(), members, masks.data(), stride, out.data());
        for (std::size_t w = 0; w < stride; ++w) {
          ASSERT_EQ(out[w], reduce(expect[w], mod)) << isa_name(isa) << " stride " << stride << " lane " << w;
        }
      }
    }
  }
}

// Plain subset DP written directly from the definition.
std::vector<u64> naive_totals(const PathDpProblem& p, Modulus mod) {
  const int m = p.m;
  std::vector<std::vector<u128>> f(std::size_t{1} << m, std::vector<u128>(static_cast<std::size_t>(m), 0));
  for (int v = 0; v < m; ++v) {
    if ((p.start >> v) & 1) f[std::size_t{1} << v][static_cast<std::size_t>(v)] = 1;
  }
  std::vector<u128> totals(static_cast<std::size_t>(m) + 1, 0);
  for (std::size_t s = 1; s < f.size(); ++s) {
    for (int v = 0; v < m; ++v) {
      u128 val = f[s][static_cast<std::size_t>(v)] % (mod == Modulus::wrap64 ? (u128{1} << 64) : kMersenne61);
      if (val == 0) continue;
      if ((p.close >> v) & 1) totals[static_cast<std::size_t>(__builtin_popcountll(s))] += val;
      for (int w = 0; w < m; ++w) {
        if (((p.out[static_cast<std::size_t>(v)] >> w) & 1) && !((s >> w) & 1)) {
          f[s | (std::size_t{1} << w)][static_cast<std::size_t>(w)] += val;
        }
      }
    }
  }
  std::vector<u64> out;
  for (u128 t : totals) out.push_back(reduce(t, mod));
  return out;
}

TEST(Kernel, PathDpEquivalentAcrossIsasAndNaive) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 120; ++trial) {
    PathDpProblem p;
    p.m = 1 + static_cast<int>(rng() % 12);
    const u64 all = (u64{1} << p.m) - 1;
    p.out.resize(static_cast<std::size_t>(p.m));
    for (int v = 0; v < p.m; ++v) p.out[static_cast<std::size_t>(v)] = rng() & all & ~(u64{1} << v);
    p.start = rng() & all;
    p.close = trial % 3 == 0 ? all : rng() & all;
    for (Modulus mod : {Modulus::wrap64, Modulus::mersenne61}) {
      const auto expect = naive_totals(p, mod);
      for (Isa isa : available_isas()) {
        EXPECT_EQ(path_dp_totals(isa, mod, p), expect) << isa_name(isa) << " m=" << p.m;
      }
    }
  }
}

TEST(Kernel, PathDpLargeProblemScalarEqualsAvx2) {
  if (!isa_available(Isa::avx2)) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(3);
  PathDpProblem p;
  p.m = 20;
  const u64 all = (u64{1} << p.m) - 1;
  p.out.assign(static_cast<std::size_t>(p.m), 0);
  for (int v = 0; v < p.m; ++v) p.out[static_cast<std::size_t>(v)] = all & ~(u64{1} << v) & (rng() | rng());
  p.start = all;
  p.close = all;
  for (Modulus mod : {Modulus::wrap64, Modulus::mersenne61}) {
    EXPECT_EQ(path_dp_totals(Isa::scalar, mod, p), path_dp_totals(Isa::avx2, mod, p));
  }
}

}  // namespace
}  // namespace cyclex::simd
