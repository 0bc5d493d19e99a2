#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "cyclex/cycle_count.hpp"
#include "cyclex/error.hpp"
#include "cyclex/graph_io.hpp"
#include "cyclex/structure.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

BigCount big(std::uint64_t v) { return from_u64(v); }

void expect_matches_oracle(const Graph& g, const CountLimits& limits = {}) {
  const CycleSpectrum s = cycle_spectrum(g, limits);
  const auto brute = oracle::cycles_by_length(g);
  for (int r = 3; r <= g.n(); ++r) {
    const auto it = brute.find(r);
    EXPECT_EQ(s.at(r), big(it == brute.end() ? 0 : it->second)) << to_graph6(g) << " r=" << r;
  }
}

TEST(CycleCount, SmallKnownValues) {
  const CycleSpectrum k4 = cycle_spectrum(complete_graph(4));
  EXPECT_EQ(k4.at(3), 4);
  EXPECT_EQ(k4.at(4), 3);
  EXPECT_EQ(count_cycles(complete_graph(5)), 37);
  EXPECT_EQ(count_cycles(complete_multipartite(ClassVector({2, 3}))), 3);
  EXPECT_EQ(count_cycles(cycle_graph(9)), 1);
  EXPECT_EQ(count_cycles(path_graph(9)), 0);
  EXPECT_EQ(count_hamilton(complete_graph(8)), 2520);
  // Petersen graph: 12 five-cycles, no Hamilton cycle.
  const CycleSpectrum pet = cycle_spectrum(from_graph6("IheA@GUAo"));
  EXPECT_EQ(pet.at(5), 12);
  EXPECT_EQ(pet.at(10), 0);
}

TEST(CycleCount, CompleteGraphFormula) {
  for (int n = 3; n <= 16; ++n) {
    const CycleSpectrum s = cycle_spectrum(complete_graph(n));
    for (int r = 3; r <= n; ++r) EXPECT_EQ(s.at(r), falling_factorial(n, static_cast<unsigned>(r)) / (2 * r)) << n << ' ' << r;
  }
}

TEST(CycleCount, RandomGraphsMatchDfs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    expect_matches_oracle(oracle::random_graph(n, 0.2 + 0.6 * static_cast<double>(rng() % 100) / 100.0, rng));
  }
}

TEST(CycleCount, ScalarAndAvx2Agree) {
  if (!simd::isa_available(simd::Isa::avx2)) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(22);
  CountLimits scalar;
  scalar.isa = simd::Isa::scalar;
  CountLimits avx;
  avx.isa = simd::Isa::avx2;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_graph(12 + static_cast<int>(rng() % 5), 0.5, rng);
    EXPECT_EQ(cycle_spectrum(g, scalar), cycle_spectrum(g, avx));
  }
}

// Counts that overflow 64 bits go through the second modulus and CRT.
TEST(CycleCount, ExactBeyond64Bits) {
  const CycleSpectrum s = cycle_spectrum(complete_graph(22));
  EXPECT_EQ(s.at(22), factorial(21) / 2);
  EXPECT_GT(s.at(22), BigCount("18446744073709551616"));
  BigCount total = 0;
  for (int r = 3; r <= 22; ++r) total += falling_factorial(22, static_cast<unsigned>(r)) / (2 * r);
  EXPECT_EQ(s.total(), total);
}

TEST(CycleCount, CapsAreEnforced) {
  CountLimits limits;
  limits.max_cycle_vertices = 8;
  EXPECT_THROW(cycle_spectrum(complete_graph(9), limits), CapExceeded);
  EXPECT_NO_THROW(cycle_spectrum(complete_graph(8), limits));
  limits.max_path_vertices = 5;
  EXPECT_THROW(count_paths(complete_graph(6), 0, 1, limits), CapExceeded);
}

TEST(CycleCount, IsomorphismInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(cycle_spectrum(g), cycle_spectrum(relabel(g, perm)));
  }
}

TEST(CycleCount, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(n, 0.3, rng);
    CycleSpectrum prev = cycle_spectrum(g);
    for (int step = 0; step < 5; ++step) {
      const int u = static_cast<int>(rng() % static_cast<unsigned>(n));
      const int v = static_cast<int>(rng() % static_cast<unsigned>(n));
      if (u == v || g.has_edge(u, v)) continue;
      g = add_edge(g, u, v);
      const CycleSpectrum next = cycle_spectrum(g);
      for (int r = 3; r <= n; ++r) EXPECT_GE(next.at(r), prev.at(r));
      prev = next;
    }
  }
}

TEST(Paths, MatchDfs) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const int x = static_cast<int>(rng() % static_cast<unsigned>(n));
    int y = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (y >= x) ++y;
    EXPECT_EQ(count_paths(g, x, y), big(oracle::paths(g, x, y))) << to_graph6(g) << ' ' << x << ' ' << y;
  }
  EXPECT_THROW(count_paths(complete_graph(3), 1, 1), std::invalid_argument);
}

TEST(Paths, CompleteGraphFormula) {
  // K_n: sum over j of (n-2)_j paths with j interior vertices.
  for (int n = 2; n <= 14; ++n) {
    BigCount expect = 0;
    for (int j = 0; j <= n - 2; ++j) expect += falling_factorial(n - 2, static_cast<unsigned>(j));
    EXPECT_EQ(count_paths(complete_graph(n), 0, n - 1), expect);
  }
}

// Each r-cycle contains r edges xy, and removing xy leaves one x-y path of
// length r - 1; every x-y path other than the edge itself closes one cycle.
TEST(Paths, EdgePathIdentity) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    BigCount lhs = 0;
    for (const auto& [x, y] : g.edges()) lhs += count_paths(g, x, y) - 1;
    const CycleSpectrum s = cycle_spectrum(g);
    BigCount rhs = 0;
    for (int r = 3; r <= n; ++r) rhs += r * s.at(r);
    EXPECT_EQ(lhs, rhs) << to_graph6(g);
  }
}

TEST(RegularIrregular, SplitsTotal) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.6, rng);
    const PartitionInfo p = best_k_partition(g, 2);
    const RegularIrregularCycles split = count_regular_and_irregular_cycles(g, p);
    EXPECT_EQ(split.regular + split.irregular, count_cycles(g));
    // Regular cycles are exactly the cycles of the k-partite part.
    const Graph regular = remove_edges(g, p.irregular_edges);
    EXPECT_EQ(split.regular, big(oracle::total_cycles(regular)));
  }
  const RegularIrregularCycles t = count_regular_and_irregular_cycles(turan_graph(7, 3), best_k_partition(turan_graph(7, 3), 3));
  EXPECT_EQ(t.irregular, 0);
}

TEST(SpectrumOutput, CsvAndJson) {
  const CycleSpectrum s = cycle_spectrum(complete_graph(4));
  EXPECT_EQ(spectrum_to_csv(s), "r,count\n3,4\n4,3\n");
  EXPECT_EQ(nlohmann::json::parse(spectrum_to_json(s)), nlohmann::json::parse(R"({"3":"4","4":"3"})"));
  EXPECT_EQ(empty_spectrum(2).total(), 0);
}

}  // namespace
}  // namespace cyclex
