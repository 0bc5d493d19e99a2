#include <algorithm>
#include <filesystem>
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "cyclex/canonical.hpp"
#include "cyclex/codes.hpp"
#include "cyclex/cycle_count.hpp"
#include "cyclex/error.hpp"
#include "cyclex/extremal.hpp"
#include "cyclex/graph_io.hpp"
#include "cyclex/structure.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

TEST(Enumerate, ClassCountsAllGraphs) {
  const std::vector<std::size_t> known{1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n, std::nullopt).size(), known[static_cast<std::size_t>(n - 1)]) << n;
}

TEST(Enumerate, ClassCountsTriangleFree) {
  const std::vector<std::size_t> known{1, 2, 3, 7, 14, 38, 107, 410};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_graphs(n, complete_graph(3)).size(), known[static_cast<std::size_t>(n - 1)]) << n;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.n()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Representatives are pairwise non-isomorphic by permutation search.
TEST(Enumerate, RepresentativesPairwiseDistinct) {
  for (int n = 1; n <= 6; ++n) {
    const auto reps = enumerate_graphs(n, std::nullopt);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) EXPECT_FALSE(brute_isomorphic(reps[i], reps[j])) << n;
    }
  }
}

// Unsifted generation: every labelled graph on n <= 6 vertices lands in the
// enumerated set once canonicalised.
TEST(Enumerate, MatchesLabelledBruteForce) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    std::set<std::string> classes, c4_free;
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if ((mask >> i) & 1) edges.push_back(slots[i]);
      }
      const Graph g = make_graph(n, edges);
      classes.insert(canonical_graph6(g));
      if (oracle::cycles_by_length(g)[4] == 0) c4_free.insert(canonical_graph6(g));
    }
    std::set<std::string> got, got_c4;
    for (const Graph& g : enumerate_graphs(n, std::nullopt)) got.insert(to_graph6(g));
    for (const Graph& g : enumerate_graphs(n, cycle_graph(4))) got_c4.insert(to_graph6(g));
    EXPECT_EQ(got, classes) << n;
    EXPECT_EQ(got_c4, c4_free) << n;
  }
}

TEST(Search, TriangleFreeSmall) {
  const SearchResult r = max_cycles_H_free(5, complete_graph(3)).result;
  EXPECT_EQ(r.max_cycles, 3);
  EXPECT_EQ(r.max_cycles, count_cycles(complete_multipartite(ClassVector({2, 3}))));
  EXPECT_TRUE(r.unique);
  ASSERT_TRUE(r.turan_is_extremal.has_value());
  EXPECT_TRUE(*r.turan_is_extremal);
  EXPECT_EQ(r.extremal_graphs.front(), canonical_graph6(turan_graph(5, 2)));
  EXPECT_EQ(r.turan_k, 2);
  EXPECT_TRUE(r.has_critical_edge.value_or(false));
}

// Every reported extremal graph is H-free and attains the maximum; nothing
// enumerated exceeds it.
TEST(Search, ResultsReverified) {
  for (const Graph& h : {complete_graph(3), complete_graph(4), cycle_graph(4)}) {
    for (int n = 4; n <= 7; ++n) {
      const SearchResult r = max_cycles_H_free(n, h).result;
      for (const std::string& g6 : r.extremal_graphs) {
        const Graph g = from_graph6(g6);
        EXPECT_FALSE(contains_subgraph(g, h));
        EXPECT_EQ(count_cycles(g), r.max_cycles);
      }
      for (const Graph& g : enumerate_graphs(n, h)) EXPECT_LE(count_cycles(g), r.max_cycles);
    }
  }
}

TEST(Search, TriangleFreeUpToEightHasTuranExtremal) {
  for (int n = 3; n <= 8; ++n) {
    const SearchResult r = max_cycles_H_free(n, complete_graph(3)).result;
    EXPECT_GE(r.max_cycles, count_cycles(turan_graph(n, 2))) << n;
    EXPECT_FALSE(r.extremal_graphs.empty());
  }
}

TEST(Search, Preconditions) {
  EXPECT_THROW(max_cycles_H_free(10, complete_graph(3)), CapExceeded);
  EXPECT_THROW(max_cycles_H_free(3, empty_graph(1)), std::invalid_argument);
}

TEST(Search, CacheRoundTripIsIdentical) {
  const auto dir = std::filesystem::temp_directory_path() / "cyclex-test-cache";
  std::filesystem::remove_all(dir);
  SearchOptions options;
  options.cache_dir = dir;
  const SearchOutcome first = max_cycles_H_free(6, cycle_graph(4), options);
  EXPECT_FALSE(first.from_cache);
  const SearchOutcome second = max_cycles_H_free(6, cycle_graph(4), options);
  EXPECT_TRUE(second.from_cache);
  EXPECT_EQ(search_result_to_json(first.result), search_result_to_json(second.result));
  std::filesystem::remove_all(dir);
}

TEST(Search, JsonRoundTrip) {
  const SearchResult r = max_cycles_H_free(6, complete_graph(3)).result;
  const std::string text = search_result_to_json(r);
  EXPECT_EQ(search_result_to_json(search_result_from_json(text)), text);
}

TEST(ExtremalFunction, ExhaustiveTriangleMatchesTuran) {
  const ExtremalFunction ex = extremal_function_exhaustive(complete_graph(3), 8);
  for (int t = 2; t <= 8; ++t) EXPECT_EQ(ex(t), turan_edges(t, 2)) << t;
  EXPECT_EQ(ex(1), 0);
  const ExtremalFunction c4 = extremal_function_exhaustive(cycle_graph(4), 7);
  // ex(t; C4) for t = 1..7.
  const std::vector<long long> known{0, 0, 1, 3, 4, 6, 7, 9};
  for (int t = 0; t <= 7; ++t) EXPECT_EQ(c4(t), known[static_cast<std::size_t>(t)]) << t;
}

TEST(Verify, Turanbest) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 8; ++n) {
      const VerificationReport r = verify_turanbest(n, k, 50, 42);
      EXPECT_EQ(r.failures, 0u) << n << ' ' << k;
      EXPECT_GT(r.checks, 0u);
    }
  }
}

TEST(Verify, MajorStepcountClose) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(verify_major(n, k).failures, 0u) << n << ' ' << k;
  }
  for (int k = 3; k <= 4; ++k) {
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(verify_stepcount(n, k).failures, 0u) << n << ' ' << k;
    for (int n = k; n <= 12; ++n) EXPECT_EQ(verify_close(n, k).failures, 0u) << n << ' ' << k;
  }
  EXPECT_TRUE(verify_major(5, 1).passed());
}

// Major's inequality recomputed directly from enumerated code counts.
TEST(Verify, MajorAgainstEnumeration) {
  for (int k = 2; k <= 3; ++k) {
    for (int n = 2; n <= 9; ++n) {
      const auto tally = oracle::tally_codes(n, k);
      std::vector<int> b(static_cast<std::size_t>(k), n / k);
      for (int i = 0; i < n % k; ++i) ++b[static_cast<std::size_t>(i)];
      const auto& bt = tally.at(b);
      for (const auto& [c, t] : tally) {
        // P[Q|P_b] >= P[Q|P_c] with both sides as count / all.
        EXPECT_GE(BigCount(from_u64(bt.cyclic_proper)) * from_u64(t.all), BigCount(from_u64(t.cyclic_proper)) * from_u64(bt.all));
      }
    }
  }
}

TEST(Verify, TurancountIsReportOnly) {
  const VerificationReport r = verify_turancount(6, 3);
  EXPECT_TRUE(r.report_only);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.checks, 0u);
}

}  // namespace
}  // namespace cyclex
