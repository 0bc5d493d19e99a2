#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "cyclex/codes.hpp"
#include "cyclex/cycle_count.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

ExactProb frac(const BigCount& a, const BigCount& b) {
  ExactProb q(a, b);
  q.canonicalize();
  return q;
}

BigCount multinomial(std::span<const int> c) {
  int n = 0;
  BigCount out = 1;
  for (int x : c) {
    n += x;
    out *= binomial(static_cast<unsigned>(n), static_cast<unsigned>(x));
  }
  return out;
}

TEST(Codes, CompositionEnumerators) {
  EXPECT_EQ(compositions(4, 2), (std::vector<std::vector<int>>{{1, 3}, {2, 2}, {3, 1}}));
  EXPECT_EQ(weak_compositions(2, 2), (std::vector<std::vector<int>>{{0, 2}, {1, 1}, {2, 0}}));
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(BigCount(compositions(n, k).size()), n >= k ? binomial(n - 1, k - 1) : BigCount(0));
      EXPECT_EQ(BigCount(weak_compositions(n, k).size()), binomial(n + k - 1, k - 1));
    }
  }
}

TEST(Codes, InQ) {
  EXPECT_TRUE(in_Q(std::vector{1, 2, 1, 2}));
  EXPECT_FALSE(in_Q(std::vector{1, 2, 1}));
  EXPECT_FALSE(in_Q(std::vector{1, 1, 2}));
  EXPECT_FALSE(in_Q(std::vector{1}));
}

TEST(Codes, CountsMatchEnumeration) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= (k == 4 ? 9 : 11); ++n) {
      for (const auto& [content, tally] : oracle::tally_codes(n, k)) {
        EXPECT_EQ(code_cycle_count_weak(content), from_u64(tally.cyclic_proper)) << n << ' ' << k;
        EXPECT_EQ(multinomial(content), from_u64(tally.all));
      }
    }
  }
}

TEST(Codes, RootedCountsMatchEnumeration) {
  const std::vector<std::vector<int>> contents{{2, 2, 2}, {3, 2, 1}, {1, 3, 2, 2}, {2, 2}, {4, 3, 2}};
  for (const auto& c : contents) {
    const int n = std::accumulate(c.begin(), c.end(), 0);
    const int k = static_cast<int>(c.size());
    std::vector<int> code;
    for (int l = 1; l <= k; ++l) code.insert(code.end(), static_cast<std::size_t>(c[static_cast<std::size_t>(l - 1)]), l);
    std::vector<std::vector<std::uint64_t>> tally(static_cast<std::size_t>(k + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(k + 1), 0));
    do {
      if (in_Q(code)) ++tally[static_cast<std::size_t>(code[0])][static_cast<std::size_t>(code[1])];
    } while (std::next_permutation(code.begin(), code.end()));
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        EXPECT_EQ(code_cycle_count_weak(c, std::pair{i, j}), from_u64(tally[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]))
            << n << " (" << i << ',' << j << ')';
      }
    }
  }
}

// No proper cyclic code puts more than half its letters in one class.
TEST(Codes, VanishesWhenAClassIsTooLarge) {
  for (int n = 3; n <= 12; ++n) {
    for (const auto& c : compositions(n, 3)) {
      const int big = *std::max_element(c.begin(), c.end());
      if (2 * big > n) {
        EXPECT_EQ(code_cycle_count(CodeClassSpec{ClassVector(c), std::nullopt}), 0);
      }
    }
  }
  EXPECT_EQ(code_cycle_count_weak(std::vector{3, 3}), 2);
  EXPECT_EQ(code_cycle_count_weak(std::vector{3, 2}), 0);
}

TEST(Codes, ProbabilityIsCountOverMultinomial) {
  for (const auto& c : compositions(9, 3)) {
    const ClassVector cv(c);
    EXPECT_EQ(prob_Q_given_P(cv), frac(code_cycle_count({cv, std::nullopt}), multinomial(c)));
  }
  EXPECT_EQ(prob_Q_given_P(ClassVector({2, 2})), ExactProb(1, 3));
}

TEST(Hamilton, MatchesGraphCount) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 10; ++n) {
      for (const auto& c : compositions(n, k)) {
        const ClassVector cv(c);
        const Graph g = complete_multipartite(cv);
        EXPECT_EQ(hamilton_multipartite(cv), count_hamilton(g)) << cv.to_string();
      }
    }
  }
  EXPECT_EQ(hamilton_multipartite(ClassVector({3, 3})), 6);
  EXPECT_EQ(hamilton_multipartite(ClassVector({1, 1, 1})), 1);
  EXPECT_EQ(hamilton_multipartite(ClassVector({2})), 0);
}

// Brute force over permutations v_1..v_n with v_1 = 0 (class 1).
BigCount brute_hv(const ClassVector& c, int j) {
  std::vector<int> cls;
  for (int l = 0; l < c.k(); ++l) cls.insert(cls.end(), static_cast<std::size_t>(c[static_cast<std::size_t>(l)]), l + 1);
  const Graph g = complete_multipartite(c);
  std::vector<int> rest(static_cast<std::size_t>(c.n() - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::uint64_t count = 0;
  do {
    if (cls[static_cast<std::size_t>(rest[0])] != j) continue;
    bool ok = g.has_edge(0, rest[0]) && g.has_edge(rest.back(), 0);
    for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i) ok = g.has_edge(rest[i], rest[i + 1]);
    count += ok;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return from_u64(count);
}

TEST(Hamilton, RootedMatchesPermutationEnumeration) {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& c : compositions(n, 3)) {
      const ClassVector cv(c);
      for (int j = 2; j <= 3; ++j) EXPECT_EQ(hv(cv, j), brute_hv(cv, j)) << cv.to_string() << " j=" << j;
    }
  }
  EXPECT_THROW(hv(ClassVector({2, 2}), 1), std::invalid_argument);
}

TEST(Hamilton, First1Identity) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = k; n <= 12; ++n) {
      for (const auto& c : compositions(n, k)) {
        const ClassVector cv(c);
        BigCount sum = 0;
        for (int j = 2; j <= k; ++j) sum += hv(cv, j);
        EXPECT_EQ(2 * hamilton_multipartite(cv), sum) << cv.to_string();
      }
    }
  }
}

TEST(Hamilton, RootedSymmetry) {
  // Summed over the second vertex's class, any root class gives 2h.
  const std::vector<int> c{3, 2, 2, 1};
  const BigCount h = hamilton_multipartite_weak(c);
  for (int i = 1; i <= 4; ++i) {
    BigCount sum = 0;
    for (int j = 1; j <= 4; ++j) {
      if (j != i) sum += rooted_hamilton_permutations(c, i, j);
    }
    EXPECT_EQ(sum, 2 * h) << i;
  }
}

TEST(Spectrum, MultipartiteMatchesGraph) {
  for (int k = 1; k <= 4; ++k) {
    for (int n = k; n <= 10; ++n) {
      for (const auto& c : compositions(n, k)) {
        const ClassVector cv(c);
        const CycleSpectrum analytic = cycle_spectrum_multipartite(cv);
        const CycleSpectrum exact = cycle_spectrum(complete_multipartite(cv));
        for (int r = 3; r <= n; ++r) EXPECT_EQ(analytic.at(r), exact.at(r)) << cv.to_string() << " r=" << r;
      }
    }
  }
}

TEST(Spectrum, BipartiteClosedForm) {
  for (int n = 4; n <= 14; ++n) {
    const CycleSpectrum closed = bipartite_cycle_counts(n);
    const CycleSpectrum exact = cycle_spectrum(turan_graph(n, 2));
    for (int r = 3; r <= n; ++r) EXPECT_EQ(closed.at(r), exact.at(r)) << n << ' ' << r;
  }
  EXPECT_THROW(bipartite_cycle_counts(3), std::invalid_argument);
}

TEST(Spectrum, LargeAnalyticStaysExact) {
  // T_2(40): Hamilton cycles of K_{20,20} = 20!^2 / 40.
  const CycleSpectrum s = cycle_spectrum_multipartite(ClassVector({20, 20}));
  EXPECT_EQ(s.at(40), factorial(20) * factorial(20) / 40);
  const CycleSpectrum closed = bipartite_cycle_counts(40);
  for (int r = 3; r <= 40; ++r) EXPECT_EQ(s.at(r), closed.at(r)) << r;
}

}  // namespace
}  // namespace cyclex
