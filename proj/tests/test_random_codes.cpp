#include <cmath>

#include <gtest/gtest.h>

#include "cyclex/codes.hpp"
#include "cyclex/random_codes.hpp"
#include "oracles.hpp"

namespace cyclex {
namespace {

TEST(Rng, DeterministicAndStreamSeparated) {
  CounterRng a(42, 0), b(42, 0), c(42, 1), d(43, 0);
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    EXPECT_EQ(x, b.next());
    EXPECT_NE(x, c.next());
    EXPECT_NE(x, d.next());
  }
}

TEST(Rng, BelowIsInRangeAndRoughlyUniform) {
  CounterRng rng(1, 2);
  std::vector<int> hist(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.below(7);
    ASSERT_LT(v, 7u);
    ++hist[v];
  }
  for (int h : hist) EXPECT_NEAR(h, 10000, 500);
  EXPECT_EQ(rng.below(1), 0u);
}

TEST(Sample, CodeIsReproducibleAndConsistent) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const CodeSample s = sample_code(9, 3, 7, i);
    EXPECT_EQ(s.code, sample_code(9, 3, 7, i).code);
    EXPECT_EQ(s.in_Q, in_Q(s.code));
    std::vector<int> content(3, 0);
    for (int l : s.code) ++content[static_cast<std::size_t>(l - 1)];
    EXPECT_EQ(s.content, content);
  }
}

BigCount total_codes(int n, int k) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  return out;
}

ExactProb frac(const BigCount& a, const BigCount& b) {
  ExactProb q(a, b);
  q.canonicalize();
  return q;
}

TEST(Exact, ProbabilitiesMatchEnumeration) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 1; n <= 8; ++n) {
      const auto tally = oracle::tally_codes(n, k);
      BigCount proper = 0;
      BigCount total = 0;
      for (const auto& [c, t] : tally) {
        proper += from_u64(t.cyclic_proper);
        total += from_u64(t.all);
        EXPECT_EQ(exact_prob_P_c(c), frac(from_u64(t.all), total_codes(n, k)));
        EXPECT_EQ(exact_prob_Q_and_P_c(c), frac(from_u64(t.cyclic_proper), total_codes(n, k)));
      }
      EXPECT_EQ(exact_prob_Q(n, k), frac(proper, total)) << n << ' ' << k;
    }
  }
}

TEST(Estimate, WorkerCountDoesNotChangeResult) {
  const Estimate one = estimate_prob(10, 3, CodeEvent::Q, {}, 50000, 9, 1);
  const Estimate four = estimate_prob(10, 3, CodeEvent::Q, {}, 50000, 9, 4);
  EXPECT_EQ(one.hits, four.hits);
  EXPECT_EQ(one.estimate, four.estimate);
  EXPECT_EQ(one.stderr_, four.stderr_);
  const WalkEstimate w1 = walk_estimate_hv_fraction(6, 3, 20000, 5, 1);
  const WalkEstimate w3 = walk_estimate_hv_fraction(6, 3, 20000, 5, 3);
  EXPECT_EQ(w1.accepted, w3.accepted);
  EXPECT_EQ(w1.estimate, w3.estimate);
}

double z_score(double estimate, const ExactProb& exact, std::uint64_t samples) {
  const double p = exact.get_d();
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(samples));
  return sigma == 0 ? (estimate == p ? 0 : INFINITY) : std::abs(estimate - p) / sigma;
}

TEST(Estimate, WithinFourSigma) {
  for (int k = 2; k <= 4; ++k) {
    for (int n = 3; n <= 10; ++n) {
      const Estimate q = estimate_prob(n, k, CodeEvent::Q, {}, 40000, 100 + n, 1);
      ASSERT_TRUE(q.exact.has_value());
      EXPECT_LT(z_score(q.estimate, *q.exact, q.samples), 4.0) << n << ' ' << k;
    }
  }
  const std::vector<int> c{2, 2, 2};
  const Estimate pc = estimate_prob(6, 3, CodeEvent::P_c, c, 40000, 3, 1);
  EXPECT_LT(z_score(pc.estimate, *pc.exact, pc.samples), 4.0);
  const Estimate qpc = estimate_prob(6, 3, CodeEvent::Q_and_P_c, c, 40000, 4, 1);
  EXPECT_LT(z_score(qpc.estimate, *qpc.exact, qpc.samples), 4.0);
}

TEST(Walk, ExactValueAndEstimate) {
  const WalkEstimate w = walk_estimate_hv_fraction(6, 3, 200000, 11, 1);
  const ClassVector b = ClassVector::balanced(6, 3);
  EXPECT_EQ(w.exact, frac(hv(b, 2), 2 * hamilton_multipartite(b)));
  ASSERT_TRUE(w.estimate.has_value());
  EXPECT_LT(z_score(*w.estimate, w.exact, w.accepted), 4.0);
  EXPECT_THROW(walk_estimate_hv_fraction(6, 2, 10, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace cyclex
