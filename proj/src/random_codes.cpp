#include "cyclex/random_codes.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "cyclex/bounds.hpp"

namespace cyclex {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

struct Tally {
  std::uint64_t hits = 0;
  std::uint64_t trials = 0;
};

// Runs fn(chunk, first_sample, count) for every chunk and sums the tallies.
// Each chunk's result lands in its own slot, so the total is schedule-free.
template <class Fn>
Tally run_chunks(std::uint64_t samples, int workers, Fn fn) {
  const std::uint64_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  std::vector<Tally> results(chunks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t first = c * kSampleChunk;
      results[c] = fn(c, first, std::min(kSampleChunk, samples - first));
    }
  };
  const int threads = std::max(1, workers);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  Tally total;
  for (const Tally& t : results) {
    total.hits += t.hits;
    total.trials += t.trials;
  }
  return total;
}

void check_code_args(int n, int k) {
  if (n < 1) throw std::invalid_argument("codes need n >= 1");
  if (k < 2) throw std::invalid_argument("random codes need k >= 2");
}

double binomial_stderr(double p, std::uint64_t trials) {
  if (trials == 0) return 0.0;
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(splitmix64(seed ^ splitmix64(stream ^ 0x632BE59BD9B4E019ULL))) {}

std::uint64_t CounterRng::next() { return splitmix64(key_ + kGolden * ++counter_); }

std::uint64_t CounterRng::below(std::uint64_t bound) {
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t x = next();
  while (x > limit) x = next();
  return x % bound;
}

CodeSample sample_code(int n, int k, std::uint64_t seed, std::uint64_t index) {
  check_code_args(n, k);
  CounterRng rng(seed, index);
  CodeSample s;
  s.content.assign(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < n; ++i) {
    const int letter = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
    s.code.push_back(letter);
    ++s.content[static_cast<std::size_t>(letter - 1)];
  }
  s.in_Q = in_Q(s.code);
  return s;
}

std::string event_name(CodeEvent e) {
  switch (e) {
    case CodeEvent::Q:
      return "Q";
    case CodeEvent::P_c:
      return "P_c";
    case CodeEvent::Q_and_P_c:
      return "Q_and_P_c";
  }
  return "unknown";
}

ExactProb exact_prob_Q(int n, int k) {
  check_code_args(n, k);
  // Proper colourings of the n-cycle with k colours (n = 1: a letter next to itself).
  if (n == 1) return 0;
  BigCount km1 = k - 1;
  BigCount count;
  mpz_pow_ui(count.get_mpz_t(), km1.get_mpz_t(), static_cast<unsigned long>(n));
  count += (n % 2 == 0 ? 1 : -1) * km1;
  BigCount total;
  mpz_ui_pow_ui(total.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(n));
  ExactProb p(count, total);
  p.canonicalize();
  return p;
}

ExactProb exact_prob_P_c(std::span<const int> content) {
  const int n = std::accumulate(content.begin(), content.end(), 0);
  BigCount ways = factorial(static_cast<unsigned>(n));
  for (int x : content) ways /= factorial(static_cast<unsigned>(x));
  BigCount total;
  mpz_ui_pow_ui(total.get_mpz_t(), content.size(), static_cast<unsigned long>(n));
  ExactProb p(ways, total);
  p.canonicalize();
  return p;
}

ExactProb exact_prob_Q_and_P_c(std::span<const int> content) {
  const int n = std::accumulate(content.begin(), content.end(), 0);
  BigCount total;
  mpz_ui_pow_ui(total.get_mpz_t(), content.size(), static_cast<unsigned long>(n));
  ExactProb p(code_cycle_count_weak(content), total);
  p.canonicalize();
  return p;
}

Estimate estimate_prob(int n, int k, CodeEvent event, const std::vector<int>& content, std::uint64_t samples,
                       std::uint64_t seed, int workers) {
  check_code_args(n, k);
  if (samples < 1) throw std::invalid_argument("estimate_prob needs samples >= 1");
  const bool needs_content = event != CodeEvent::Q;
  if (needs_content) {
    if (static_cast<int>(content.size()) != k) throw std::invalid_argument("content must have k entries");
    if (std::accumulate(content.begin(), content.end(), 0) != n) throw std::invalid_argument("content must sum to n");
    for (int x : content) {
      if (x < 0) throw std::invalid_argument("content entries must be nonnegative");
    }
  }
  const Tally t = run_chunks(samples, workers, [&](std::uint64_t chunk, std::uint64_t, std::uint64_t count) {
    Tally local;
    CounterRng rng(seed, chunk);
    std::vector<int> code(static_cast<std::size_t>(n));
    std::vector<int> seen(static_cast<std::size_t>(k));
    for (std::uint64_t s = 0; s < count; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int i = 0; i < n; ++i) {
        code[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(k))) + 1;
        ++seen[static_cast<std::size_t>(code[static_cast<std::size_t>(i)] - 1)];
      }
      bool hit = true;
      if (event != CodeEvent::P_c) hit = in_Q(code);
      if (hit && needs_content) hit = seen == content;
      local.hits += hit ? 1 : 0;
      ++local.trials;
    }
    return local;
  });
  Estimate e;
  e.hits = t.hits;
  e.samples = t.trials;
  e.estimate = static_cast<double>(t.hits) / static_cast<double>(t.trials);
  e.stderr_ = binomial_stderr(e.estimate, t.trials);
  switch (event) {
    case CodeEvent::Q:
      e.exact = exact_prob_Q(n, k);
      break;
    case CodeEvent::P_c:
      e.exact = exact_prob_P_c(content);
      break;
    case CodeEvent::Q_and_P_c:
      e.exact = exact_prob_Q_and_P_c(content);
      break;
  }
  return e;
}

WalkEstimate walk_estimate_hv_fraction(int n, int k, std::uint64_t samples, std::uint64_t seed, int workers) {
  if (k < 3) throw std::invalid_argument("walk estimate needs k >= 3");
  if (n < k) throw std::invalid_argument("walk estimate needs n >= k");
  if (samples < 1) throw std::invalid_argument("walk estimate needs samples >= 1");
  const std::vector<int> b = turan_content(n, k);
  // trials counts accepted walks, hits those with a_2 = 2.
  const Tally t = run_chunks(samples, workers, [&](std::uint64_t chunk, std::uint64_t, std::uint64_t count) {
    Tally local;
    CounterRng rng(seed, chunk);
    std::vector<int> seen(static_cast<std::size_t>(k));
    for (std::uint64_t s = 0; s < count; ++s) {
      std::fill(seen.begin(), seen.end(), 0);
      seen[0] = 1;
      int current = 1;
      int length = 1;
      int second = 0;
      bool ok = true;
      while (true) {
        // Uniform step to one of the k - 1 other letters.
        int step = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1))) + 1;
        if (step >= current) ++step;
        if (step == 1 && seen[0] == b[0]) break;  // stop before the (b_1+1)-th 1
        if (++length > n || ++seen[static_cast<std::size_t>(step - 1)] > b[static_cast<std::size_t>(step - 1)]) {
          ok = false;
          break;
        }
        if (length == 2) second = step;
        current = step;
      }
      ok = ok && length == n && seen == b;
      if (ok) {
        ++local.trials;
        if (second == 2) ++local.hits;
      }
    }
    return local;
  });
  WalkEstimate w;
  w.samples = samples;
  w.accepted = t.trials;
  const BigCount h = hamilton_multipartite_weak(b);
  w.exact = ExactProb(hv_weak(b, 2), 2 * h);
  w.exact.canonicalize();
  if (t.trials > 0) {
    const double p = static_cast<double>(t.hits) / static_cast<double>(t.trials);
    w.estimate = p;
    w.stderr_ = binomial_stderr(p, t.trials);
  }
  return w;
}

}  // namespace cyclex
