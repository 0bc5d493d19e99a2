#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclex/bigint.hpp"
#include "cyclex/codes.hpp"

namespace cyclex {

/// Counter-based generator: the i-th output of stream s under seed x is a
/// fixed function of (x, s, i), so results do not depend on scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream);
  std::uint64_t next();
  /// Uniform on [0, bound), bound >= 1, without modulo bias.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

struct CodeSample {
  Code code;                 // letters in 1..k
  bool in_Q = false;
  std::vector<int> content;  // content[l-1] = occurrences of letter l (zeros kept)
};

/// The index-th code drawn under `seed` (i.i.d. uniform letters). Requires k >= 2, n >= 1.
CodeSample sample_code(int n, int k, std::uint64_t seed, std::uint64_t index = 0);

enum class CodeEvent { Q, P_c, Q_and_P_c };
std::string event_name(CodeEvent e);

struct Estimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::optional<ExactProb> exact;
};

/// Samples are processed in fixed chunks with one generator stream per chunk,
/// so the estimate is identical for every worker count.
inline constexpr std::uint64_t kSampleChunk = 4096;

/// Frequency of `event` among `samples` random codes. `content` (length k,
/// zeros allowed) is required for the P_c events. Requires samples >= 1, k >= 2.
Estimate estimate_prob(int n, int k, CodeEvent event, const std::vector<int>& content, std::uint64_t samples,
                       std::uint64_t seed, int workers = 1);

/// Exact probabilities for a uniform code of length n over k letters.
ExactProb exact_prob_Q(int n, int k);
ExactProb exact_prob_P_c(std::span<const int> content);
ExactProb exact_prob_Q_and_P_c(std::span<const int> content);

struct WalkEstimate {
  std::optional<double> estimate;  // empty when nothing was accepted
  double stderr_ = 0.0;
  std::uint64_t accepted = 0;
  std::uint64_t samples = 0;
  ExactProb exact;                 // hv(b,2) / (2 h(K_b))
};

/// Random walk on K_k started at letter 1 and stopped just before the
/// (b_1+1)-th visit to 1, with b the balanced content of n over k letters;
/// walks of length n with content b are accepted. Estimates
/// P[a_2 = 2 | accepted]. Requires k >= 3 and n >= k.
WalkEstimate walk_estimate_hv_fraction(int n, int k, std::uint64_t samples, std::uint64_t seed, int workers = 1);

}  // namespace cyclex
