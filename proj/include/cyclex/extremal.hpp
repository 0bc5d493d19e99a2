#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclex/bigint.hpp"
#include "cyclex/bounds.hpp"
#include "cyclex/graph.hpp"

namespace cyclex {

inline constexpr int kMaxSearchVertices = 9;

/// One canonical representative per isomorphism class of graphs on n
/// vertices that do not contain `forbid` (all graphs when absent), sorted by
/// canonical graph6. Built by vertex augmentation, dropping H at every level.
/// Throws CapExceeded for n > 9.
std::vector<Graph> enumerate_graphs(int n, const std::optional<Graph>& forbid);

struct SearchResult {
  int n = 0;
  std::string forbidden;                  // canonical graph6 of H
  BigCount max_cycles;
  std::vector<std::string> extremal_graphs;  // canonical graph6, sorted
  bool unique = false;
  std::uint64_t graphs_examined = 0;      // H-free classes whose cycles were counted
  double elapsed = 0.0;                   // seconds spent computing (not loading)
  std::optional<int> turan_k;             // chi(H) - 1, when chi(H) >= 3 and k <= n
  std::optional<bool> turan_is_extremal;  // T_k(n) among the extremal classes
  std::optional<bool> has_critical_edge;
};

std::string search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const std::string& text);

struct SearchOptions {
  /// Directory for cached results; no caching when empty.
  std::filesystem::path cache_dir;
};

/// $CYCLEX_CACHE_DIR, or ".cyclex-cache" in the working directory.
std::filesystem::path default_cache_dir();

struct SearchOutcome {
  SearchResult result;
  bool from_cache = false;
};

/// Exact maximum cycle count over H-free graphs on n vertices.
/// Throws CapExceeded for n > 9 and std::invalid_argument when no graph on n
/// vertices is H-free.
SearchOutcome max_cycles_H_free(int n, const Graph& forbid, const SearchOptions& options = {});

/// ex(t; H) for t = 0..max_t by exhaustive search (max_t <= 9).
ExtremalFunction extremal_function_exhaustive(const Graph& forbid, int max_t);

/// Summary of an exact verification sweep. `lines` holds one JSON object per
/// checked case.
struct VerificationReport {
  std::string name;
  int n = 0;
  int k = 0;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t vacuous = 0;   // cases skipped because the hypothesis is empty
  bool report_only = false;
  std::vector<std::string> lines;
  std::string note;

  bool passed() const { return report_only || failures == 0; }
  std::string summary_json() const;
};

/// Spectrum dominance of T_k(n) over every K_c with at most k parts, strict
/// total dominance for n >= 5 over unbalanced c, and over `sample_subgraphs`
/// random proper spanning subgraphs of each K_c. Throws CapExceeded for n > 9.
VerificationReport verify_turanbest(int n, int k, int sample_subgraphs, std::uint64_t seed);
/// P[Q | balanced content] >= P[Q | content c] for every content c of n over
/// k letters (zero counts allowed). k = 1 is reported as vacuous.
VerificationReport verify_major(int n, int k);
/// hv(c,2) <= (c_i+1)c_j / (c_i(c_j-1)) hv(c',2) for every content with
/// c_1 >= 1 and every pair 0 != c_i <= c_j - 2. Requires k >= 3.
VerificationReport verify_stepcount(int n, int k);
/// hv(c,2) <= hv(b,2) prod max(b_i/c_i, c_i/b_i) with b balanced and ordered
/// like c (b_i >= b_j iff c_i >= c_j), in exact rationals. Contents with no
/// such b are counted as vacuous. Requires k >= 3.
VerificationReport verify_close(int n, int k);
/// hv on every ordered pair of classes of T_k(n) against (2/(3k)) h(T_k(n)).
/// Outcomes are recorded, not asserted. Requires k >= 3, k <= n <= 20.
VerificationReport verify_turancount(int n, int k);

}  // namespace cyclex
