#pragma once

// Exact counting for complete multipartite graphs through codes: strings over
// the alphabet {1..k} with cyclically distinct neighbours (the event Q) and a
// prescribed letter content c (the event P_c). A Hamilton cycle of K_c read as
// the sequence of classes it visits is such a code.
//
// Letters and class indices are 1-based in this header, matching the usual
// (c_1, ..., c_k) notation. The "weak" overloads accept zero parts, which
// denote empty classes.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cyclex/bigint.hpp"
#include "cyclex/cycle_count.hpp"
#include "cyclex/graph.hpp"

namespace cyclex {

using Code = std::vector<int>;

struct CodeClassSpec {
  ClassVector content;
  /// (i, j): the first letter is i and the second is j.
  std::optional<std::pair<int, int>> rooted;
};

/// |Q ∩ P_c|, restricted to codes starting "i j" when rooted.
/// Throws std::invalid_argument for a root outside [1, k], i == j, or a root
/// letter with zero content.
BigCount code_cycle_count(const CodeClassSpec& spec);
BigCount code_cycle_count_weak(std::span<const int> content,
                               std::optional<std::pair<int, int>> rooted = std::nullopt);

/// P[Q | P_c] for a uniform random code, as an exact rational.
ExactProb prob_Q_given_P(const ClassVector& c);
ExactProb prob_Q_given_P_weak(std::span<const int> content);

/// h(K_c). Zero when fewer than three vertices remain.
BigCount hamilton_multipartite(const ClassVector& c);
BigCount hamilton_multipartite_weak(std::span<const int> content);

/// Hamilton permutations v_1 ... v_n of K_c (closing edge included) with v_1 a
/// fixed vertex of class 1 and v_2 in class j. Each cycle through v is counted
/// once per orientation whose second vertex lies in class j.
/// Throws std::invalid_argument for j == 1 or j out of range.
BigCount hv(const ClassVector& c, int j);
/// As hv, for a weak content with c_1 >= 1; zero when c_j = 0.
BigCount hv_weak(std::span<const int> content, int j);
/// General root class i (v_1 fixed in class i), second vertex in class j.
/// Zero below three vertices.
BigCount rooted_hamilton_permutations(std::span<const int> content, int i, int j);

/// Per-length cycle counts of K_c computed from class-size subvectors.
/// Throws CapExceeded above 40 vertices.
inline constexpr int kMaxAnalyticSpectrumVertices = 40;
CycleSpectrum cycle_spectrum_multipartite(const ClassVector& c);

/// Closed-form spectrum of T_2(n): c_{2r} = (t)_r (t')_r / (2r) with
/// t = floor(n/2), t' = ceil(n/2). Requires n >= 4.
CycleSpectrum bipartite_cycle_counts(int n);

/// All compositions of n into exactly k positive parts, in lexicographic order.
std::vector<std::vector<int>> compositions(int n, int k);
/// All weak compositions of n into exactly k nonnegative parts, lexicographic.
std::vector<std::vector<int>> weak_compositions(int n, int k);

/// True iff no two cyclically adjacent letters are equal (n >= 1).
bool in_Q(std::span<const int> code);

}  // namespace cyclex
