#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclex/bigint.hpp"
#include "cyclex/graph.hpp"
#include "cyclex/real.hpp"

namespace cyclex {

/// Outcome of one inequality check "lhs <= rhs".
///
/// When the right-hand side involves a transcendental constant it is enclosed
/// in [rhs_lower, rhs_upper] by directed rounding. `holds` is then only set
/// when lhs <= rhs_lower, so a true value is rigorous; `decided` is false when
/// lhs falls inside the enclosure.
struct BoundReport {
  std::string name;
  std::optional<int> n, m, k, i;
  std::optional<double> eps;
  std::string lhs;        // exact value (integer or "p/q") or a decimal approximation
  std::string rhs;
  Real lhs_log;           // natural logs; -inf encodes a zero side
  Real rhs_log;
  bool holds = false;
  bool decided = true;
  bool report_only = false;
  std::optional<double> ratio;  // lhs / rhs, where meaningful
  std::string note;
};

std::string report_to_json(const BoundReport& r);
std::string report_csv_header();  // name,n,m,k,i,lhs_log,rhs_log,holds
std::string report_to_csv(const BoundReport& r);

/// t |-> ex(t; H) for 0 <= t <= max_t().
class ExtremalFunction {
 public:
  enum class Provenance { formula, exhaustive, user_supplied };

  /// ex(t; K_{k+1}) = t_k(t), with ex(t) = C(t, 2) for t <= k.
  static ExtremalFunction turan(int k, int max_t);
  /// values[t] for t = 0..values.size()-1. Throws std::invalid_argument unless
  /// nondecreasing, nonnegative and at most C(t, 2).
  static ExtremalFunction from_table(std::vector<long long> values, Provenance provenance,
                                     std::string description = {});

  long long operator()(int t) const;
  int max_t() const { return static_cast<int>(values_.size()) - 1; }
  Provenance provenance() const { return provenance_; }
  const std::string& description() const { return description_; }
  const std::vector<long long>& values() const { return values_; }

 private:
  ExtremalFunction(std::vector<long long> values, Provenance p, std::string d)
      : values_(std::move(values)), provenance_(p), description_(std::move(d)) {}
  std::vector<long long> values_;
  Provenance provenance_;
  std::string description_;
};

std::string provenance_name(ExtremalFunction::Provenance p);

/// lambda = 1 - sqrt(1 - 2k/(k-1) * m/(n-3)^2), to 256 bits.
/// Throws std::domain_error when k < 2, n <= 3, m < 0 or the radicand is negative.
Real lambda(int n, long long m, int k);

/// n ln(lambda) + (n+2) ln n + n ln((k-1)/k) + (2k-1)/((k-1) lambda) - lambda n.
/// Throws std::domain_error when lambda = 0.
Real easycor_bound_log(int n, long long m, int k);

/// n ln((k-1)/k) + (n+3) ln n + eps n + sqrt(n) - n. Requires 0 < eps < 1, n >= 4, k >= 2.
Real cyclecount_bound_log(int n, int k, double eps);

/// Optimal sequence for the path-product problem: r_i for i = 2..n.
struct PathBound {
  BigCount value;
  std::vector<long long> r;   // r[0] is r_2
  bool truncated = false;     // structured form only: budget below the head total
};

inline constexpr int kMaxPathBoundVertices = 14;

/// max prod_{i=2}^n max(r_i, 1) over integers r_i >= 0 with sum <= m and
/// prefix sums r_2 + ... + r_t <= ex(t) for 2 <= t <= n. Ties go to the
/// sequence with the smallest r at the earliest differing index.
/// Throws CapExceeded for n > 14, std::invalid_argument for n < 2 or a table
/// shorter than n.
PathBound path_bound_exhaustive(int n, long long m, const ExtremalFunction& ex);

/// Structured candidate: t_k(n0) spread evenly (ascending) over r_2..r_{n0},
/// Turán increments t_k(i) - t_k(i-1) up to I, then the remaining budget
/// spread evenly over the tail. I is the largest index with
/// t_k(I) + (t_k(I) - t_k(I-1)) (n - I) <= m. When m < t_k(n0) the budget is
/// spread over the head only and the result is flagged as truncated.
/// Throws std::invalid_argument unless k >= 2, 2 <= n0 < n and m >= 0.
PathBound path_bound_structured(int n, long long m, int k, int n0);

/// h(T_k(n)) >= (n-1)_i ((k-2)/k)^i h(T_k(n-i)), exactly. Requires k >= 3,
/// i >= 0, n - i >= 3. T_k(s) with s < k is read as K_s.
BoundReport check_recursion(int n, int k, int i);
/// c(T_k(n)) <= e^{2k/(k-2)} h(T_k(n)). Requires k >= 3, 3 <= n <= 40.
BoundReport check_secondcount(int n, int k);
/// c(T_2(n-i)) <= 2e (4/n)^i c_{2 floor(n/2)}(T_2(n)). Requires i >= 0, n - i >= 4.
BoundReport check_second2count(int n, int i);
/// k = 2: c_{2 floor(n/2)}(T_2(n)) / (pi 2^{-n} n^n e^{-n}).
/// k >= 3: h(T_k(n)) / (((k-1)/k)^n n^{n-1/2} e^{-n}). Report only. Requires n >= 4.
BoundReport kkmain_report(int n, int k);

/// Structured value against the exhaustive optimum for the Turán table.
BoundReport check_path_bounds(int n, long long m, int k, int n0);
/// p_{x,y}(g) against the exhaustive optimum for g's vertex and edge counts.
BoundReport check_path_count_bound(const Graph& g, int x, int y, const ExtremalFunction& ex);

// Grid sweeps, in a fixed order.
std::vector<BoundReport> sweep_recursion(int n_max, const std::vector<int>& ks, int i_max);
std::vector<BoundReport> sweep_secondcount(int n_max, const std::vector<int>& ks);
std::vector<BoundReport> sweep_second2count(int n_max, int i_max);
std::vector<BoundReport> sweep_kkmain(int n_min, int n_max, int k);
/// n from 3 to n_max, every m in [0, t_k(n)], n0 = min(default_n0, n - 1).
std::vector<BoundReport> sweep_path_bounds(int n_max, int k, int default_n0);

/// Class sizes of T_k(n), largest first; K_n (all ones) when n < k.
std::vector<int> turan_content(int n, int k);

}  // namespace cyclex
