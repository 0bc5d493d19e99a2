#include "cyclex/codes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

// Completions of a partial code. Letters other than the first and the last
// one placed only matter through their remaining counts, so they are kept as
// a sorted multiset with zeros dropped.
struct WalkState {
  int first_rem = 0;
  bool last_is_first = true;
  int last_rem = 0;               // meaningful when !last_is_first
  std::vector<int> others;        // sorted ascending, all positive

  std::string key() const {
    std::string k;
    k.reserve(others.size() + 3);
    k.push_back(static_cast<char>(first_rem));
    k.push_back(last_is_first ? 1 : 0);
    k.push_back(static_cast<char>(last_is_first ? 0 : last_rem));
    for (int x : others) k.push_back(static_cast<char>(x));
    return k;
  }
};

void insert_sorted(std::vector<int>& v, int x) {
  if (x <= 0) return;
  v.insert(std::upper_bound(v.begin(), v.end(), x), x);
}

void erase_one(std::vector<int>& v, int x) { v.erase(std::lower_bound(v.begin(), v.end(), x)); }

const BigCount& completions(const WalkState& s) {
  thread_local std::unordered_map<std::string, BigCount> memo;
  const std::string key = s.key();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  BigCount total = 0;
  const int remaining = s.first_rem + (s.last_is_first ? 0 : s.last_rem) +
                        std::accumulate(s.others.begin(), s.others.end(), 0);
  if (remaining == 0) {
    total = s.last_is_first ? 0 : 1;
  } else {
    if (!s.last_is_first && s.first_rem > 0) {
      WalkState next{s.first_rem - 1, true, 0, s.others};
      insert_sorted(next.others, s.last_rem);
      total += completions(next);
    }
    // Step to a letter from the interchangeable pool, one distinct count at a time.
    for (std::size_t i = 0; i < s.others.size();) {
      const int x = s.others[i];
      std::size_t j = i;
      while (j < s.others.size() && s.others[j] == x) ++j;
      WalkState next{s.first_rem, false, x - 1, s.others};
      erase_one(next.others, x);
      if (!s.last_is_first) insert_sorted(next.others, s.last_rem);
      total += static_cast<unsigned long>(j - i) * completions(next);
      i = j;
    }
  }
  return memo.emplace(key, std::move(total)).first->second;
}

std::vector<int> pool_without(std::span<const int> c, int a, int b) {
  std::vector<int> pool;
  for (std::size_t l = 0; l < c.size(); ++l) {
    if (static_cast<int>(l) == a || static_cast<int>(l) == b) continue;
    if (c[l] > 0) pool.push_back(c[l]);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

void check_weak(std::span<const int> c) {
  if (c.empty()) throw std::invalid_argument("content must have at least one part");
  long total = 0;
  for (int x : c) {
    if (x < 0) throw std::invalid_argument("content parts must be nonnegative");
    total += x;
  }
  if (total > kMaxVertices) throw std::invalid_argument("content exceeds 64 letters");
}

int total_of(std::span<const int> c) { return std::accumulate(c.begin(), c.end(), 0); }

BigCount factorial_product(std::span<const int> c) {
  BigCount p = 1;
  for (int x : c) p *= factorial(static_cast<unsigned>(x));
  return p;
}

std::vector<int> positive_sorted(std::span<const int> c) {
  std::vector<int> v;
  for (int x : c) {
    if (x > 0) v.push_back(x);
  }
  std::sort(v.begin(), v.end());
  return v;
}

BigCount hamilton_sorted(const std::vector<int>& parts) {
  thread_local std::map<std::vector<int>, BigCount> memo;
  if (auto it = memo.find(parts); it != memo.end()) return it->second;
  const int n = total_of(parts);
  BigCount h = 0;
  if (n >= 3) {
    const BigCount scaled = factorial_product(parts) * code_cycle_count_weak(parts);
    if (!mpz_divisible_ui_p(scaled.get_mpz_t(), static_cast<unsigned long>(2 * n))) {
      throw std::logic_error("Hamilton count: code total not divisible by 2n");
    }
    h = scaled / (2 * n);
  }
  memo.emplace(parts, h);
  return h;
}

void collect_compositions(int n, int k, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int x = min_part; x <= n - (k - 1) * min_part; ++x) {
    cur.push_back(x);
    collect_compositions(n - x, k - 1, min_part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigCount code_cycle_count_weak(std::span<const int> c, std::optional<std::pair<int, int>> rooted) {
  check_weak(c);
  const int k = static_cast<int>(c.size());
  if (rooted) {
    const auto [i, j] = *rooted;
    if (i < 1 || i > k || j < 1 || j > k) throw std::invalid_argument("rooted letter out of range");
    if (i == j) throw std::invalid_argument("rooted letters must differ");
    if (c[i - 1] < 1 || c[j - 1] < 1) throw std::invalid_argument("rooted letter has zero content");
    WalkState s{c[i - 1] - 1, false, c[j - 1] - 1, pool_without(c, i - 1, j - 1)};
    return completions(s);
  }
  BigCount total = 0;
  // Letters with equal content give equal counts; evaluate each distinct count once.
  std::map<int, int> multiplicity;
  for (int x : c) {
    if (x > 0) ++multiplicity[x];
  }
  const std::vector<int> all = positive_sorted(c);
  for (const auto& [x, mult] : multiplicity) {
    std::vector<int> pool = all;
    erase_one(pool, x);
    total += mult * completions(WalkState{x - 1, true, 0, std::move(pool)});
  }
  return total;
}

BigCount code_cycle_count(const CodeClassSpec& spec) {
  return code_cycle_count_weak(spec.content.parts(), spec.rooted);
}

ExactProb prob_Q_given_P_weak(std::span<const int> c) {
  check_weak(c);
  ExactProb p(code_cycle_count_weak(c) * factorial_product(c),
              factorial(static_cast<unsigned>(total_of(c))));
  p.canonicalize();
  return p;
}

ExactProb prob_Q_given_P(const ClassVector& c) { return prob_Q_given_P_weak(c.parts()); }

BigCount hamilton_multipartite_weak(std::span<const int> c) {
  check_weak(c);
  return hamilton_sorted(positive_sorted(c));
}

BigCount hamilton_multipartite(const ClassVector& c) { return hamilton_multipartite_weak(c.parts()); }

BigCount rooted_hamilton_permutations(std::span<const int> c, int i, int j) {
  check_weak(c);
  const int k = static_cast<int>(c.size());
  if (i < 1 || i > k) throw std::invalid_argument("root class out of range");
  if (j < 1 || j > k) throw std::invalid_argument("target class out of range");
  if (i == j) throw std::invalid_argument("target class must differ from the root class");
  if (c[i - 1] < 1) throw std::invalid_argument("root class is empty");
  if (c[j - 1] == 0) return 0;
  if (std::accumulate(c.begin(), c.end(), 0) < 3) return 0;  // a cycle needs three vertices
  BigCount weight = factorial(static_cast<unsigned>(c[i - 1] - 1));
  for (int l = 0; l < k; ++l) {
    if (l != i - 1) weight *= factorial(static_cast<unsigned>(c[l]));
  }
  return weight * code_cycle_count_weak(c, std::pair{i, j});
}

BigCount hv_weak(std::span<const int> c, int j) { return rooted_hamilton_permutations(c, 1, j); }

BigCount hv(const ClassVector& c, int j) { return hv_weak(c.parts(), j); }

CycleSpectrum cycle_spectrum_multipartite(const ClassVector& c) {
  if (c.n() > kMaxAnalyticSpectrumVertices) {
    throw CapExceeded("analytic spectrum limited to " + std::to_string(kMaxAnalyticSpectrumVertices) +
                      " vertices, got " + std::to_string(c.n()));
  }
  // Classes of equal size are handled together: choosing how many of them
  // contribute v vertices, for each v, with a multinomial weight.
  std::map<int, int> groups;
  for (int x : c.parts()) ++groups[x];
  const std::vector<std::pair<int, int>> group_list(groups.begin(), groups.end());

  std::map<std::vector<int>, BigCount> weighted;  // sorted sub-vector -> number of vertex choices
  std::vector<int> chosen;
  auto recurse = [&](auto&& self, std::size_t g, const BigCount& weight) -> void {
    if (g == group_list.size()) {
      std::vector<int> key = chosen;
      std::sort(key.begin(), key.end());
      weighted[key] += weight;
      return;
    }
    const auto [size, count] = group_list[g];
    // Distribute `count` classes among values v = 0..size.
    auto distribute = [&](auto&& dist, int v, int left, const BigCount& w) -> void {
      if (v == 0) {  // the remaining classes contribute nothing
        self(self, g + 1, w);
        return;
      }
      const BigCount per = binomial(static_cast<unsigned>(size), static_cast<unsigned>(v));
      BigCount factor = 1;
      for (int t = 0; t <= left; ++t) {
        const std::size_t mark = chosen.size();
        chosen.insert(chosen.end(), static_cast<std::size_t>(t), v);
        dist(dist, v - 1, left - t, w * binomial(static_cast<unsigned>(left), static_cast<unsigned>(t)) * factor);
        chosen.resize(mark);
        factor *= per;
      }
    };
    distribute(distribute, size, count, weight);
  };
  recurse(recurse, 0, BigCount(1));

  CycleSpectrum s = empty_spectrum(c.n());
  for (const auto& [parts, weight] : weighted) {
    const int r = total_of(parts);
    if (r < 3) continue;
    s.counts[r] += weight * hamilton_sorted(parts);
  }
  return s;
}

CycleSpectrum bipartite_cycle_counts(int n) {
  if (n < 4) throw std::invalid_argument("bipartite closed form needs n >= 4");
  const int t = n / 2;
  const int t2 = n - t;
  CycleSpectrum s = empty_spectrum(n);
  for (int r = 2; r <= t; ++r) {
    const BigCount num = falling_factorial(t, static_cast<unsigned>(r)) * falling_factorial(t2, static_cast<unsigned>(r));
    s.counts[2 * r] = num / (2 * r);
  }
  return s;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 1) return out;
  std::vector<int> cur;
  collect_compositions(n, k, 1, cur, out);
  return out;
}

std::vector<std::vector<int>> weak_compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 1) return out;
  std::vector<int> cur;
  collect_compositions(n, k, 0, cur, out);
  return out;
}

bool in_Q(std::span<const int> code) {
  const std::size_t n = code.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (code[i] == code[(i + 1) % n]) return false;
  }
  return true;
}

}  // namespace cyclex
