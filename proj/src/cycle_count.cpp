#include "cyclex/cycle_count.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

using simd::Modulus;
using simd::PathDpProblem;

const BigCount& two_pow_64() {
  static const BigCount v = BigCount(1) << 64;
  return v;
}

// x = a (mod 2^64), x = b (mod 2^61 - 1), 0 <= x < 2^64 (2^61 - 1).
BigCount crt_combine(std::uint64_t a, std::uint64_t b) {
  const BigCount p = from_u64(simd::kMersenne61);
  BigCount inv;
  BigCount two64_mod_p = two_pow_64() % p;
  mpz_invert(inv.get_mpz_t(), two64_mod_p.get_mpz_t(), p.get_mpz_t());
  BigCount t = ((from_u64(b) - from_u64(a)) % p + p) % p;
  t = (t * inv) % p;
  return from_u64(a) + two_pow_64() * t;
}

// Exact totals from one or two modular passes, depending on the bound.
std::vector<BigCount> exact_totals(const PathDpProblem& problem, simd::Isa isa, const BigCount& bound) {
  const auto low = simd::path_dp_totals(isa, Modulus::wrap64, problem);
  std::vector<BigCount> out(low.size());
  if (bound < two_pow_64()) {
    for (std::size_t i = 0; i < low.size(); ++i) out[i] = from_u64(low[i]);
    return out;
  }
  const auto high = simd::path_dp_totals(isa, Modulus::mersenne61, problem);
  for (std::size_t i = 0; i < low.size(); ++i) out[i] = crt_combine(low[i], high[i]);
  return out;
}

// Largest number of directed cycles of a single length any n-vertex graph can
// have: (n)_r / r, attained by K_n. Also dominates every DP table entry.
BigCount directed_cycle_bound(int n) {
  BigCount best = 0;
  for (int r = 3; r <= n; ++r) {
    BigCount v = falling_factorial(n, static_cast<unsigned>(r)) / r;
    if (v > best) best = v;
  }
  return best;
}

// Working vertices anchor+1..n-1, relabelled to 0..m-1.
PathDpProblem anchored_cycle_problem(const Graph& g, int anchor) {
  PathDpProblem p;
  p.m = g.n() - 1 - anchor;
  const int shift = anchor + 1;
  for (int u = shift; u < g.n(); ++u) p.out.push_back(g.neighbors(u) >> shift);
  p.start = shift >= 64 ? 0 : g.neighbors(anchor) >> shift;
  p.close = p.start;
  return p;
}

void check_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap) {
    throw CapExceeded(std::string(what) + " limited to " + std::to_string(cap) + " vertices, got " +
                      std::to_string(g.n()));
  }
  if (g.n() - 1 > simd::kMaxWorkingVertices) {
    throw CapExceeded(std::string(what) + ": subset DP supports at most " +
                      std::to_string(simd::kMaxWorkingVertices + 1) + " vertices");
  }
}

}  // namespace

BigCount CycleSpectrum::total() const {
  BigCount t = 0;
  for (const auto& [r, c] : counts) t += c;
  return t;
}

BigCount CycleSpectrum::at(int r) const {
  auto it = counts.find(r);
  return it == counts.end() ? BigCount(0) : it->second;
}

CycleSpectrum empty_spectrum(int n) {
  CycleSpectrum s;
  s.n = n;
  for (int r = 3; r <= n; ++r) s.counts[r] = 0;
  return s;
}

CycleSpectrum cycle_spectrum(const Graph& g, const CountLimits& limits) {
  check_cap(g, limits.max_cycle_vertices, "cycle counting");
  const int n = g.n();
  CycleSpectrum spectrum = empty_spectrum(n);
  const BigCount bound = directed_cycle_bound(n);
  // Each cycle is counted from its lowest vertex, once per orientation.
  std::vector<BigCount> directed(static_cast<std::size_t>(n) + 1, 0);
  for (int anchor = 0; anchor + 2 < n; ++anchor) {
    const PathDpProblem problem = anchored_cycle_problem(g, anchor);
    if (std::popcount(problem.start) < 2) continue;
    const auto totals = exact_totals(problem, limits.isa, bound);
    for (std::size_t size = 2; size < totals.size(); ++size) directed[size + 1] += totals[size];
  }
  for (int r = 3; r <= n; ++r) {
    if (!mpz_even_p(directed[r].get_mpz_t())) throw std::logic_error("cycle DP produced an odd directed count");
    spectrum.counts[r] = directed[r] / 2;
  }
  return spectrum;
}

BigCount count_cycles(const Graph& g, const CountLimits& limits) { return cycle_spectrum(g, limits).total(); }

BigCount count_hamilton(const Graph& g, const CountLimits& limits) {
  check_cap(g, limits.max_cycle_vertices, "Hamilton cycle counting");
  const int n = g.n();
  if (n < 3) return 0;
  // A Hamilton cycle contains vertex 0, so only that anchor contributes.
  const PathDpProblem problem = anchored_cycle_problem(g, 0);
  const auto totals = exact_totals(problem, limits.isa, directed_cycle_bound(n));
  return totals[static_cast<std::size_t>(n) - 1] / 2;
}

BigCount count_paths(const Graph& g, int x, int y, const CountLimits& limits) {
  if (x == y) throw std::invalid_argument("count_paths requires distinct endpoints");
  if (x < 0 || y < 0 || x >= g.n() || y >= g.n()) throw std::out_of_range("count_paths: vertex out of range");
  check_cap(g, limits.max_path_vertices, "path counting");
  const int n = g.n();
  std::vector<int> index(static_cast<std::size_t>(n), -1);
  int m = 0;
  for (int v = 0; v < n; ++v) {
    if (v != x) index[v] = m++;
  }
  auto compress = [&](VertexMask mask) {
    std::uint64_t out = 0;
    for (VertexMask r = mask & ~(VertexMask{1} << x); r; r &= r - 1) out |= std::uint64_t{1} << index[std::countr_zero(r)];
    return out;
  };
  PathDpProblem p;
  p.m = m;
  for (int v = 0; v < n; ++v) {
    if (v == x) continue;
    // Paths stop once they reach y.
    p.out.push_back(v == y ? 0 : compress(g.neighbors(v)));
  }
  p.start = compress(g.neighbors(x));
  p.close = std::uint64_t{1} << index[y];
  BigCount bound = 0;
  for (int j = 0; j <= n - 2; ++j) bound += falling_factorial(n - 2, static_cast<unsigned>(j));
  const auto totals = exact_totals(p, limits.isa, bound);
  BigCount sum = 0;
  for (const auto& t : totals) sum += t;
  return sum;
}

RegularIrregularCycles count_regular_and_irregular_cycles(const Graph& g, const PartitionInfo& p,
                                                          const CountLimits& limits) {
  if (static_cast<int>(p.assignment.size()) != g.n()) {
    throw std::invalid_argument("partition assignment does not cover the graph");
  }
  const PartitionInfo expected = partition_from_assignment(g, p.k, p.assignment);
  if (expected.irregular_edges != p.irregular_edges || expected.regular_edges != p.regular_edges) {
    throw std::invalid_argument("partition edge lists are inconsistent with the graph");
  }
  const BigCount total = count_cycles(g, limits);
  const BigCount regular = count_cycles(remove_edges(g, p.irregular_edges), limits);
  return {regular, total - regular};
}

std::string spectrum_to_csv(const CycleSpectrum& s) {
  std::ostringstream os;
  os << "r,count\n";
  for (const auto& [r, c] : s.counts) os << r << ',' << to_decimal(c) << '\n';
  return os.str();
}

std::string spectrum_to_json(const CycleSpectrum& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [r, c] : s.counts) {
    os << (first ? "" : ", ") << '"' << r << "\": \"" << to_decimal(c) << '"';
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace cyclex
