#include "cyclex/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cyclex/codes.hpp"
#include "cyclex/cycle_count.hpp"
#include "cyclex/error.hpp"

namespace cyclex {

namespace {

// t_k(t), reading T_k(t) as K_t when t <= k.
long long turan_value(long long t, long long k) {
  if (t <= 0) return 0;
  if (t <= k) return t * (t - 1) / 2;
  return turan_edges(t, k);
}

std::string exact_string(const ExactProb& q) {
  if (q.get_den() == 1) return to_decimal(q.get_num());
  return to_fraction_string(q);
}

Real log_of(const ExactProb& q) {
  if (q == 0) {
    Real out;
    mpfr_set_inf(out.get(), -1);
    return out;
  }
  return log(q);
}

Real real_of(const ExactProb& q, Round r) { return Real(q, r); }

ExactProb power(const ExactProb& base, int e) {
  ExactProb out = 1;
  for (int j = 0; j < e; ++j) out *= base;
  return out;
}

// Fills in holds/decided for lhs <= q * e^x, with x and q >= 0 exact.
void compare_against_exp(BoundReport& rep, const ExactProb& lhs, const ExactProb& q, const ExactProb& x) {
  const Real lower = mul(real_of(q, Round::down), exp(Real(x, Round::down), Round::down), Round::down);
  const Real upper = mul(real_of(q, Round::up), exp(Real(x, Round::up), Round::up), Round::up);
  rep.holds = compare(lower, lhs) >= 0;
  rep.decided = rep.holds || compare(upper, lhs) < 0;
  const Real nearest = mul(real_of(q, Round::nearest), exp(Real(x, Round::nearest)));
  rep.lhs = exact_string(lhs);
  rep.rhs = nearest.to_string(30);
  rep.lhs_log = log_of(lhs);
  rep.rhs_log = q == 0 ? log_of(q) : add(log(q), Real(x, Round::nearest));
  if (q != 0) rep.ratio = div(Real(lhs, Round::nearest), nearest).to_double();
}

std::vector<long long> spread_ascending(long long total, int slots) {
  std::vector<long long> out(static_cast<std::size_t>(slots), 0);
  if (slots <= 0) return out;
  const long long q = total / slots;
  const long long rem = total % slots;
  for (int s = 0; s < slots; ++s) out[static_cast<std::size_t>(s)] = q + (s >= slots - rem ? 1 : 0);
  return out;
}

BigCount product_of(const std::vector<long long>& r) {
  BigCount p = 1;
  for (long long x : r) p *= static_cast<long>(std::max<long long>(x, 1));
  return p;
}

std::string sequence_string(const std::vector<long long>& r) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i];
  os << ')';
  return os.str();
}

BigCount hamilton_turan(int n, int k) { return hamilton_multipartite_weak(turan_content(n, k)); }

}  // namespace

std::vector<int> turan_content(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("turan_content needs n, k >= 1");
  const int parts = std::min(n, k);
  std::vector<int> c(static_cast<std::size_t>(parts), n / parts);
  for (int j = 0; j < n % parts; ++j) ++c[static_cast<std::size_t>(j)];
  return c;
}

// ---------------------------------------------------------------------------
// Reports

std::string report_to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  if (r.n) j["n"] = *r.n;
  if (r.m) j["m"] = *r.m;
  if (r.k) j["k"] = *r.k;
  if (r.i) j["i"] = *r.i;
  if (r.eps) j["eps"] = *r.eps;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  const auto finite_or_null = [](const Real& v) -> nlohmann::ordered_json {
    if (!v.is_finite()) return nullptr;
    return v.to_double();
  };
  j["lhs_log"] = finite_or_null(r.lhs_log);
  j["rhs_log"] = finite_or_null(r.rhs_log);
  j["holds"] = r.holds;
  j["decided"] = r.decided;
  if (r.report_only) j["report_only"] = true;
  if (r.ratio) j["ratio"] = *r.ratio;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string report_csv_header() { return "name,n,m,k,i,lhs_log,rhs_log,holds"; }

std::string report_to_csv(const BoundReport& r) {
  std::ostringstream os;
  const auto opt = [&](const std::optional<int>& v) {
    if (v) os << *v;
    os << ',';
  };
  os << r.name << ',';
  opt(r.n);
  opt(r.m);
  opt(r.k);
  opt(r.i);
  os << r.lhs_log.to_string(17) << ',' << r.rhs_log.to_string(17) << ',' << (r.holds ? "true" : "false");
  return os.str();
}

// ---------------------------------------------------------------------------
// Extremal functions

ExtremalFunction ExtremalFunction::turan(int k, int max_t) {
  if (k < 1 || max_t < 0) throw std::invalid_argument("ExtremalFunction::turan needs k >= 1, max_t >= 0");
  std::vector<long long> v(static_cast<std::size_t>(max_t) + 1);
  for (int t = 0; t <= max_t; ++t) v[static_cast<std::size_t>(t)] = turan_value(t, k);
  return ExtremalFunction(std::move(v), Provenance::formula, "t_" + std::to_string(k) + "(t)");
}

ExtremalFunction ExtremalFunction::from_table(std::vector<long long> values, Provenance provenance,
                                              std::string description) {
  if (values.empty()) throw std::invalid_argument("extremal table is empty");
  for (std::size_t t = 0; t < values.size(); ++t) {
    const long long cap = static_cast<long long>(t) * (static_cast<long long>(t) - 1) / 2;
    if (values[t] < 0 || values[t] > cap) throw std::invalid_argument("extremal table value outside [0, C(t,2)]");
    if (t > 0 && values[t] < values[t - 1]) throw std::invalid_argument("extremal table must be nondecreasing");
  }
  return ExtremalFunction(std::move(values), provenance, std::move(description));
}

long long ExtremalFunction::operator()(int t) const {
  if (t < 0 || t > max_t()) throw std::out_of_range("extremal table has no entry for t = " + std::to_string(t));
  return values_[static_cast<std::size_t>(t)];
}

std::string provenance_name(ExtremalFunction::Provenance p) {
  switch (p) {
    case ExtremalFunction::Provenance::formula:
      return "formula";
    case ExtremalFunction::Provenance::exhaustive:
      return "exhaustive";
    case ExtremalFunction::Provenance::user_supplied:
      return "user_supplied";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Closed-form bound expressions

Real lambda(int n, long long m, int k) {
  if (k < 2) throw std::domain_error("lambda requires k >= 2");
  if (n <= 3) throw std::domain_error("lambda requires n > 3");
  if (m < 0) throw std::domain_error("lambda requires m >= 0");
  const ExactProb x = ExactProb(2 * k, k - 1) * ExactProb(static_cast<long>(m)) / ExactProb(static_cast<long>(n - 3) * (n - 3));
  const ExactProb radicand = 1 - x;
  if (radicand < 0) throw std::domain_error("lambda: negative radicand (m too large for n, k)");
  return sub(Real(1), sqrt(Real(radicand, Round::nearest)));
}

Real easycor_bound_log(int n, long long m, int k) {
  const Real lam = lambda(n, m, k);
  if (mpfr_zero_p(lam.get())) throw std::domain_error("easycor bound diverges at lambda = 0");
  const Real nn(static_cast<long>(n));
  Real total = mul(nn, log(lam));
  total = add(total, mul(Real(static_cast<long>(n) + 2), log(nn)));
  total = add(total, mul(nn, log(Real(ExactProb(k - 1, k), Round::nearest))));
  total = add(total, div(Real(2L * k - 1), mul(Real(static_cast<long>(k) - 1), lam)));
  return sub(total, mul(lam, nn));
}

Real cyclecount_bound_log(int n, int k, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::domain_error("cyclecount bound requires 0 < eps < 1");
  if (n < 4) throw std::domain_error("cyclecount bound requires n >= 4");
  if (k < 2) throw std::domain_error("cyclecount bound requires k >= 2");
  const Real nn(static_cast<long>(n));
  Real total = mul(nn, log(Real(ExactProb(k - 1, k), Round::nearest)));
  total = add(total, mul(Real(static_cast<long>(n) + 3), log(nn)));
  total = add(total, mul(Real::from_double(eps), nn));
  total = add(total, sqrt(nn));
  return sub(total, nn);
}

// ---------------------------------------------------------------------------
// Path-product optimisers

PathBound path_bound_exhaustive(int n, long long m, const ExtremalFunction& ex) {
  if (n < 2) throw std::invalid_argument("path bound needs n >= 2");
  if (n > kMaxPathBoundVertices) {
    throw CapExceeded("exhaustive path bound limited to n <= " + std::to_string(kMaxPathBoundVertices));
  }
  if (ex.max_t() < n) throw std::invalid_argument("extremal table too short for n");
  if (m < 0) throw std::invalid_argument("path bound needs m >= 0");
  // limit[t]: cap on r_2 + ... + r_t.
  std::vector<long long> limit(static_cast<std::size_t>(n) + 1, 0);
  for (int t = 2; t <= n; ++t) limit[static_cast<std::size_t>(t)] = std::min<long long>(m, ex(t));
  const long long top = *std::max_element(limit.begin(), limit.end());
  const auto width = static_cast<std::size_t>(top) + 1;

  // best[t][s]: max product over r_t..r_n given r_2 + ... + r_{t-1} = s.
  std::vector<std::vector<BigCount>> best(static_cast<std::size_t>(n) + 2, std::vector<BigCount>(width, 0));
  std::vector<std::vector<long long>> choice(static_cast<std::size_t>(n) + 2, std::vector<long long>(width, -1));
  std::fill(best[static_cast<std::size_t>(n) + 1].begin(), best[static_cast<std::size_t>(n) + 1].end(), 1);
  for (int t = n; t >= 2; --t) {
    const long long cap = limit[static_cast<std::size_t>(t)];
    for (long long s = 0; s <= std::min(cap, top); ++s) {
      BigCount& b = best[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
      long long& arg = choice[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
      for (long long r = 0; s + r <= cap; ++r) {
        const BigCount& rest = best[static_cast<std::size_t>(t) + 1][static_cast<std::size_t>(s + r)];
        if (rest == 0) continue;  // infeasible continuation
        BigCount v = rest * static_cast<long>(std::max<long long>(r, 1));
        if (arg < 0 || v > b) {
          b = std::move(v);
          arg = r;
        }
      }
    }
  }
  PathBound out;
  out.value = best[2][0];
  long long s = 0;
  for (int t = 2; t <= n; ++t) {
    const long long r = choice[static_cast<std::size_t>(t)][static_cast<std::size_t>(s)];
    out.r.push_back(r);
    s += r;
  }
  return out;
}

PathBound path_bound_structured(int n, long long m, int k, int n0) {
  if (k < 2) throw std::invalid_argument("structured path bound needs k >= 2");
  if (n0 < 2 || n0 >= n) throw std::invalid_argument("structured path bound needs 2 <= n0 < n");
  if (m < 0) throw std::invalid_argument("structured path bound needs m >= 0");
  const auto tk = [k](long long t) { return turan_value(t, k); };
  const auto delta = [&](long long t) { return tk(t) - tk(t - 1); };
  PathBound out;
  const long long head_total = tk(n0);
  if (m < head_total) {
    out.r = spread_ascending(m, n0 - 1);
    out.r.resize(static_cast<std::size_t>(n) - 1, 0);
    out.truncated = true;
    out.value = product_of(out.r);
    return out;
  }
  out.r = spread_ascending(head_total, n0 - 1);
  int last = n0;
  while (last < n && tk(last + 1) + delta(last + 1) * (n - last - 1) <= m) ++last;
  if (m <= tk(n) - 10LL * n && last > n - 2) {
    throw std::logic_error("structured path bound: I <= n - 2 violated");
  }
  for (int i = n0 + 1; i <= last; ++i) out.r.push_back(delta(i));
  const auto tail = spread_ascending(m - tk(last), n - last);
  out.r.insert(out.r.end(), tail.begin(), tail.end());
  out.value = product_of(out.r);
  return out;
}

// ---------------------------------------------------------------------------
// Inequality checks

BoundReport check_recursion(int n, int k, int i) {
  if (k < 3) throw std::invalid_argument("recursion check requires k >= 3");
  if (i < 0 || n - i < 3) throw std::invalid_argument("recursion check requires i >= 0 and n - i >= 3");
  BoundReport rep;
  rep.name = "recursion";
  rep.n = n;
  rep.k = k;
  rep.i = i;
  const ExactProb lhs = ExactProb(falling_factorial(n - 1, static_cast<unsigned>(i))) *
                        power(ExactProb(k - 2, k), i) * ExactProb(hamilton_turan(n - i, k));
  const ExactProb rhs(hamilton_turan(n, k));
  rep.lhs = exact_string(lhs);
  rep.rhs = exact_string(rhs);
  rep.lhs_log = log_of(lhs);
  rep.rhs_log = log_of(rhs);
  rep.holds = lhs <= rhs;
  if (rhs != 0) rep.ratio = div(Real(lhs, Round::nearest), Real(rhs, Round::nearest)).to_double();
  return rep;
}

BoundReport check_secondcount(int n, int k) {
  if (k < 3) throw std::invalid_argument("secondcount check requires k >= 3");
  if (n < 3 || n > kMaxAnalyticSpectrumVertices) throw std::invalid_argument("secondcount check requires 3 <= n <= 40");
  BoundReport rep;
  rep.name = "secondcount";
  rep.n = n;
  rep.k = k;
  const ClassVector c(turan_content(n, k));
  const ExactProb lhs(cycle_spectrum_multipartite(c).total());
  compare_against_exp(rep, lhs, ExactProb(hamilton_multipartite(c)), ExactProb(2 * k, k - 2));
  return rep;
}

BoundReport check_second2count(int n, int i) {
  if (i < 0 || n - i < 4) throw std::invalid_argument("second2count check requires i >= 0 and n - i >= 4");
  BoundReport rep;
  rep.name = "second2count";
  rep.n = n;
  rep.k = 2;
  rep.i = i;
  const ExactProb lhs(bipartite_cycle_counts(n - i).total());
  const ExactProb longest(bipartite_cycle_counts(n).at(2 * (n / 2)));
  const ExactProb q = 2 * power(ExactProb(4, n), i) * longest;
  compare_against_exp(rep, lhs, q, ExactProb(1));
  return rep;
}

BoundReport kkmain_report(int n, int k) {
  if (n < 4) throw std::invalid_argument("kkmain report requires n >= 4");
  if (k < 2) throw std::invalid_argument("kkmain report requires k >= 2");
  BoundReport rep;
  rep.name = "kkmain";
  rep.n = n;
  rep.k = k;
  rep.report_only = true;
  const Real nn(static_cast<long>(n));
  BigCount numerator;
  Real den_log;
  if (k == 2) {
    numerator = bipartite_cycle_counts(n).at(2 * (n / 2));
    den_log = add(log(pi()), sub(mul(nn, log(nn)), mul(nn, log(Real(2L)))));
    den_log = sub(den_log, nn);
    rep.note = "pi 2^-n n^n e^-n";
  } else {
    numerator = hamilton_turan(n, k);
    den_log = mul(nn, log(Real(ExactProb(k - 1, k), Round::nearest)));
    den_log = add(den_log, mul(sub(nn, Real(ExactProb(1, 2), Round::nearest)), log(nn)));
    den_log = sub(den_log, nn);
    rep.note = "((k-1)/k)^n n^(n-1/2) e^-n";
  }
  rep.lhs = to_decimal(numerator);
  rep.lhs_log = log_of(ExactProb(numerator));
  rep.rhs_log = den_log;
  rep.rhs = exp(den_log).to_string(30);
  rep.ratio = exp(sub(rep.lhs_log, den_log)).to_double();
  rep.holds = compare(rep.lhs_log, den_log) <= 0;
  return rep;
}

BoundReport check_path_bounds(int n, long long m, int k, int n0) {
  BoundReport rep;
  rep.name = "ref3count";
  rep.n = n;
  rep.m = static_cast<int>(m);
  rep.k = k;
  const PathBound exhaustive = path_bound_exhaustive(n, m, ExtremalFunction::turan(k, n));
  const PathBound structured = path_bound_structured(n, m, k, n0);
  rep.lhs = to_decimal(structured.value);
  rep.rhs = to_decimal(exhaustive.value);
  rep.lhs_log = log_of(ExactProb(structured.value));
  rep.rhs_log = log_of(ExactProb(exhaustive.value));
  rep.holds = structured.value <= exhaustive.value;
  rep.note = "n0=" + std::to_string(n0) + " structured=" + sequence_string(structured.r) +
             (structured.truncated ? " (truncated)" : "") + " exhaustive=" + sequence_string(exhaustive.r);
  return rep;
}

BoundReport check_path_count_bound(const Graph& g, int x, int y, const ExtremalFunction& ex) {
  BoundReport rep;
  rep.name = "ref3count-graph";
  rep.n = g.n();
  rep.m = g.edge_count();
  const BigCount paths = count_paths(g, x, y);
  const PathBound bound = path_bound_exhaustive(g.n(), g.edge_count(), ex);
  rep.lhs = to_decimal(paths);
  rep.rhs = to_decimal(bound.value);
  rep.lhs_log = log_of(ExactProb(paths));
  rep.rhs_log = log_of(ExactProb(bound.value));
  rep.holds = paths <= bound.value;
  rep.note = "x=" + std::to_string(x) + " y=" + std::to_string(y);
  return rep;
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<BoundReport> sweep_recursion(int n_max, const std::vector<int>& ks, int i_max) {
  std::vector<BoundReport> out;
  for (int k : ks) {
    for (int n = 3; n <= n_max; ++n) {
      for (int i = 0; i <= std::min(i_max, n - 3); ++i) out.push_back(check_recursion(n, k, i));
    }
  }
  return out;
}

std::vector<BoundReport> sweep_secondcount(int n_max, const std::vector<int>& ks) {
  std::vector<BoundReport> out;
  for (int k : ks) {
    for (int n = 3; n <= n_max; ++n) out.push_back(check_secondcount(n, k));
  }
  return out;
}

std::vector<BoundReport> sweep_second2count(int n_max, int i_max) {
  std::vector<BoundReport> out;
  for (int n = 4; n <= n_max; ++n) {
    for (int i = 0; i <= std::min(i_max, n - 4); ++i) out.push_back(check_second2count(n, i));
  }
  return out;
}

std::vector<BoundReport> sweep_kkmain(int n_min, int n_max, int k) {
  std::vector<BoundReport> out;
  for (int n = std::max(n_min, 4); n <= n_max; ++n) out.push_back(kkmain_report(n, k));
  return out;
}

std::vector<BoundReport> sweep_path_bounds(int n_max, int k, int default_n0) {
  std::vector<BoundReport> out;
  for (int n = 3; n <= n_max; ++n) {
    const int n0 = std::min(default_n0, n - 1);
    for (long long m = 0; m <= turan_value(n, k); ++m) out.push_back(check_path_bounds(n, m, k, n0));
  }
  return out;
}

}  // namespace cyclex
