#include "cyclex/extremal.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cyclex/canonical.hpp"
#include "cyclex/codes.hpp"
#include "cyclex/cycle_count.hpp"
#include "cyclex/error.hpp"
#include "cyclex/graph_io.hpp"
#include "cyclex/structure.hpp"

namespace cyclex {

namespace {

using json = nlohmann::ordered_json;

std::string vector_string(std::span<const int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string hex_of(const std::string& s) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char ch : s) {
    out.push_back(digits[ch >> 4]);
    out.push_back(digits[ch & 15]);
  }
  return out;
}

Graph extend(const Graph& g, VertexMask neighbours) {
  std::vector<VertexMask> rows(g.rows().begin(), g.rows().end());
  const int v = g.n();
  for (VertexMask r = neighbours; r; r &= r - 1) rows[static_cast<std::size_t>(std::countr_zero(r))] |= VertexMask{1} << v;
  rows.push_back(neighbours);
  return Graph::from_rows(std::move(rows));
}

bool spectrum_dominated(const CycleSpectrum& small, const CycleSpectrum& big) {
  for (const auto& [r, c] : small.counts) {
    if (c > big.at(r)) return false;
  }
  return true;
}

void record(VerificationReport& rep, bool ok, json line) {
  ++rep.checks;
  if (!ok) ++rep.failures;
  line["ok"] = ok;
  rep.lines.push_back(line.dump());
}

}  // namespace

std::vector<Graph> enumerate_graphs(int n, const std::optional<Graph>& forbid) {
  if (n < 1) throw std::invalid_argument("enumerate_graphs needs n >= 1");
  if (n > kMaxSearchVertices) {
    throw CapExceeded("graph enumeration limited to " + std::to_string(kMaxSearchVertices) + " vertices");
  }
  const auto allowed = [&](const Graph& g) { return !forbid || !contains_subgraph(g, *forbid); };
  std::map<std::string, Graph> level;
  if (const Graph one = empty_graph(1); allowed(one)) level.emplace(to_graph6(one), one);
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> next;
    for (const auto& [code, g] : level) {
      const VertexMask limit = VertexMask{1} << g.n();
      for (VertexMask nbrs = 0; nbrs < limit; ++nbrs) {
        Graph candidate = extend(g, nbrs);
        if (!allowed(candidate)) continue;
        Graph canon = canonical_form(candidate);
        std::string key = to_graph6(canon);
        next.try_emplace(std::move(key), std::move(canon));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [code, g] : level) out.push_back(std::move(g));
  return out;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("CYCLEX_CACHE_DIR"); env && *env) return env;
  return ".cyclex-cache";
}

std::string search_result_to_json(const SearchResult& r) {
  json j;
  j["n"] = r.n;
  j["forbidden"] = r.forbidden;
  j["max_cycles"] = to_decimal(r.max_cycles);
  j["extremal_graphs"] = r.extremal_graphs;
  j["unique"] = r.unique;
  j["graphs_examined"] = r.graphs_examined;
  j["elapsed"] = r.elapsed;
  if (r.turan_k) j["turan_k"] = *r.turan_k;
  if (r.turan_is_extremal) j["turan_is_extremal"] = *r.turan_is_extremal;
  if (r.has_critical_edge) j["has_critical_edge"] = *r.has_critical_edge;
  return j.dump();
}

SearchResult search_result_from_json(const std::string& text) {
  const json j = json::parse(text);
  SearchResult r;
  r.n = j.at("n").get<int>();
  r.forbidden = j.at("forbidden").get<std::string>();
  r.max_cycles = BigCount(j.at("max_cycles").get<std::string>());
  r.extremal_graphs = j.at("extremal_graphs").get<std::vector<std::string>>();
  r.unique = j.at("unique").get<bool>();
  r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
  r.elapsed = j.at("elapsed").get<double>();
  if (j.contains("turan_k")) r.turan_k = j["turan_k"].get<int>();
  if (j.contains("turan_is_extremal")) r.turan_is_extremal = j["turan_is_extremal"].get<bool>();
  if (j.contains("has_critical_edge")) r.has_critical_edge = j["has_critical_edge"].get<bool>();
  return r;
}

SearchOutcome max_cycles_H_free(int n, const Graph& forbid, const SearchOptions& options) {
  if (n > kMaxSearchVertices) {
    throw CapExceeded("extremal search limited to " + std::to_string(kMaxSearchVertices) + " vertices");
  }
  const std::string h_code = canonical_graph6(forbid);
  std::filesystem::path cache_file;
  if (!options.cache_dir.empty()) {
    cache_file = options.cache_dir / ("search-n" + std::to_string(n) + "-h" + hex_of(h_code) + ".json");
    if (std::ifstream in(cache_file); in) {
      std::stringstream buffer;
      buffer << in.rdbuf();
      try {
        return {search_result_from_json(buffer.str()), true};
      } catch (const std::exception&) {
        // Unreadable cache entry: recompute and overwrite.
      }
    }
  }

  const auto started = std::chrono::steady_clock::now();
  SearchResult r;
  r.n = n;
  r.forbidden = h_code;
  bool any = false;
  for (const Graph& g : enumerate_graphs(n, forbid)) {
    ++r.graphs_examined;
    const BigCount c = count_cycles(g);
    if (!any || c > r.max_cycles) {
      r.max_cycles = c;
      r.extremal_graphs.clear();
      any = true;
    }
    if (c == r.max_cycles) r.extremal_graphs.push_back(to_graph6(g));
  }
  if (!any) throw std::invalid_argument("no graph on " + std::to_string(n) + " vertices avoids the forbidden graph");
  std::sort(r.extremal_graphs.begin(), r.extremal_graphs.end());
  r.unique = r.extremal_graphs.size() == 1;
  if (forbid.n() <= kMaxColoringVertices) {
    const int chi = chromatic_number(forbid);
    r.has_critical_edge = has_critical_edge(forbid);
    if (chi >= 3 && chi - 1 <= n) {
      r.turan_k = chi - 1;
      const std::string turan = canonical_graph6(turan_graph(n, chi - 1));
      r.turan_is_extremal = std::binary_search(r.extremal_graphs.begin(), r.extremal_graphs.end(), turan);
    }
  }
  r.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (!cache_file.empty()) {
    std::filesystem::create_directories(options.cache_dir);
    std::ofstream out(cache_file);
    out << search_result_to_json(r) << '\n';
  }
  return {r, false};
}

ExtremalFunction extremal_function_exhaustive(const Graph& forbid, int max_t) {
  if (max_t > kMaxSearchVertices) {
    throw CapExceeded("exhaustive extremal numbers limited to t <= " + std::to_string(kMaxSearchVertices));
  }
  std::vector<long long> values(static_cast<std::size_t>(max_t) + 1, 0);
  for (int t = 1; t <= max_t; ++t) {
    long long best = 0;
    for (const Graph& g : enumerate_graphs(t, forbid)) best = std::max<long long>(best, g.edge_count());
    values[static_cast<std::size_t>(t)] = best;
  }
  return ExtremalFunction::from_table(std::move(values), ExtremalFunction::Provenance::exhaustive,
                                      "ex(t; " + to_graph6(forbid) + ")");
}

std::string VerificationReport::summary_json() const {
  json j;
  j["suite"] = name;
  j["n"] = n;
  j["k"] = k;
  j["checks"] = checks;
  j["failures"] = failures;
  j["vacuous"] = vacuous;
  if (report_only) j["report_only"] = true;
  j["passed"] = passed();
  if (!note.empty()) j["note"] = note;
  return j.dump();
}

VerificationReport verify_turanbest(int n, int k, int sample_subgraphs, std::uint64_t seed) {
  if (n > kMaxSearchVertices) throw CapExceeded("turanbest sweep limited to " + std::to_string(kMaxSearchVertices) + " vertices");
  if (n < 1 || k < 1) throw std::invalid_argument("turanbest needs n, k >= 1");
  VerificationReport rep;
  rep.name = "turanbest";
  rep.n = n;
  rep.k = k;
  const std::vector<int> balanced = turan_content(n, k);
  const CycleSpectrum best = cycle_spectrum_multipartite(ClassVector(balanced));
  const BigCount best_total = best.total();
  const bool strict = n >= 5;
  if (!strict) rep.note = "strict dominance needs n >= 5; only spectrum dominance checked";
  std::mt19937_64 rng(seed);

  for (int parts = 1; parts <= std::min(k, n); ++parts) {
    for (const auto& c : compositions(n, parts)) {
      const ClassVector cv(c);
      const CycleSpectrum spec = cycle_spectrum_multipartite(cv);
      record(rep, spectrum_dominated(spec, best),
             json{{"check", "spectrum"}, {"c", vector_string(c)}, {"total", to_decimal(spec.total())}});
      std::vector<int> sorted = c;
      std::sort(sorted.rbegin(), sorted.rend());
      if (strict && sorted != balanced) {
        record(rep, spec.total() < best_total,
               json{{"check", "strict"}, {"c", vector_string(c)}, {"total", to_decimal(spec.total())},
                    {"turan_total", to_decimal(best_total)}});
      }
      if (sample_subgraphs <= 0) continue;
      // Proper spanning subgraphs: drop each edge with a per-sample rate,
      // forcing at least one removal.
      const Graph kc = complete_multipartite(cv);
      const std::vector<Edge> edges = kc.edges();
      if (edges.empty()) continue;
      std::uint64_t bad = 0;
      BigCount worst = 0;
      for (int s = 0; s < sample_subgraphs; ++s) {
        const double rate = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::bernoulli_distribution drop(rate);
        std::vector<Edge> removed;
        for (const Edge& e : edges) {
          if (drop(rng)) removed.push_back(e);
        }
        if (removed.empty()) {
          removed.push_back(edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)]);
        }
        const CycleSpectrum sub = cycle_spectrum(remove_edges(kc, removed));
        const bool ok = spectrum_dominated(sub, best) && (!strict || sub.total() < best_total);
        if (!ok) ++bad;
        if (sub.total() > worst) worst = sub.total();
      }
      rep.checks += static_cast<std::uint64_t>(sample_subgraphs);
      rep.failures += bad;
      rep.lines.push_back(json{{"check", "sampled"}, {"c", vector_string(c)}, {"samples", sample_subgraphs},
                               {"failures", bad}, {"max_total", to_decimal(worst)}, {"ok", bad == 0}}
                              .dump());
    }
  }
  return rep;
}

VerificationReport verify_major(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("major needs n, k >= 1");
  VerificationReport rep;
  rep.name = "major";
  rep.n = n;
  rep.k = k;
  if (k == 1) {
    rep.vacuous = 1;
    rep.note = "single letter: every probability is zero for n >= 2";
    return rep;
  }
  std::vector<int> balanced = turan_content(n, k);
  balanced.resize(static_cast<std::size_t>(k), 0);
  const ExactProb top = prob_Q_given_P_weak(balanced);
  for (const auto& c : weak_compositions(n, k)) {
    const ExactProb p = prob_Q_given_P_weak(c);
    record(rep, top >= p,
           json{{"c", vector_string(c)}, {"p", to_fraction_string(p)}, {"balanced", to_fraction_string(top)}});
  }
  return rep;
}

VerificationReport verify_stepcount(int n, int k) {
  if (k < 3) throw std::invalid_argument("stepcount needs k >= 3");
  VerificationReport rep;
  rep.name = "stepcount";
  rep.n = n;
  rep.k = k;
  for (const auto& c : weak_compositions(n, k)) {
    if (c[0] < 1) continue;
    const ExactProb h = ExactProb(hv_weak(c, 2));
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (i == j || c[i] == 0 || c[i] > c[j] - 2) continue;
        std::vector<int> moved = c;
        ++moved[i];
        --moved[j];
        const ExactProb factor(BigCount((c[i] + 1) * c[j]), BigCount(c[i] * (c[j] - 1)));
        const ExactProb rhs = factor * ExactProb(hv_weak(moved, 2));
        record(rep, h <= rhs,
               json{{"c", vector_string(c)}, {"i", i + 1}, {"j", j + 1}, {"lhs", to_fraction_string(h)},
                    {"rhs", to_fraction_string(rhs)}});
      }
    }
  }
  return rep;
}

VerificationReport verify_close(int n, int k) {
  if (k < 3) throw std::invalid_argument("close needs k >= 3");
  if (n < k) throw std::invalid_argument("close needs n >= k");
  VerificationReport rep;
  rep.name = "close";
  rep.n = n;
  rep.k = k;
  const int q = n / k;
  const int big = n % k;  // classes of size q + 1
  for (const auto& c : compositions(n, k)) {
    // Give the `big` largest classes of c the size q + 1; the order must not
    // split a run of equal sizes and must keep strict order strict.
    std::vector<int> order(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return c[a] > c[b]; });
    std::vector<int> b(static_cast<std::size_t>(k), q);
    for (int r = 0; r < big; ++r) b[static_cast<std::size_t>(order[static_cast<std::size_t>(r)])] = q + 1;
    bool same_order = true;
    for (int x = 0; x < k && same_order; ++x) {
      for (int y = 0; y < k; ++y) {
        if ((b[x] >= b[y]) != (c[x] >= c[y])) {
          same_order = false;
          break;
        }
      }
    }
    if (!same_order) {
      ++rep.vacuous;
      continue;
    }
    ExactProb factor = 1;
    for (int i = 0; i < k; ++i) factor *= c[i] >= b[i] ? ExactProb(c[i], b[i]) : ExactProb(b[i], c[i]);
    const ExactProb lhs(hv_weak(c, 2));
    const ExactProb rhs = ExactProb(hv_weak(b, 2)) * factor;
    record(rep, lhs <= rhs,
           json{{"c", vector_string(c)}, {"b", vector_string(b)}, {"lhs", to_fraction_string(lhs)},
                {"rhs", to_fraction_string(rhs)}});
  }
  return rep;
}

VerificationReport verify_turancount(int n, int k) {
  if (k < 3) throw std::invalid_argument("turancount needs k >= 3");
  if (n < k || n > 20) throw std::invalid_argument("turancount needs k <= n <= 20");
  VerificationReport rep;
  rep.name = "turancount";
  rep.n = n;
  rep.k = k;
  rep.report_only = true;
  const std::vector<int> content = turan_content(n, k);
  const ExactProb threshold = ExactProb(2, 3 * k) * ExactProb(hamilton_multipartite_weak(content));
  for (int root = 1; root <= k; ++root) {
    for (int target = 1; target <= k; ++target) {
      if (root == target) continue;
      const ExactProb value(rooted_hamilton_permutations(content, root, target));
      record(rep, value >= threshold,
             json{{"root_class", root}, {"target_class", target}, {"root_size", content[root - 1]},
                  {"target_size", content[target - 1]}, {"hv", to_fraction_string(value)},
                  {"threshold", to_fraction_string(threshold)}});
    }
  }
  return rep;
}

}  // namespace cyclex
