// cyclex: command-line front end for the counting, analytic, bound, search
// and verification routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli_support.hpp"
#include "cyclex/bounds.hpp"
#include "cyclex/canonical.hpp"
#include "cyclex/codes.hpp"
#include "cyclex/cycle_count.hpp"
#include "cyclex/error.hpp"
#include "cyclex/extremal.hpp"
#include "cyclex/graph_io.hpp"
#include "cyclex/random_codes.hpp"
#include "cyclex/structure.hpp"

using namespace cyclex;
using cli::Format;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "table";
  std::uint64_t seed = 42;
  std::uint64_t samples = 0;  // 0: per-command default
  int workers = 1;
  int max_cycle_vertices = 24;
  int max_path_vertices = 22;
  std::string cache_dir;
  bool no_cache = false;

  cli::GraphInput graph;
  std::string paths;       // "x,y"
  std::string parts;
  std::string rooted;      // "i,j"

  std::string suite;
  int n = 0, n_min = 0, n_max = 0, k = 0, k_max = 0, i_max = -1, n0 = 5;
  long long m = -1;
  double eps = 0.1;
  std::string kind;
  std::string forbid;
  std::string ex_table;
  std::string event = "Q";
  std::string content;
};

Format format_of(const Options& o) { return cli::parse_format(o.format); }

CountLimits limits_of(const Options& o) {
  CountLimits l;
  l.max_cycle_vertices = o.max_cycle_vertices;
  l.max_path_vertices = o.max_path_vertices;
  return l;
}

json spectrum_json(const CycleSpectrum& s) {
  json j = json::object();
  for (const auto& [r, c] : s.counts) j[std::to_string(r)] = to_decimal(c);
  return j;
}

// ---------------------------------------------------------------------------
// count

int run_count(const Options& o) {
  const Format fmt = format_of(o);
  const CountLimits limits = limits_of(o);
  std::vector<int> endpoints;
  if (!o.paths.empty()) {
    endpoints = cli::parse_int_list(o.paths);
    if (endpoints.size() != 2) throw std::invalid_argument("--paths takes x,y");
  }
  if (fmt == Format::csv) std::cout << "graph6,r,count\n";
  for (const Graph& g : cli::load_graphs(o.graph)) {
    const CycleSpectrum s = cycle_spectrum(g, limits);
    const BigCount hamilton = s.at(g.n());
    std::optional<BigCount> paths;
    if (!endpoints.empty()) paths = count_paths(g, endpoints[0], endpoints[1], limits);
    const std::string g6 = to_graph6(g);
    switch (fmt) {
      case Format::json: {
        json j;
        j["graph6"] = g6;
        j["n"] = g.n();
        j["edges"] = g.edge_count();
        j["spectrum"] = spectrum_json(s);
        j["total"] = to_decimal(s.total());
        j["hamilton"] = to_decimal(hamilton);
        if (paths) j["paths"] = {{"x", endpoints[0]}, {"y", endpoints[1]}, {"count", to_decimal(*paths)}};
        std::cout << j.dump() << '\n';
        break;
      }
      case Format::csv:
        for (const auto& [r, c] : s.counts) std::cout << g6 << ',' << r << ',' << to_decimal(c) << '\n';
        break;
      case Format::table:
        std::cout << "graph6   " << g6 << "\nvertices " << g.n() << "\nedges    " << g.edge_count() << '\n';
        std::cout << "length   cycles\n";
        for (const auto& [r, c] : s.counts) std::cout << std::setw(6) << r << "   " << to_decimal(c) << '\n';
        std::cout << "total    " << to_decimal(s.total()) << "\nhamilton " << to_decimal(hamilton) << '\n';
        if (paths) std::cout << "paths " << endpoints[0] << '-' << endpoints[1] << "  " << to_decimal(*paths) << '\n';
        break;
    }
  }
  return cli::kExitOk;
}

// ---------------------------------------------------------------------------
// analytic

int run_analytic(const Options& o) {
  const ClassVector c(cli::parse_int_list(o.parts));
  const Format fmt = format_of(o);
  const BigCount codes = code_cycle_count({c, std::nullopt});
  const BigCount h = hamilton_multipartite(c);
  const ExactProb prob = prob_Q_given_P(c);
  std::optional<CycleSpectrum> spectrum;
  if (c.n() <= kMaxAnalyticSpectrumVertices) spectrum = cycle_spectrum_multipartite(c);
  std::optional<std::pair<int, int>> root;
  std::optional<BigCount> rooted_codes;
  if (!o.rooted.empty()) {
    const auto r = cli::parse_int_list(o.rooted);
    if (r.size() != 2) throw std::invalid_argument("--rooted takes i,j");
    root = std::pair{r[0], r[1]};
    rooted_codes = code_cycle_count({c, root});
  }
  std::vector<std::pair<int, BigCount>> hv_values;
  for (int j = 2; j <= c.k(); ++j) hv_values.emplace_back(j, hv(c, j));

  if (fmt == Format::json) {
    json j;
    j["c"] = c.to_string();
    j["h"] = to_decimal(h);
    j["codes"] = to_decimal(codes);
    j["prob_Q_given_P"] = to_fraction_string(prob);
    if (spectrum) {
      j["spectrum"] = spectrum_json(*spectrum);
      j["total"] = to_decimal(spectrum->total());
    }
    json hvj = json::object();
    for (const auto& [cls, v] : hv_values) hvj[std::to_string(cls)] = to_decimal(v);
    j["hv"] = hvj;
    if (rooted_codes) {
      j["rooted"] = {{"i", root->first}, {"j", root->second}, {"codes", to_decimal(*rooted_codes)}};
    }
    std::cout << j.dump() << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "r,count\n";
    if (spectrum) {
      for (const auto& [r, cnt] : spectrum->counts) std::cout << r << ',' << to_decimal(cnt) << '\n';
    }
  } else {
    std::cout << "c              " << c.to_string() << "\ncodes in Q∩P_c " << to_decimal(codes)
              << "\nP[Q | P_c]     " << to_fraction_string(prob) << "\nh(K_c)         " << to_decimal(h) << '\n';
    for (const auto& [cls, v] : hv_values) std::cout << "hv(c," << cls << ")        " << to_decimal(v) << '\n';
    if (rooted_codes) {
      std::cout << "rooted " << root->first << ',' << root->second << "     " << to_decimal(*rooted_codes) << '\n';
    }
    if (spectrum) {
      std::cout << "length   cycles\n";
      for (const auto& [r, cnt] : spectrum->counts) std::cout << std::setw(6) << r << "   " << to_decimal(cnt) << '\n';
      std::cout << "total    " << to_decimal(spectrum->total()) << '\n';
    }
  }
  return cli::kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct SuiteOutcome {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::uint64_t undecided = 0;
  bool report_only = false;
};

void emit_report(const VerificationReport& rep, Format fmt, SuiteOutcome& out) {
  out.checks += rep.checks;
  if (!rep.report_only) out.failures += rep.failures;
  if (fmt == Format::json) {
    for (const std::string& line : rep.lines) {
      json j = json::parse(line);
      json tagged;
      tagged["suite"] = rep.name;
      tagged["n"] = rep.n;
      tagged["k"] = rep.k;
      for (auto& [key, value] : j.items()) tagged[key] = value;
      std::cout << tagged.dump() << '\n';
    }
    std::cout << rep.summary_json() << '\n';
  } else if (fmt == Format::csv) {
    std::cout << rep.name << ',' << rep.n << ',' << rep.k << ',' << rep.checks << ',' << rep.failures << ','
              << rep.vacuous << ',' << (rep.passed() ? "true" : "false") << '\n';
  } else {
    std::cout << std::left << std::setw(12) << rep.name << " n=" << std::setw(3) << rep.n << " k=" << std::setw(2)
              << rep.k << " checks=" << std::setw(7) << rep.checks << " failures=" << std::setw(5) << rep.failures
              << " vacuous=" << std::setw(5) << rep.vacuous << (rep.report_only ? " (report only)" : "") << '\n'
              << std::right;
    for (const std::string& line : rep.lines) {
      if (line.find("\"ok\":false") != std::string::npos) std::cout << "  failed: " << line << '\n';
    }
  }
}

void emit_bound(const BoundReport& rep, Format fmt, SuiteOutcome& out) {
  ++out.checks;
  if (!rep.report_only && !rep.holds) {
    if (rep.decided) {
      ++out.failures;
    } else {
      ++out.undecided;
    }
  }
  if (fmt == Format::json) {
    std::cout << report_to_json(rep) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << report_to_csv(rep) << '\n';
  } else {
    std::cout << std::left << std::setw(14) << rep.name << std::right;
    if (rep.n) std::cout << " n=" << std::setw(3) << *rep.n;
    if (rep.m) std::cout << " m=" << std::setw(4) << *rep.m;
    if (rep.k) std::cout << " k=" << *rep.k;
    if (rep.i) std::cout << " i=" << *rep.i;
    std::cout << "  lhs_log=" << std::setw(12) << rep.lhs_log.to_string(8) << " rhs_log=" << std::setw(12)
              << rep.rhs_log.to_string(8);
    if (rep.ratio) std::cout << " ratio=" << std::setprecision(6) << *rep.ratio;
    std::cout << "  " << (rep.report_only ? "report" : rep.holds ? "holds" : rep.decided ? "FAILS" : "undecided");
    if (!rep.note.empty() && (!rep.holds || rep.report_only)) std::cout << "  " << rep.note;
    std::cout << '\n';
  }
}

std::vector<int> k_range(const Options& o, int k_min, int default_max) {
  if (o.k > 0) return {o.k};
  std::vector<int> ks;
  for (int k = k_min; k <= (o.k_max > 0 ? o.k_max : default_max); ++k) ks.push_back(k);
  return ks;
}

int pick(int value, int fallback) { return value > 0 ? value : fallback; }

// Random maximal triangle-free graph: add edges in random order unless they
// close a triangle.
Graph random_triangle_free(int n, CounterRng& rng) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
  std::vector<VertexMask> rows(static_cast<std::size_t>(n), 0);
  const std::size_t keep = rng.below(all.size() + 1);
  for (std::size_t e = 0; e < keep; ++e) {
    const auto [u, v] = all[e];
    if (rows[static_cast<std::size_t>(u)] & rows[static_cast<std::size_t>(v)]) continue;
    rows[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    rows[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
  }
  return Graph::from_rows(std::move(rows));
}

int run_verify(const Options& o) {
  const Format fmt = format_of(o);
  SuiteOutcome out;
  const std::string& suite = o.suite;
  if (fmt == Format::csv) {
    const bool bound_like = suite == "recursion" || suite == "secondcount" || suite == "second2count" ||
                            suite == "kkmain" || suite == "ref3count";
    std::cout << (bound_like ? report_csv_header() : "suite,n,k,checks,failures,vacuous,passed") << '\n';
  }
  if (suite == "turanbest") {
    const int samples = static_cast<int>(o.samples ? o.samples : 1000);
    for (int k : k_range(o, 2, 4)) {
      for (int n = pick(o.n_min, 1); n <= pick(o.n_max, 8); ++n) emit_report(verify_turanbest(n, k, samples, o.seed), fmt, out);
    }
  } else if (suite == "major") {
    for (int k : k_range(o, 2, 4)) {
      for (int n = pick(o.n_min, 1); n <= pick(o.n_max, 10); ++n) emit_report(verify_major(n, k), fmt, out);
    }
  } else if (suite == "stepcount" || suite == "close") {
    for (int k : k_range(o, 3, 4)) {
      for (int n = std::max(pick(o.n_min, 1), suite == "close" ? k : 1); n <= pick(o.n_max, 12); ++n) {
        emit_report(suite == "close" ? verify_close(n, k) : verify_stepcount(n, k), fmt, out);
      }
    }
  } else if (suite == "turancount") {
    out.report_only = true;
    for (int k : k_range(o, 3, 4)) {
      for (int n = std::max(pick(o.n_min, 1), k); n <= pick(o.n_max, 12); ++n) emit_report(verify_turancount(n, k), fmt, out);
    }
  } else if (suite == "recursion") {
    for (const auto& rep : sweep_recursion(pick(o.n_max, 30), k_range(o, 3, 4), o.i_max >= 0 ? o.i_max : 5)) {
      emit_bound(rep, fmt, out);
    }
  } else if (suite == "secondcount") {
    for (const auto& rep : sweep_secondcount(pick(o.n_max, 30), k_range(o, 3, 4))) emit_bound(rep, fmt, out);
  } else if (suite == "second2count") {
    for (const auto& rep : sweep_second2count(pick(o.n_max, 30), o.i_max >= 0 ? o.i_max : 4)) emit_bound(rep, fmt, out);
  } else if (suite == "kkmain") {
    out.report_only = true;
    for (int k : k_range(o, 2, 2)) {
      for (const auto& rep : sweep_kkmain(pick(o.n_min, 10), pick(o.n_max, 60), k)) emit_bound(rep, fmt, out);
    }
  } else if (suite == "ref3count") {
    const int k = pick(o.k, 2);
    for (const auto& rep : sweep_path_bounds(pick(o.n_max, 12), k, o.n0)) emit_bound(rep, fmt, out);
    // The path-product bound itself, on random triangle-free graphs.
    const std::uint64_t graphs = o.samples ? o.samples : 50;
    const ExtremalFunction ex = ExtremalFunction::turan(2, 10);
    for (std::uint64_t s = 0; s < graphs; ++s) {
      CounterRng rng(o.seed, s);
      const int n = 3 + static_cast<int>(rng.below(8));
      const Graph g = random_triangle_free(n, rng);
      const int x = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      int y = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
      if (y >= x) ++y;
      BoundReport rep = check_path_count_bound(g, x, y, ex);
      rep.note += " graph6=" + to_graph6(g);
      emit_bound(rep, fmt, out);
    }
  } else {
    std::cerr << "error: unknown suite '" << suite << "'\n";
    return cli::kExitUsage;
  }
  if (fmt == Format::table) {
    std::cout << "summary: " << out.checks << " checks, " << out.failures << " failures";
    if (out.undecided) std::cout << ", " << out.undecided << " undecided";
    if (out.report_only) std::cout << " (report only; exit status ignores outcomes)";
    std::cout << '\n';
  }
  if (out.report_only) return cli::kExitOk;
  return out.failures == 0 && out.undecided == 0 ? cli::kExitOk : cli::kExitFalse;
}

// ---------------------------------------------------------------------------
// search

int run_search(const Options& o) {
  if (o.n < 1) throw std::invalid_argument("--n is required");
  const Graph h = graph_from_spec(o.forbid);
  SearchOptions so;
  if (!o.no_cache) so.cache_dir = o.cache_dir.empty() ? default_cache_dir() : std::filesystem::path(o.cache_dir);
  const SearchOutcome outcome = max_cycles_H_free(o.n, h, so);
  std::cerr << "cache: " << (so.cache_dir.empty() ? "disabled" : outcome.from_cache ? "hit" : "miss") << '\n';
  const SearchResult& r = outcome.result;
  const Format fmt = format_of(o);
  if (fmt == Format::json) {
    std::cout << search_result_to_json(r) << '\n';
  } else if (fmt == Format::csv) {
    std::cout << "n,forbidden,max_cycles,graph6\n";
    for (const auto& g6 : r.extremal_graphs) std::cout << r.n << ',' << r.forbidden << ',' << to_decimal(r.max_cycles) << ',' << g6 << '\n';
  } else {
    std::cout << "n                " << r.n << "\nforbidden        " << r.forbidden << "\nmax cycles       "
              << to_decimal(r.max_cycles) << "\nclasses examined " << r.graphs_examined << "\nunique           "
              << (r.unique ? "yes" : "no") << '\n';
    if (r.has_critical_edge) std::cout << "critical edge    " << (*r.has_critical_edge ? "yes" : "no") << '\n';
    if (r.turan_k) {
      std::cout << "T_" << *r.turan_k << "(" << r.n << ") extremal  " << (*r.turan_is_extremal ? "yes" : "no") << '\n';
    }
    std::cout << "extremal graphs (graph6):\n";
    for (const auto& g6 : r.extremal_graphs) std::cout << "  " << g6 << '\n';
  }
  return cli::kExitOk;
}

// ---------------------------------------------------------------------------
// bound

int run_bound(const Options& o) {
  const Format fmt = format_of(o);
  json j;
  j["kind"] = o.kind;
  std::string text;
  if (o.kind == "lambda" || o.kind == "easycor") {
    const Real v = o.kind == "lambda" ? lambda(o.n, o.m, o.k) : easycor_bound_log(o.n, o.m, o.k);
    j["n"] = o.n;
    j["m"] = o.m;
    j["k"] = o.k;
    j["value"] = v.to_string(50);
    text = v.to_string(50);
  } else if (o.kind == "cyclecount") {
    const Real v = cyclecount_bound_log(o.n, o.k, o.eps);
    j["n"] = o.n;
    j["k"] = o.k;
    j["eps"] = o.eps;
    j["value"] = v.to_string(50);
    text = v.to_string(50);
  } else if (o.kind == "path-exhaustive" || o.kind == "path-structured") {
    PathBound pb;
    if (o.kind == "path-structured") {
      pb = path_bound_structured(o.n, o.m, o.k, o.n0);
    } else {
      ExtremalFunction ex = ExtremalFunction::turan(std::max(o.k, 1), o.n);
      if (!o.ex_table.empty()) {
        std::vector<long long> values{0, 0};
        for (int v : cli::parse_int_list(o.ex_table)) values.push_back(v);
        ex = ExtremalFunction::from_table(values, ExtremalFunction::Provenance::user_supplied);
      } else if (!o.forbid.empty()) {
        ex = extremal_function_exhaustive(graph_from_spec(o.forbid), o.n);
      } else if (o.k < 1) {
        throw std::invalid_argument("path-exhaustive needs --k, --ex or --forbid");
      }
      j["ex_provenance"] = provenance_name(ex.provenance());
      pb = path_bound_exhaustive(o.n, o.m, ex);
    }
    j["n"] = o.n;
    j["m"] = o.m;
    j["value"] = to_decimal(pb.value);
    j["r"] = pb.r;
    if (pb.truncated) j["truncated"] = true;
    std::ostringstream os;
    os << to_decimal(pb.value) << "  r_2..r_n = (";
    for (std::size_t i = 0; i < pb.r.size(); ++i) os << (i ? "," : "") << pb.r[i];
    os << ')' << (pb.truncated ? "  [truncated]" : "");
    text = os.str();
  } else {
    throw std::invalid_argument("unknown bound kind '" + o.kind + "'");
  }
  if (fmt == Format::json) {
    std::cout << j.dump() << '\n';
  } else {
    std::cout << o.kind << ' ' << text << '\n';
  }
  return cli::kExitOk;
}

// ---------------------------------------------------------------------------
// sample

std::string exact_decimal(const ExactProb& q) { return Real(q, Round::nearest).to_string(17); }

int run_sample(const Options& o) {
  const std::uint64_t samples = o.samples ? o.samples : 1000000;
  std::cout << "event,n,k,estimate,stderr,exact\n";
  std::cout << std::setprecision(10);
  if (o.event == "walk") {
    const WalkEstimate w = walk_estimate_hv_fraction(o.n, o.k, samples, o.seed, o.workers);
    std::cout << "walk_hv_fraction," << o.n << ',' << o.k << ',';
    if (w.estimate) {
      std::cout << *w.estimate << ',' << w.stderr_;
    } else {
      std::cout << ",";
    }
    std::cout << ',' << exact_decimal(w.exact) << '\n';
    std::cerr << "accepted " << w.accepted << " of " << w.samples << " walks\n";
    return cli::kExitOk;
  }
  CodeEvent event;
  if (o.event == "Q") {
    event = CodeEvent::Q;
  } else if (o.event == "Pc") {
    event = CodeEvent::P_c;
  } else if (o.event == "QPc") {
    event = CodeEvent::Q_and_P_c;
  } else {
    throw std::invalid_argument("unknown event '" + o.event + "' (expected Q, Pc, QPc or walk)");
  }
  const std::vector<int> content = o.content.empty() ? std::vector<int>{} : cli::parse_int_list(o.content);
  const Estimate e = estimate_prob(o.n, o.k, event, content, samples, o.seed, o.workers);
  std::cout << event_name(event) << ',' << o.n << ',' << o.k << ',' << e.estimate << ',' << e.stderr_
            << ',' << (e.exact ? exact_decimal(*e.exact) : "") << '\n';
  return cli::kExitOk;
}

// ---------------------------------------------------------------------------
// inspect

int run_inspect(const Options& o) {
  const Format fmt = format_of(o);
  for (const Graph& g : cli::load_graphs(o.graph)) {
    json j;
    j["graph6"] = to_graph6(g);
    j["canonical_graph6"] = canonical_graph6(g);
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    if (g.n() <= kMaxColoringVertices) {
      j["chromatic_number"] = chromatic_number(g);
      j["critical_edge"] = has_critical_edge(g);
    }
    if (o.k > 0) {
      const PartitionInfo p =
          best_k_partition(g, o.k, g.n() <= kMaxExhaustivePartitionVertices ? PartitionMode::exhaustive : PartitionMode::heuristic);
      j["partition"] = {{"k", p.k}, {"assignment", p.assignment}, {"irregular_edges", p.irregular_edges.size()},
                        {"regular_edges", p.regular_edges}, {"certified", p.certified}};
      if (g.n() <= 20) {
        const RegularIrregularCycles split = count_regular_and_irregular_cycles(g, p, limits_of(o));
        j["regular_cycles"] = to_decimal(split.regular);
        j["irregular_cycles"] = to_decimal(split.irregular);
      }
    }
    if (fmt == Format::json) {
      std::cout << j.dump() << '\n';
    } else {
      for (auto& [key, value] : j.items()) std::cout << std::left << std::setw(18) << key << value.dump() << '\n';
    }
  }
  return cli::kExitOk;
}

void add_graph_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph6", o.graph.graph6, "Graph in graph6 format");
  cmd->add_option("--edges", o.graph.edges_file, "Edge-list file (first line n, then 'u v' lines)");
  cmd->add_option("--turan", o.graph.turan, "Turán graph T_k(n): --turan N K")->expected(2);
  cmd->add_option("--parts", o.graph.parts, "Complete multipartite graph, e.g. 2,2,2");
  cmd->add_option("--file", o.graph.graph6_file, "File with one graph6 string per line");
  cmd->add_option("--graph", o.graph.spec, "Catalog name (K4, C5, P3, E2, K2,3) or graph6");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cycle counting and extremal checks for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file");
  Options o;
  app.add_option("--format", o.format, "Output format: table, json or csv")->capture_default_str();
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "Sample budget (per-command default when 0)");
  app.add_option("--workers", o.workers, "Worker threads for sampling")->capture_default_str();
  app.add_option("--max-cycle-vertices", o.max_cycle_vertices, "Vertex cap for cycle counting")->capture_default_str();
  app.add_option("--max-path-vertices", o.max_path_vertices, "Vertex cap for path counting")->capture_default_str();
  app.add_option("--cache-dir", o.cache_dir, "Search cache directory (default $CYCLEX_CACHE_DIR or .cyclex-cache)");
  app.add_flag("--no-cache", o.no_cache, "Do not read or write the search cache");

  auto* count = app.add_subcommand("count", "Cycle spectrum, total and Hamilton count of a graph");
  add_graph_input(count, o);
  count->add_option("--paths", o.paths, "Also count x-y paths: --paths x,y");

  auto* analytic = app.add_subcommand("analytic", "Code-based counts for K_c");
  analytic->add_option("--parts", o.parts, "Class sizes, e.g. 2,2,2")->required();
  analytic->add_option("--rooted", o.rooted, "Rooted code count with first letters i,j");

  auto* verify = app.add_subcommand("verify", "Run an exact verification suite");
  verify->add_option("suite", o.suite,
                     "turanbest, major, stepcount, close, turancount, recursion, secondcount, second2count, kkmain, ref3count")
      ->required();
  verify->add_option("--n-min", o.n_min, "Smallest n");
  verify->add_option("--n-max", o.n_max, "Largest n");
  verify->add_option("--k", o.k, "Single k");
  verify->add_option("--k-max", o.k_max, "Largest k");
  verify->add_option("--i-max", o.i_max, "Largest i (recursion, second2count)");
  verify->add_option("--n0", o.n0, "Head length for the structured path bound")->capture_default_str();

  auto* search = app.add_subcommand("search", "Maximum cycle count over H-free graphs");
  search->add_option("--n", o.n, "Vertex count (<= 9)")->required();
  search->add_option("--forbid", o.forbid, "Forbidden graph: catalog name or graph6")->required();

  auto* bound = app.add_subcommand("bound", "Evaluate a bound expression");
  bound->add_option("--kind", o.kind, "lambda, easycor, cyclecount, path-exhaustive or path-structured")->required();
  bound->add_option("--n", o.n, "n");
  bound->add_option("--m", o.m, "Edge budget m");
  bound->add_option("--k", o.k, "k");
  bound->add_option("--eps", o.eps, "epsilon (cyclecount)")->capture_default_str();
  bound->add_option("--n0", o.n0, "Head length (path-structured)")->capture_default_str();
  bound->add_option("--ex", o.ex_table, "ex(t) for t = 2..n, comma separated (path-exhaustive)");
  bound->add_option("--forbid", o.forbid, "Compute ex(t; H) exhaustively (path-exhaustive)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimates for random codes (CSV)");
  sample->add_option("--n", o.n, "Code length")->required();
  sample->add_option("--k", o.k, "Alphabet size")->required();
  sample->add_option("--event", o.event, "Q, Pc, QPc or walk")->capture_default_str();
  sample->add_option("--content", o.content, "Letter content for Pc / QPc, e.g. 2,2");

  auto* inspect = app.add_subcommand("inspect", "Chromatic number, critical edge, best k-partition");
  add_graph_input(inspect, o);
  inspect->add_option("--k", o.k, "Best k-partition and regular/irregular cycle split");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*count) return run_count(o);
    if (*analytic) return run_analytic(o);
    if (*verify) return run_verify(o);
    if (*search) return run_search(o);
    if (*bound) return run_bound(o);
    if (*sample) return run_sample(o);
    if (*inspect) return run_inspect(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  }
  return cli::kExitUsage;
}
