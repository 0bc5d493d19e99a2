#include "cyclex/graph_io.hpp"

#include <charconv>
#include <sstream>

#include "cyclex/error.hpp"

namespace cyclex {

namespace {

constexpr char kBias = 63;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(std::string("expected integer for ") + what + ", got '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph from_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char ch : text) {
    if (ch < 63 || ch > 126) throw ParseError("graph6: invalid character '" + std::string(1, ch) + "'");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') throw ParseError("graph6: unsupported or truncated size prefix");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n < 1) throw ParseError("graph6: graphs need at least one vertex");
  if (n > kMaxVertices) throw ParseError("graph6: more than 64 vertices (" + std::to_string(n) + ")");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (text.size() - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n=" + std::to_string(n) +
                     ", got " + std::to_string(text.size() - pos));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return make_graph(n, edges);
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    if (n < 0) {
      if (s.back() == ';') s.remove_suffix(1);
      n = parse_int(s, "vertex count");
      if (n < 1 || n > kMaxVertices) throw ParseError("edge list: vertex count must lie in [1, 64]");
      continue;
    }
    std::istringstream fields{std::string(s)};
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected 'u v'");
    }
    edges.emplace_back(parse_int(a, "vertex"), parse_int(b, "vertex"));
  }
  if (n < 0) throw ParseError("edge list: missing vertex count");
  try {
    return make_graph(n, edges);
  } catch (const std::exception& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.n() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    out.push_back(from_graph6(line));
  }
  return out;
}

Graph graph_from_spec(std::string_view spec) {
  spec = trim(spec);
  if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P' || spec[0] == 'E')) {
    const std::string_view rest = spec.substr(1);
    const bool numeric = rest.find_first_not_of("0123456789,") == std::string_view::npos;
    if (numeric) {
      if (spec[0] == 'K' && rest.find(',') != std::string_view::npos) {
        std::vector<int> parts;
        std::size_t start = 0;
        while (start <= rest.size()) {
          const std::size_t comma = rest.find(',', start);
          const auto token = rest.substr(start, comma == std::string_view::npos ? rest.npos : comma - start);
          parts.push_back(parse_int(token, "class size"));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
        try {
          return complete_multipartite(ClassVector(parts));
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }
      if (rest.find(',') == std::string_view::npos) {
        const int t = parse_int(rest, "catalog size");
        try {
          switch (spec[0]) {
            case 'K': return complete_graph(t);
            case 'C': return cycle_graph(t);
            case 'P': return path_graph(t);
            default: return empty_graph(t);
          }
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what());
        }
      }
    }
  }
  return from_graph6(spec);
}

}  // namespace cyclex
