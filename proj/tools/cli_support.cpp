#include "cli_support.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

#include "cyclex/error.hpp"
#include "cyclex/graph_io.hpp"

namespace cyclex::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + name + "' (expected table, json or csv)");
}

bool GraphInput::empty() const {
  return graph6.empty() && edges_file.empty() && turan.empty() && parts.empty() && graph6_file.empty() &&
         spec.empty();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("expected a comma-separated integer list, got '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<Graph> load_graphs(const GraphInput& in) {
  const int sources = !in.graph6.empty() + !in.edges_file.empty() + !in.turan.empty() + !in.parts.empty() +
                      !in.graph6_file.empty() + !in.spec.empty();
  if (sources != 1) throw std::invalid_argument("give exactly one graph source");
  if (!in.graph6.empty()) return {from_graph6(in.graph6)};
  if (!in.spec.empty()) return {graph_from_spec(in.spec)};
  if (!in.turan.empty()) {
    if (in.turan.size() != 2) throw std::invalid_argument("--turan takes n and k");
    return {turan_graph(in.turan[0], in.turan[1])};
  }
  if (!in.parts.empty()) return {complete_multipartite(ClassVector(parse_int_list(in.parts)))};
  const std::string& path = in.edges_file.empty() ? in.graph6_file : in.edges_file;
  std::ifstream file(path);
  if (!file) throw ParseError("cannot open '" + path + "'");
  if (!in.edges_file.empty()) return {read_edge_list(file)};
  std::vector<Graph> graphs = read_graph6_lines(file);
  if (graphs.empty()) throw ParseError("no graphs in '" + path + "'");
  return graphs;
}

}  // namespace cyclex::cli
