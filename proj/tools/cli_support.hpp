#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyclex/graph.hpp"

namespace cyclex::cli {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;   // a checked inequality or identity failed
inline constexpr int kExitUsage = 2;   // bad flags, unparsable input, size caps

struct GraphInput {
  std::string graph6;
  std::string edges_file;
  std::vector<int> turan;     // {n, k}
  std::string parts;          // "2,2,2"
  std::string graph6_file;
  std::string spec;           // catalog name or graph6

  bool empty() const;
};

/// Exactly one source must be set; throws std::invalid_argument otherwise.
std::vector<Graph> load_graphs(const GraphInput& in);

/// "2,2,2" -> {2,2,2}. Throws std::invalid_argument on anything else.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace cyclex::cli
