#pragma once

#include <map>
#include <string>
#include <utility>

#include "cyclex/bigint.hpp"
#include "cyclex/graph.hpp"
#include "cyclex/simd/path_kernel.hpp"
#include "cyclex/structure.hpp"

namespace cyclex {

/// Per-length cycle counts c_r(G), 3 <= r <= n. Every length in range is
/// present (possibly zero).
struct CycleSpectrum {
  int n = 0;
  std::map<int, BigCount> counts;

  BigCount total() const;
  /// Zero outside [3, n].
  BigCount at(int r) const;
  friend bool operator==(const CycleSpectrum&, const CycleSpectrum&) = default;
};

CycleSpectrum empty_spectrum(int n);

/// Size caps and kernel choice. The defaults keep the worst case (dense
/// graphs at the cap) within minutes on one core; the DP table for an anchor
/// with m working vertices takes 2^m * ceil((m+1)/4) * 32 bytes.
struct CountLimits {
  int max_cycle_vertices = 24;
  int max_path_vertices = 22;
  simd::Isa isa = simd::detect_isa();
};

CycleSpectrum cycle_spectrum(const Graph& g, const CountLimits& limits = {});
BigCount count_cycles(const Graph& g, const CountLimits& limits = {});
BigCount count_hamilton(const Graph& g, const CountLimits& limits = {});

/// Number of simple x-y paths (length >= 1). Throws std::invalid_argument when x == y.
BigCount count_paths(const Graph& g, int x, int y, const CountLimits& limits = {});

struct RegularIrregularCycles {
  BigCount regular;    // cycles using only edges between classes
  BigCount irregular;  // cycles using at least one edge inside a class
};

/// Throws std::invalid_argument when the partition does not describe g.
RegularIrregularCycles count_regular_and_irregular_cycles(const Graph& g, const PartitionInfo& p,
                                                          const CountLimits& limits = {});

/// "r,count" rows (with a header line "r,count").
std::string spectrum_to_csv(const CycleSpectrum& s);
/// {"3": "4", "4": "3"}: counts are exact decimal strings (JSON numbers lose precision past 2^53).
std::string spectrum_to_json(const CycleSpectrum& s);

}  // namespace cyclex
