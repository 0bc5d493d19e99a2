#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cyclex/simd/path_kernel.hpp"

namespace cyclex::simd {

namespace scalar {
void accumulate_masked(Modulus, const std::uint64_t*, std::uint64_t, const std::uint64_t*, std::size_t,
                       std::uint64_t*);
std::vector<std::uint64_t> path_dp_totals(Modulus, const PathDpProblem&);
}  // namespace scalar

#if defined(CYCLEX_HAVE_AVX2)
namespace avx2 {
void accumulate_masked(Modulus, const std::uint64_t*, std::uint64_t, const std::uint64_t*, std::size_t,
                       std::uint64_t*);
std::vector<std::uint64_t> path_dp_totals(Modulus, const PathDpProblem&);
}  // namespace avx2
#endif

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(CYCLEX_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  static const Isa detected = [] {
    const char* forced = std::getenv("CYCLEX_ISA");
    if (forced && std::string(forced) == "scalar") return Isa::scalar;
    return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return detected;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

namespace {

void require(Isa isa) {
  if (!isa_available(isa)) throw std::runtime_error("kernel '" + std::string(isa_name(isa)) + "' is not available");
}

}  // namespace

void accumulate_masked(Isa isa, Modulus mod, const std::uint64_t* row, std::uint64_t members,
                       const std::uint64_t* lane_masks, std::size_t stride, std::uint64_t* out) {
  if (stride % 4 != 0 || stride > kMaxStride) {
    throw std::invalid_argument("accumulate_masked: stride must be a multiple of 4 and at most kMaxStride");
  }
  require(isa);
#if defined(CYCLEX_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::accumulate_masked(mod, row, members, lane_masks, stride, out);
#endif
  scalar::accumulate_masked(mod, row, members, lane_masks, stride, out);
}

std::vector<std::uint64_t> path_dp_totals(Isa isa, Modulus mod, const PathDpProblem& problem) {
  require(isa);
#if defined(CYCLEX_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::path_dp_totals(mod, problem);
#endif
  return scalar::path_dp_totals(mod, problem);
}

}  // namespace cyclex::simd
