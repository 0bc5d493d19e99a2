#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cyclex {

/// Arbitrary-precision nonnegative count (cycles, paths, codes).
using BigCount = mpz_class;

/// Exact rational, used for code-event probabilities.
using ExactProb = mpq_class;

BigCount factorial(unsigned n);

/// (n)_i = n (n-1) ... (n-i+1); zero when i > n.
BigCount falling_factorial(long n, unsigned i);

BigCount binomial(unsigned n, unsigned k);

inline BigCount from_u64(std::uint64_t v) {
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

inline std::string to_decimal(const BigCount& v) { return v.get_str(10); }

/// "p/q" in lowest terms ("0/1" for zero).
std::string to_fraction_string(const ExactProb& q);

}  // namespace cyclex
