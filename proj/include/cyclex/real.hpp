#pragma once

// Thin RAII wrapper over MPFR. Every operation takes an explicit rounding
// direction so callers can build certified lower and upper bounds.

#include <string>

#include <mpfr.h>

#include "cyclex/bigint.hpp"

namespace cyclex {

enum class Round { nearest, down, up };

inline constexpr mpfr_prec_t kRealPrecision = 256;  // about 77 decimal digits

class Real {
 public:
  Real();
  explicit Real(long v);
  Real(const BigCount& v, Round r);
  Real(const ExactProb& v, Round r);
  static Real from_double(double v);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

  double to_double() const;
  /// Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 20) const;
  bool is_finite() const;

 private:
  mpfr_t value_;
};

mpfr_rnd_t to_mpfr(Round r);

Real add(const Real& a, const Real& b, Round r = Round::nearest);
Real sub(const Real& a, const Real& b, Round r = Round::nearest);
Real mul(const Real& a, const Real& b, Round r = Round::nearest);
Real div(const Real& a, const Real& b, Round r = Round::nearest);
Real neg(const Real& a);
Real exp(const Real& a, Round r = Round::nearest);
Real log(const Real& a, Round r = Round::nearest);
Real sqrt(const Real& a, Round r = Round::nearest);
Real pi(Round r = Round::nearest);
/// Natural log of a positive integer / rational.
Real log(const BigCount& v, Round r = Round::nearest);
Real log(const ExactProb& v, Round r = Round::nearest);

/// Exact comparisons (no rounding involved); return <0, 0, >0.
int compare(const Real& a, const Real& b);
int compare(const Real& a, const BigCount& b);
int compare(const Real& a, const ExactProb& b);

}  // namespace cyclex
