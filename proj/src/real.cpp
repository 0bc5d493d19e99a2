#include "cyclex/real.hpp"

#include <stdexcept>

namespace cyclex {

mpfr_rnd_t to_mpfr(Round r) {
  switch (r) {
    case Round::down:
      return MPFR_RNDD;
    case Round::up:
      return MPFR_RNDU;
    case Round::nearest:
      break;
  }
  return MPFR_RNDN;
}

Real::Real() {
  mpfr_init2(value_, kRealPrecision);
  mpfr_set_zero(value_, 1);
}

Real::Real(long v) {
  mpfr_init2(value_, kRealPrecision);
  mpfr_set_si(value_, v, MPFR_RNDN);  // exact for any long at this precision
}

Real::Real(const BigCount& v, Round r) {
  mpfr_init2(value_, kRealPrecision);
  mpfr_set_z(value_, v.get_mpz_t(), to_mpfr(r));
}

Real::Real(const ExactProb& v, Round r) {
  mpfr_init2(value_, kRealPrecision);
  mpfr_set_q(value_, v.get_mpq_t(), to_mpfr(r));
}

Real Real::from_double(double v) {
  Real out;
  mpfr_set_d(out.value_, v, MPFR_RNDN);
  return out;
}

Real::Real(const Real& other) {
  mpfr_init2(value_, kRealPrecision);
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, kRealPrecision);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) mpfr_set(value_, other.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

double Real::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

bool Real::is_finite() const { return mpfr_number_p(value_) != 0; }

std::string Real::to_string(int digits) const {
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Rg", digits, value_) < 0) throw std::runtime_error("mpfr_asprintf failed");
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

Real add(const Real& a, const Real& b, Round r) {
  Real out;
  mpfr_add(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Real sub(const Real& a, const Real& b, Round r) {
  Real out;
  mpfr_sub(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Real mul(const Real& a, const Real& b, Round r) {
  Real out;
  mpfr_mul(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Real div(const Real& a, const Real& b, Round r) {
  Real out;
  mpfr_div(out.get(), a.get(), b.get(), to_mpfr(r));
  return out;
}

Real neg(const Real& a) {
  Real out;
  mpfr_neg(out.get(), a.get(), MPFR_RNDN);
  return out;
}

Real exp(const Real& a, Round r) {
  Real out;
  mpfr_exp(out.get(), a.get(), to_mpfr(r));
  return out;
}

Real log(const Real& a, Round r) {
  Real out;
  mpfr_log(out.get(), a.get(), to_mpfr(r));
  return out;
}

Real sqrt(const Real& a, Round r) {
  Real out;
  mpfr_sqrt(out.get(), a.get(), to_mpfr(r));
  return out;
}

Real pi(Round r) {
  Real out;
  mpfr_const_pi(out.get(), to_mpfr(r));
  return out;
}

Real log(const BigCount& v, Round r) {
  // Round the argument in the same direction; log is increasing.
  return log(Real(v, r), r);
}

Real log(const ExactProb& v, Round r) { return log(Real(v, r), r); }

int compare(const Real& a, const Real& b) { return mpfr_cmp(a.get(), b.get()); }
int compare(const Real& a, const BigCount& b) { return mpfr_cmp_z(a.get(), b.get_mpz_t()); }
int compare(const Real& a, const ExactProb& b) { return mpfr_cmp_q(a.get(), b.get_mpq_t()); }

}  // namespace cyclex
