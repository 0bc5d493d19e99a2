#include "cyclex/bigint.hpp"

namespace cyclex {

BigCount factorial(unsigned n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount falling_factorial(long n, unsigned i) {
  if (static_cast<long>(i) > n) return 0;
  BigCount out = 1;
  for (unsigned j = 0; j < i; ++j) out *= n - static_cast<long>(j);
  return out;
}

BigCount binomial(unsigned n, unsigned k) {
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string to_fraction_string(const ExactProb& q) {
  ExactProb c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace cyclex
