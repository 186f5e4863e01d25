#include "yf/rational.hpp"

namespace yf {

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0)
    throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

}  // namespace yf
