#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace yf {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// Always "p/q", including q = 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

Rational binomial(long n, long k);

class NonInvertibleSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class GridExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yf
