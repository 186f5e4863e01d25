#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// Univariate polynomial, coefficients low to high, no trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> c);
  UPoly(const Rational& constant);  // NOLINT(implicit)

  static UPoly monomial(const Rational& a, int deg);
  static UPoly x() { return monomial(Rational(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  UPoly derivative() const;
  // p(a*x + b)
  UPoly compose_affine(const Rational& a, const Rational& b) const;
  UPoly monic() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic, gcd(0,0) = 0
std::vector<Rational> rational_roots(const UPoly& p);  // distinct, ascending

}  // namespace yf
