#pragma once

#include <optional>

#include "yf/poly.hpp"
#include "yf/series.hpp"

namespace yf {

// num/den with den monic and gcd(num, den) = 1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(implicit)
  RationalFunction(UPoly num, UPoly den);

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

  std::optional<Rational> eval(const Rational& x) const;  // nullopt at a pole
  RationalFunction compose_affine(const Rational& a, const Rational& b) const;  // f(a*x+b)
  // Expansion at u = infinity in powers of u^{-1}; requires deg num <= deg den.
  TruncSeries expand(int K) const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  UPoly num_, den_;
};

}  // namespace yf
