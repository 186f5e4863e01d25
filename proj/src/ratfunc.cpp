#include "yf/ratfunc.hpp"

#include <stdexcept>

namespace yf {

RationalFunction::RationalFunction(UPoly num, UPoly den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = UPoly(Rational(1));
    return;
  }
  UPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  Rational l = den.lead();
  num_ = num * (1 / l);
  den_ = den * (1 / l);
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) return std::nullopt;
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::compose_affine(const Rational& a, const Rational& b) const {
  return RationalFunction(num_.compose_affine(a, b), den_.compose_affine(a, b));
}

TruncSeries RationalFunction::expand(int K) const {
  int dn = num_.degree(), dd = den_.degree();
  if (dn > dd) throw std::domain_error("rational function has a pole at infinity");
  // With x = 1/u: f = n~(x)/d~(x), n~_k = num_{dd-k}, d~_k = den_{dd-k}.
  std::vector<Rational> n(static_cast<size_t>(K) + 1), d(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) {
    n[static_cast<size_t>(k)] = num_.coeff(dd - k);
    d[static_cast<size_t>(k)] = den_.coeff(dd - k);
  }
  return series_mul(TruncSeries(n, K), series_inverse(TruncSeries(d, K)));
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

}  // namespace yf
