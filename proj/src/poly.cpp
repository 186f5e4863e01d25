#include "yf/poly.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace yf {

UPoly::UPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

UPoly::UPoly(const Rational& constant) {
  if (constant != 0) c_.push_back(constant);
}

UPoly UPoly::monomial(const Rational& a, int deg) {
  std::vector<Rational> c(static_cast<size_t>(deg) + 1);
  c[static_cast<size_t>(deg)] = a;
  return UPoly(std::move(c));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(k)];
}

Rational UPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<long>(k);
  return UPoly(std::move(d));
}

UPoly UPoly::compose_affine(const Rational& a, const Rational& b) const {
  UPoly lin(std::vector<Rational>{b, a});
  UPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + UPoly(*it);
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead();
  return *this * inv;
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
  for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s == 0) return UPoly();
  UPoly r = a;
  for (auto& x : r.c_) x *= s;
  return r;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {UPoly(), a};
  std::vector<Rational> q(static_cast<size_t>(dq) + 1);
  Rational inv = 1 / b.lead();
  for (int k = dq; k >= 0; --k) {
    Rational f = r[static_cast<size_t>(k + db)] * inv;
    q[static_cast<size_t>(k)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> ds;
  if (n == 0) return ds;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d * d != n) ds.push_back(n / d);
    }
  }
  return ds;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.degree() <= 0) return {};
  // square-free part keeps the coefficients small
  UPoly sf = divmod(p, gcd(p, p.derivative())).first;
  std::set<Rational> roots;
  while (sf.degree() > 0 && sf.coeff(0) == 0) {
    roots.insert(Rational(0));
    sf = divmod(sf, UPoly::x()).first;
  }
  if (sf.degree() > 0) {
    Integer l(1);
    for (const auto& c : sf.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : sf.coeffs()) ic.push_back(Integer(c * l));
    for (const auto& pn : divisors(ic.front()))
      for (const auto& qd : divisors(ic.back()))
        for (int sgn : {1, -1}) {
          Rational cand(pn * sgn, qd);
          cand.canonicalize();
          if (sf.eval(cand) == 0) roots.insert(cand);
        }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace yf
