#pragma once

#include <algorithm>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// Coefficient-ring agnostic helpers for series in u^{-1} truncated at order K
// (vectors of length K+1). T needs +, -, * and multiplication by Rational.
namespace gseries {

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, int K, const T& zero) {
  std::vector<T> c(static_cast<size_t>(K) + 1, zero);
  for (int i = 0; i <= K; ++i)
    for (int j = 0; i + j <= K; ++j) c[static_cast<size_t>(i + j)] = c[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return c;
}

// a(u + c) via (u+c)^{-k} = sum_s binom(k+s-1, s) (-c)^s u^{-k-s}
template <class T>
std::vector<T> shift(const std::vector<T>& a, const Rational& c, int K, const T& zero) {
  std::vector<T> r(static_cast<size_t>(K) + 1, zero);
  r[0] = a[0];
  for (int k = 1; k <= K; ++k) {
    Rational pw(1);
    for (int s = 0; k + s <= K; ++s) {
      Rational w = binomial(k + s - 1, s) * pw;
      if (w != 0) r[static_cast<size_t>(k + s)] = r[static_cast<size_t>(k + s)] + a[static_cast<size_t>(k)] * w;
      pw *= -c;
    }
  }
  return r;
}

// Inverse of a series whose constant term is the unit `one`.
template <class T>
std::vector<T> inverse_unipotent(const std::vector<T>& a, int K, const T& zero) {
  std::vector<T> b(static_cast<size_t>(K) + 1, zero);
  b[0] = a[0];
  for (int k = 1; k <= K; ++k) {
    T acc = zero;
    for (int j = 1; j <= k; ++j) acc = acc + a[static_cast<size_t>(j)] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = zero - acc;
  }
  return b;
}

}  // namespace gseries

class TruncSeries {
 public:
  TruncSeries() = default;
  TruncSeries(std::vector<Rational> coeffs, int order);
  static TruncSeries one(int order);

  int order() const { return K_; }
  const Rational& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  Rational& operator[](int k) { return c_.at(static_cast<size_t>(k)); }
  const std::vector<Rational>& coeffs() const { return c_; }
  TruncSeries truncate(int K) const;

  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.K_ == b.K_ && a.c_ == b.c_; }

 private:
  std::vector<Rational> c_;
  int K_ = 0;
};

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scale(const TruncSeries& a, const Rational& s);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_inverse(const TruncSeries& a);
TruncSeries series_shift(const TruncSeries& a, const Rational& c);

}  // namespace yf
