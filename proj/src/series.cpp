#include "yf/series.hpp"

#include <stdexcept>

namespace yf {

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)), K_(order) {
  if (order < 0) throw std::invalid_argument("negative truncation order");
  c_.resize(static_cast<size_t>(order) + 1);
}

TruncSeries TruncSeries::one(int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  c[0] = 1;
  return TruncSeries(std::move(c), order);
}

TruncSeries TruncSeries::truncate(int K) const {
  if (K > K_) throw std::invalid_argument("cannot extend a truncated series");
  return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + K + 1), K);
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  int K = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) c[static_cast<size_t>(k)] = a[k] + b[k];
  return TruncSeries(std::move(c), K);
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  int K = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= K; ++k) c[static_cast<size_t>(k)] = a[k] - b[k];
  return TruncSeries(std::move(c), K);
}

TruncSeries series_scale(const TruncSeries& a, const Rational& s) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= s;
  return TruncSeries(std::move(c), a.order());
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  int K = std::min(a.order(), b.order());
  return TruncSeries(gseries::mul(a.coeffs(), b.coeffs(), K, Rational(0)), K);
}

TruncSeries series_inverse(const TruncSeries& a) {
  if (a[0] == 0) throw NonInvertibleSeries("series has zero constant term");
  int K = a.order();
  Rational inv0 = 1 / a[0];
  std::vector<Rational> b(static_cast<size_t>(K) + 1);
  b[0] = inv0;
  for (int k = 1; k <= K; ++k) {
    Rational acc(0);
    for (int j = 1; j <= k; ++j) acc += a[j] * b[static_cast<size_t>(k - j)];
    b[static_cast<size_t>(k)] = -acc * inv0;
  }
  return TruncSeries(std::move(b), K);
}

TruncSeries series_shift(const TruncSeries& a, const Rational& c) {
  return TruncSeries(gseries::shift(a.coeffs(), c, a.order(), Rational(0)), a.order());
}

}  // namespace yf
