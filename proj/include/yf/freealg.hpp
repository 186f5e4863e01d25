#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "yf/liealg.hpp"
#include "yf/report.hpp"
#include "yf/series.hpp"

namespace yf {

// Generator t_{ij}^{(r)}: positions i, j in 0..N-1 (N <= 16), order 1 <= r <= 255.
using Gen = char16_t;
using Word = std::u16string;

inline Gen make_gen(int i, int j, int r) { return static_cast<Gen>((r << 8) | (i << 4) | j); }
inline int gen_i(Gen g) { return (g >> 4) & 15; }
inline int gen_j(Gen g) { return g & 15; }
inline int gen_r(Gen g) { return g >> 8; }
int word_sumr(const Word& w);

// (sum r, length, lex) with generators compared by (r, i, j)
struct WordLess {
  bool operator()(const Word& a, const Word& b) const;
};

class NonInvertible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NCPoly {
 public:
  using Terms = std::map<Word, Rational, WordLess>;

  NCPoly() = default;
  NCPoly(const Rational& c);  // NOLINT(implicit)
  NCPoly(long c) : NCPoly(Rational(c)) {}  // NOLINT(implicit)
  static NCPoly gen(int i, int j, int r);
  static NCPoly word(const Word& w, const Rational& c = Rational(1));

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Rational constant() const;
  Rational coeff(const Word& w) const;
  void add(const Word& w, const Rational& c);
  int max_len() const;
  int max_sumr() const;
  size_t size() const { return t_.size(); }

  NCPoly operator-() const;
  NCPoly& operator+=(const NCPoly& o);
  NCPoly& operator-=(const NCPoly& o);
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator*(const NCPoly& a, const NCPoly& b);
  friend NCPoly operator*(const NCPoly& a, const Rational& s);
  friend NCPoly operator*(const Rational& s, const NCPoly& a) { return a * s; }
  friend bool operator==(const NCPoly& a, const NCPoly& b) { return a.t_ == b.t_; }

 private:
  Terms t_;
};

NCPoly commutator(const NCPoly& a, const NCPoly& b);
std::string to_string(const NCPoly& p);
Json ncpoly_json(const NCPoly& p);

// Homomorphism (or antihomomorphism with reverse = true) determined by generator images.
class Substitution {
 public:
  explicit Substitution(std::function<NCPoly(Gen)> image, bool reverse = false) : image_(std::move(image)), reverse_(reverse) {}
  NCPoly operator()(const NCPoly& p) const;
  const NCPoly& image(Gen g) const;

 private:
  std::function<NCPoly(Gen)> image_;
  bool reverse_;
  mutable std::map<Gen, NCPoly> cache_;
};

// Element of A^{(x)k}; multiplication is legwise.
class TensorNCPoly {
 public:
  using Key = std::vector<Word>;

  explicit TensorNCPoly(int arity = 2) : arity_(arity) {}
  TensorNCPoly(const Rational& c, int arity = 2);  // NOLINT(implicit)
  static TensorNCPoly pure(const std::vector<NCPoly>& legs);
  static TensorNCPoly leg(const NCPoly& p, int arity, int position);

  int arity() const { return arity_; }
  const std::map<Key, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Key& k, const Rational& c);

  TensorNCPoly& operator+=(const TensorNCPoly& o);
  TensorNCPoly& operator-=(const TensorNCPoly& o);
  friend TensorNCPoly operator+(TensorNCPoly a, const TensorNCPoly& b) { return a += b; }
  friend TensorNCPoly operator-(TensorNCPoly a, const TensorNCPoly& b) { return a -= b; }
  friend TensorNCPoly operator*(const TensorNCPoly& a, const TensorNCPoly& b);
  friend TensorNCPoly operator*(const TensorNCPoly& a, const Rational& s);
  friend bool operator==(const TensorNCPoly& a, const TensorNCPoly& b) { return a.arity_ == b.arity_ && a.t_ == b.t_; }

 private:
  int arity_;
  std::map<Key, Rational> t_;
};

// N x N matrix of series in u^{-1} truncated at order K; c[k][i*N+j].
template <class T>
struct MatSeriesT {
  int N = 0, K = 0;
  std::vector<std::vector<T>> c;

  MatSeriesT() = default;
  MatSeriesT(int n, int k, const T& zero) : N(n), K(k), c(static_cast<size_t>(k) + 1, std::vector<T>(static_cast<size_t>(n * n), zero)) {}
  T& at(int k, int i, int j) { return c[static_cast<size_t>(k)][static_cast<size_t>(i * N + j)]; }
  const T& at(int k, int i, int j) const { return c[static_cast<size_t>(k)][static_cast<size_t>(i * N + j)]; }
  std::vector<T> entry(int i, int j) const {
    std::vector<T> s;
    for (int k = 0; k <= K; ++k) s.push_back(at(k, i, j));
    return s;
  }
};

using MatSeries = MatSeriesT<NCPoly>;
using TensorMatSeries = MatSeriesT<TensorNCPoly>;

template <class T>
MatSeriesT<T> mat_mul(const MatSeriesT<T>& a, const MatSeriesT<T>& b, const T& zero) {
  int N = a.N, K = std::min(a.K, b.K);
  MatSeriesT<T> r(N, K, zero);
  for (int p = 0; p <= K; ++p)
    for (int q = 0; p + q <= K; ++q)
      for (int i = 0; i < N; ++i)
        for (int l = 0; l < N; ++l) {
          const T& x = a.at(p, i, l);
          if (x.is_zero()) continue;
          for (int j = 0; j < N; ++j) {
            const T& y = b.at(q, l, j);
            if (!y.is_zero()) r.at(p + q, i, j) += x * y;
          }
        }
  return r;
}

// Constant term must be the identity.
template <class T>
MatSeriesT<T> mat_inverse(const MatSeriesT<T>& a, const T& zero, const T& one) {
  int N = a.N, K = a.K;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (!(a.at(0, i, j) == (i == j ? one : zero))) throw NonInvertible("constant term is not the identity");
  MatSeriesT<T> b(N, K, zero);
  for (int i = 0; i < N; ++i) b.at(0, i, i) = one;
  for (int k = 1; k <= K; ++k)
    for (int j = 1; j <= k; ++j)
      for (int i = 0; i < N; ++i)
        for (int l = 0; l < N; ++l) {
          const T& x = a.at(j, i, l);
          if (x.is_zero()) continue;
          for (int m = 0; m < N; ++m) {
            const T& y = b.at(k - j, l, m);
            if (!y.is_zero()) b.at(k, i, m) -= x * y;
          }
        }
  return b;
}

// A(u + c)
template <class T>
MatSeriesT<T> mat_shift(const MatSeriesT<T>& a, const Rational& c, const T& zero) {
  MatSeriesT<T> r(a.N, a.K, zero);
  for (int i = 0; i < a.N; ++i)
    for (int j = 0; j < a.N; ++j) {
      auto s = gseries::shift(a.entry(i, j), c, a.K, zero);
      for (int k = 0; k <= a.K; ++k) r.at(k, i, j) = s[static_cast<size_t>(k)];
    }
  return r;
}

template <class T, class F>
MatSeriesT<T> map_entries(const MatSeriesT<T>& a, F f) {
  MatSeriesT<T> r = a;
  for (auto& row : r.c)
    for (auto& x : row) x = f(x);
  return r;
}

MatSeries t_matrix(int N, int K);
MatSeries mat_mul(const MatSeries& a, const MatSeries& b);
MatSeries mat_inverse(const MatSeries& a);
MatSeries mat_shift(const MatSeries& a, const Rational& c);
// entry (-j,-i) of the result is theta_ij a_ij
MatSeries transpose_t(const MatSeries& a, const IndexLayer& idx);

// Hopf structure on generators of the RTT algebra with N x N generating matrix.
NCPoly counit(const NCPoly& p);
TensorNCPoly coproduct(const NCPoly& p, int N);
// Applies the coproduct to one leg, raising the arity by one.
TensorNCPoly coproduct_leg(const TensorNCPoly& x, int leg, int N);
TensorNCPoly counit_leg(const TensorNCPoly& x, int leg);
TensorMatSeries coproduct(const MatSeries& a);
// S(t_ij^(r)) = (T^{-1})^(r)_ij, extended antihomomorphically; needs K >= max order used.
Substitution antipode(int N, int K);
// m_f: T(u) -> f(u) T(u)
Substitution mf_substitution(const TruncSeries& f);
MatSeries apply_mf(const MatSeries& a, const TruncSeries& f);
MatSeries apply(const MatSeries& a, const Substitution& s);

}  // namespace yf
