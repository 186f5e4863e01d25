#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "yf/certify.hpp"
#include "yf/echelon.hpp"
#include "yf/matrix.hpp"
#include "yf/ratfunc.hpp"
#include "yf/series.hpp"

using namespace yf;

namespace {

TruncSeries S(std::vector<long> c, int K) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return TruncSeries(v, K);
}

}  // namespace

TEST_CASE("rational serialization") {
  CHECK(to_string(rat(6, 4)) == "3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(to_string(rat(-1, 3)) == "-1/3");
  CHECK(parse_rational("-10/4") == rat(-5, 2));
  CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("series products and inverses") {
  CHECK(series_mul(S({1, 1, 0}, 2), S({1, -1, 0}, 2)) == S({1, 0, -1}, 2));
  auto a = S({3, -2, 5, 7}, 3);
  CHECK(series_mul(a, TruncSeries::one(3)) == a);
  CHECK(series_mul(S({1, 1, 1}, 2), S({1, -1, 0}, 2)) == S({1, 0, 0}, 2));
  CHECK(series_inverse(S({1, -1, 0, 0, 0}, 4)) == S({1, 1, 1, 1, 1}, 4));
  CHECK(series_inverse(TruncSeries::one(3)) == TruncSeries::one(3));
  CHECK(series_inverse(S({1, 2, 0}, 2)) == S({1, -2, 4}, 2));
  CHECK_THROWS_AS(series_inverse(S({0, 1}, 1)), NonInvertibleSeries);
  // orders propagate as the minimum
  CHECK(series_mul(S({1, 1}, 1), S({1, 1, 1}, 2)).order() == 1);
}

TEST_CASE("series shift") {
  Rational c = rat(3, 7);
  auto s = series_shift(S({1, 1, 0, 0}, 3), c);
  CHECK(s == TruncSeries({Rational(1), Rational(1), -c, c * c}, 3));
  auto a = S({1, 4, -3, 2, 9}, 4);
  CHECK(series_shift(a, 0) == a);
  CHECK(series_shift(series_shift(a, c), -c) == a);
}

TEST_CASE("series invariants on random inputs") {
  std::mt19937 gen(7);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    int K = 5;
    std::vector<Rational> x(6), y(6);
    for (int k = 0; k <= K; ++k) {
      x[static_cast<size_t>(k)] = rat(d(gen), 1 + (d(gen) + 5) % 3);
      y[static_cast<size_t>(k)] = rat(d(gen), 1);
    }
    x[0] = rat(1 + (d(gen) + 5), 2);
    TruncSeries a(x, K), b(y, K);
    CHECK(series_mul(a, series_inverse(a)) == TruncSeries::one(K));
    Rational c = rat(d(gen), 3);
    CHECK(series_shift(series_mul(a, b), c) == series_mul(series_shift(a, c), series_shift(b, c)));
  }
}

TEST_CASE("polynomials and rational functions") {
  UPoly x = UPoly::x();
  UPoly p = (x - Rational(1)) * (x + Rational(2)) * (x * Rational(2) - Rational(3));
  auto roots = rational_roots(p * (x - Rational(1)));
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -2);
  CHECK(roots[1] == 1);
  CHECK(roots[2] == rat(3, 2));
  CHECK(rational_roots(x * x + Rational(1)).empty());

  RationalFunction f(x * x - Rational(1), x - Rational(1));
  CHECK(f == RationalFunction(x + Rational(1), Rational(1)));
  CHECK(!RationalFunction(Rational(1), x).eval(0));
  // 1/(u - 2) = u^-1 + 2u^-2 + 4u^-3
  auto e = RationalFunction(Rational(1), x - Rational(2)).expand(3);
  CHECK(e == S({0, 1, 2, 4}, 3));
  RationalFunction g(x + Rational(3), x * x + Rational(5));
  CHECK((f * g) / g == f);
  CHECK(g.compose_affine(-1, 0).eval(2) == g.eval(-2));
}

namespace {

// Dense bivariate polynomial used as the symbolic side of the cross-check.
using Bi = std::map<std::pair<int, int>, Rational>;

Bi bmul(const Bi& a, const Bi& b) {
  Bi c;
  for (const auto& [ea, x] : a)
    for (const auto& [eb, y] : b) c[{ea.first + eb.first, ea.second + eb.second}] += x * y;
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

Rational beval(const Bi& a, const Rational& u, const Rational& v) {
  Rational s(0);
  for (const auto& [e, x] : a) {
    Rational t = x;
    for (int k = 0; k < e.first; ++k) t *= u;
    for (int k = 0; k < e.second; ++k) t *= v;
    s += t;
  }
  return s;
}

Bi random_linear(std::mt19937& gen) {
  std::uniform_int_distribution<int> d(-2, 2);
  Bi p;
  for (auto e : {std::pair{0, 0}, std::pair{1, 0}, std::pair{0, 1}}) {
    int c = d(gen);
    if (c) p[e] = c;
  }
  return p;
}

}  // namespace

TEST_CASE("certification agrees with symbolic expansion up to total degree 4") {
  std::mt19937 gen(11);
  int agreements = 0, trues = 0;
  for (int trial = 0; trial < 150; ++trial) {
    // products of linear factors, sometimes regrouped to force equality
    std::vector<Bi> fs;
    for (int k = 0; k < 4; ++k) fs.push_back(random_linear(gen));
    Bi lhs = bmul(bmul(fs[0], fs[1]), bmul(fs[2], fs[3]));
    Bi rhs;
    if (trial % 3 == 0) {
      rhs = bmul(fs[3], bmul(fs[2], bmul(fs[1], fs[0])));
    } else {
      std::vector<Bi> gs = fs;
      gs[static_cast<size_t>(trial % 4)] = random_linear(gen);
      rhs = bmul(bmul(gs[0], gs[1]), bmul(gs[2], gs[3]));
    }
    bool symbolic = lhs == rhs;
    auto L = [&](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({beval(lhs, u, v)}); };
    auto R = [&](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({beval(rhs, u, v)}); };
    bool cert = certify_bivariate_identity(L, R, {4, 4});
    CHECK(cert == symbolic);
    agreements += cert == symbolic;
    trues += symbolic;
  }
  CHECK(agreements == 150);
  CHECK(trues >= 50);
}

TEST_CASE("certification basic cases and poles") {
  auto mk = [](auto f) {
    return [f](const Rational& u, const Rational& v) -> std::optional<std::vector<Rational>> { return f(u, v); };
  };
  auto diffsq = mk([](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({(u - v) * (u + v)}); });
  auto sq = mk([](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({u * u - v * v}); });
  CHECK(certify_bivariate_identity(diffsq, sq, {2, 2}));
  auto a = mk([](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({u - v}); });
  auto b = mk([](const Rational& u, const Rational& v) { return std::optional<std::vector<Rational>>({u + v}); });
  CHECK(!certify_bivariate_identity(a, b, {1, 1}));
  // 1/(u - v - 1) with a pole line placed on the first grid u value
  auto pf = mk([](const Rational& u, const Rational& v) -> std::optional<std::vector<Rational>> {
    Rational d = u - v - 1;
    if (d == 0 || u == rat(13, 3)) return std::nullopt;
    return std::vector<Rational>{1 / d};
  });
  CertifyStats st;
  CHECK(certify_bivariate_identity(pf, pf, {3, 3}, &st));
  CHECK(st.poles_skipped > 0);
  auto never = mk([](const Rational&, const Rational&) -> std::optional<std::vector<Rational>> { return std::nullopt; });
  CHECK_THROWS_AS(certify_bivariate_identity(never, never, {1, 1}), GridExhausted);
}

TEST_CASE("dense linear algebra") {
  QMatrix m(3, 3);
  m(0, 0) = 2; m(0, 1) = 1; m(1, 1) = 3; m(2, 0) = 1; m(2, 2) = rat(1, 2);
  QMatrix inv = inverse(m);
  CHECK(m * inv == QMatrix::identity(3));
  CHECK(inv * m == QMatrix::identity(3));
  QMatrix s(2, 3);
  s(0, 0) = 1; s(0, 1) = 2; s(0, 2) = 3; s(1, 0) = 2; s(1, 1) = 4; s(1, 2) = 6;
  CHECK(rank(s) == 1);
  auto ns = nullspace(s);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(s(0, 0) * v[0] + s(0, 1) * v[1] + s(0, 2) * v[2] == 0);
  // charpoly of [[0,1],[-2,3]] is x^2 - 3x + 2
  QMatrix c(2, 2);
  c(0, 1) = 1; c(1, 0) = -2; c(1, 1) = 3;
  auto cp = charpoly(c);
  CHECK(cp == std::vector<Rational>{Rational(2), Rational(-3), Rational(1)});
  QMatrix k = kron(QMatrix::unit(2, 0, 1), QMatrix::unit(2, 1, 0));
  CHECK(k(1, 2) == 1);
  CHECK(SparseQMatrix::from_dense(m) * SparseQMatrix::from_dense(inv) == SparseQMatrix::identity(3));
}

TEST_CASE("sparse echelon matches dense rank and reduces members to zero") {
  std::mt19937 gen(3);
  std::uniform_int_distribution<int> d(-3, 3), col(0, 11);
  for (int trial = 0; trial < 20; ++trial) {
    SparseEchelon e(12);
    QMatrix dense(8, 12);
    std::vector<SparseVec> input;
    for (int r = 0; r < 8; ++r) {
      std::map<int, Rational> m;
      for (int k = 0; k < 3; ++k) m[col(gen)] += d(gen);
      SparseVec v;
      for (auto& [c, x] : m)
        if (x != 0) {
          v.emplace_back(c, x);
          dense(r, c) = x;
        }
      input.push_back(v);
      e.insert(v);
    }
    e.finalize();
    CHECK(e.rank() == rank(dense));
    for (const auto& v : input) CHECK(e.reduce(v).empty());
    for (const auto& row : e.rows()) {
      CHECK(row.back().second == 1);
      for (size_t k = 0; k + 1 < row.size(); ++k) CHECK(!e.is_pivot(row[k].first));
    }
  }
}
