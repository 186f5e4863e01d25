#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "yf/freealg.hpp"

using namespace yf;

namespace {

NCPoly t(int i, int j, int r) { return NCPoly::gen(i, j, r); }

NCPoly random_poly(std::mt19937& rng, int gens, int maxlen, int terms) {
  NCPoly p;
  std::uniform_int_distribution<int> len(0, maxlen), g(0, gens - 1), c(-3, 3);
  for (int k = 0; k < terms; ++k) {
    Word w;
    int l = len(rng);
    for (int m = 0; m < l; ++m) {
      int x = g(rng);
      w.push_back(make_gen(x % 2, (x / 2) % 2, 1 + x / 4));
    }
    p.add(w, c(rng));
  }
  return p;
}

bool is_identity_series(const MatSeries& m) {
  for (int k = 0; k <= m.K; ++k)
    for (int i = 0; i < m.N; ++i)
      for (int j = 0; j < m.N; ++j)
        if (!(m.at(k, i, j) == NCPoly(k == 0 && i == j ? 1 : 0))) return false;
  return true;
}

}  // namespace

TEST_CASE("word order and arithmetic") {
  WordLess less;
  Word a{make_gen(0, 1, 1), make_gen(0, 0, 1)}, b{make_gen(0, 0, 3)}, c{make_gen(1, 1, 1)};
  CHECK(less(c, a));
  CHECK(less(a, b));
  NCPoly p = t(0, 0, 1) * t(0, 1, 1) - t(0, 1, 1) * t(0, 0, 1);
  CHECK(p.size() == 2);
  CHECK(p.max_len() == 2);
  CHECK(p.max_sumr() == 2);
  CHECK((p - p).is_zero());
  CHECK(to_string(NCPoly()) == "0");
  Json j = ncpoly_json(t(0, 1, 2) * rat(1, 2));
  CHECK(j[0]["coeff"] == "1/2");
  CHECK(j[0]["word"][0] == Json::array({1, 2, 2}));
}

TEST_CASE("associativity and bilinearity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    NCPoly a = random_poly(rng, 8, 3, 4), b = random_poly(rng, 8, 3, 4), c = random_poly(rng, 8, 3, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * rat(2, 3)) * b == (a * b) * rat(2, 3));
  }
}

TEST_CASE("generic matrix") {
  MatSeries t2 = t_matrix(2, 1);
  std::set<Gen> gens;
  for (int k = 0; k <= 1; ++k)
    for (const auto& p : t2.c[k])
      for (const auto& [w, c] : p.terms())
        for (Gen g : w) gens.insert(g);
  CHECK(gens.size() == 4);
  MatSeries t3 = t_matrix(3, 2);
  gens.clear();
  for (const auto& row : t3.c)
    for (const auto& p : row)
      for (const auto& [w, c] : p.terms())
        for (Gen g : w) gens.insert(g);
  CHECK(gens.size() == 18);
  MatSeries t4 = t_matrix(2, 4);
  CHECK(t4.at(0, 0, 0) == NCPoly(1));
  CHECK(t4.at(3, 0, 0) == t(0, 0, 3));
  CHECK(t4.at(0, 0, 1).is_zero());
}

TEST_CASE("inverse") {
  MatSeries T = t_matrix(2, 3);
  MatSeries inv = mat_inverse(T);
  CHECK(is_identity_series(mat_mul(T, inv)));
  CHECK(is_identity_series(mat_mul(inv, T)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(inv.at(1, i, j) == -t(i, j, 1));
      NCPoly expect = -t(i, j, 2);
      for (int a = 0; a < 2; ++a) expect += t(i, a, 1) * t(a, j, 1);
      CHECK(inv.at(2, i, j) == expect);
    }
  MatSeries bad = T;
  bad.at(0, 0, 0) = NCPoly(2);
  CHECK_THROWS_AS(mat_inverse(bad), NonInvertible);
}

TEST_CASE("shift and transpose") {
  MatSeries T = t_matrix(2, 3);
  CHECK(mat_shift(T, 0).c == T.c);
  CHECK(mat_shift(mat_shift(T, rat(3, 2)), rat(-3, 2)).c == T.c);
  MatSeries s = mat_shift(T, 2);
  CHECK(s.at(1, 0, 1) == t(0, 1, 1));
  CHECK(s.at(2, 0, 1) == t(0, 1, 2) - t(0, 1, 1) * Rational(2));
  CHECK(s.at(3, 0, 1) == t(0, 1, 3) - t(0, 1, 2) * Rational(4) + t(0, 1, 1) * Rational(4));

  auto so = build_lie(Family::SO, 3);
  auto sp = build_lie(Family::SP, 4);
  for (const auto* d : {&so, &sp}) {
    MatSeries X = t_matrix(d->N, 2);
    MatSeries tt = transpose_t(X, d->idx);
    CHECK(transpose_t(tt, d->idx).c == X.c);
    for (int i = 0; i < d->N; ++i)
      for (int j = 0; j < d->N; ++j) CHECK(tt.at(1, d->idx.neg(j), d->idx.neg(i)) == X.at(1, i, j) * Rational(d->idx.theta(i, j)));
  }
  CHECK(sp.idx.theta(0, 3) == -1);
  CHECK(sp.idx.theta(0, 1) == 1);
  CHECK(so.idx.theta(0, 2) == 1);
}

TEST_CASE("coproduct") {
  int N = 2;
  TensorNCPoly d1 = coproduct(t(0, 1, 1), N);
  CHECK(d1 == TensorNCPoly::pure({t(0, 1, 1), NCPoly(1)}) + TensorNCPoly::pure({NCPoly(1), t(0, 1, 1)}));
  for (int r = 1; r <= 3; ++r)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        TensorNCPoly d = coproduct(t(i, j, r), N);
        CHECK(counit_leg(d, 0) == TensorNCPoly::leg(t(i, j, r), 1, 0));
        CHECK(counit_leg(d, 1) == TensorNCPoly::leg(t(i, j, r), 1, 0));
      }
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      TensorNCPoly d = coproduct(t(i, j, 2), N);
      CHECK(coproduct_leg(d, 0, N) == coproduct_leg(d, 1, N));
    }
  // algebra map on matrix products
  MatSeries T = t_matrix(N, 2);
  MatSeries TT = mat_mul(T, T);
  TensorMatSeries lhs = coproduct(TT);
  TensorMatSeries dT = coproduct(T);
  TensorMatSeries rhs = mat_mul(dT, dT, TensorNCPoly(2));
  CHECK(lhs.c == rhs.c);
}

TEST_CASE("m_f substitutions") {
  MatSeries T = t_matrix(2, 3);
  TruncSeries f({1, 2, -1, 5}, 3), g({1, rat(1, 2), 0, 1}, 3);
  MatSeries mf = apply_mf(T, f);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(mf.at(1, i, j) == t(i, j, 1) + NCPoly(i == j ? 2 : 0));
      for (int k = 0; k <= 3; ++k) {
        NCPoly e;
        for (int b = 0; b <= k; ++b) e += T.at(k - b, i, j) * f[b];
        CHECK(mf.at(k, i, j) == e);
      }
    }
  CHECK(apply_mf(T, TruncSeries::one(3)).c == T.c);
  MatSeries comp = apply(apply_mf(T, g), mf_substitution(f));
  CHECK(comp.c == apply_mf(T, series_mul(f, g)).c);
  // substitutions respect products
  MatSeries prod = mat_mul(T, mat_shift(T, 1));
  CHECK(apply_mf(prod, f).c == mat_mul(apply_mf(T, f), apply_mf(mat_shift(T, 1), f)).c);
}

TEST_CASE("antipode") {
  Substitution S = antipode(2, 3);
  MatSeries T = t_matrix(2, 3);
  MatSeries ST = apply(T, S);
  CHECK(ST.c == mat_inverse(T).c);
  // S is an antihomomorphism: S(T) T = 1 follows from m(S (x) id) Delta = eps
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      NCPoly acc;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b <= 2; ++b) acc += S(T.at(b, i, a)) * T.at(2 - b, a, j);
      CHECK(acc.is_zero());
    }
}
