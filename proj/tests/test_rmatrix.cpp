#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yf/rmatrix.hpp"

using namespace yf;

namespace {

RationalFunction inv_u() { return RationalFunction(UPoly(Rational(1)), UPoly::x()); }

Representation adjoint_rep(const LieAlgebraData& d) {
  Representation r;
  int n = d.dim();
  r.dim = n;
  for (int a = 0; a < n; ++a) {
    QMatrix m(n, n);
    for (int b = 0; b < n; ++b)
      for (const auto& [g, x] : d.bracket[a * n + b]) m(g, b) = x;
    r.rho_X.push_back(m);
    r.rho_J.emplace_back(n, n);
  }
  return r;
}

}  // namespace

TEST_CASE("closed forms") {
  RMat r = yang_r(2);
  CHECK(r.entry(0, 0) == RationalFunction(1) - inv_u());
  CHECK(r.entry(1, 2) == -inv_u());
  CHECK(r.entry(1, 1) == RationalFunction(1));
  CHECK(r.expand(3).coeffs[0] == QMatrix::identity(4));

  for (auto [f, N] : {std::pair{Family::SO, 3}, {Family::SO, 4}, {Family::SO, 5}, {Family::SP, 2}, {Family::SP, 4}, {Family::SP, 6}}) {
    auto d = build_lie(f, N);
    QMatrix q = q_matrix(d);
    CHECK(q * q == q * Rational(N));
    CHECK(sosp_r(f, N).expand(2).coeffs[0] == QMatrix::identity(N * N));
  }
  CHECK(*build_lie(Family::SO, 3).kappa == rat(1, 2));
  CHECK(*build_lie(Family::SP, 4).kappa == 3);
}

TEST_CASE("quantum Yang-Baxter equation") {
  for (int N = 2; N <= 4; ++N) CHECK(check_qybe(yang_r(N)));
  CHECK(check_qybe(sosp_r(Family::SO, 3)));
  CHECK(check_qybe(sosp_r(Family::SO, 5)));
  CHECK(check_qybe(sosp_r(Family::SP, 4)));
  // rescaling u keeps Yang's solution a solution
  RMat scaled = RMat::from_terms(2, {{QMatrix::identity(4), RationalFunction(1)}, {perm_matrix(2), inv_u() * RationalFunction(-2)}});
  CHECK(check_qybe(scaled));
  auto sides_at = [](const RMat& r, int N, long u, long v) {
    auto a = *r.eval(u - v), b = *r.eval(u), c = *r.eval(v);
    QMatrix id = QMatrix::identity(N), p23 = kron(id, perm_matrix(N));
    QMatrix r12 = kron(a.to_dense(), id), r23 = kron(id, c.to_dense());
    QMatrix r13 = p23 * kron(b.to_dense(), id) * p23;
    return r12 * r13 * r23 == r23 * r13 * r12;
  };
  CHECK(sides_at(scaled, 2, 3, 1));
  // wrong pole for the Q term
  auto so3 = build_lie(Family::SO, 3);
  RMat wrong = RMat::from_terms(3, {{QMatrix::identity(9), RationalFunction(1)},
                                    {perm_matrix(3), -inv_u()},
                                    {q_matrix(so3), RationalFunction(UPoly(Rational(1)), UPoly(std::vector<Rational>{-2, 1}))}});
  CHECK_FALSE(check_qybe(wrong));
  CHECK_FALSE(sides_at(wrong, 3, 5, 1));
}

TEST_CASE("unitarity") {
  for (int N = 2; N <= 4; ++N) {
    RationalFunction f = check_unitarity(yang_r(N));
    CHECK(f == RationalFunction(1) - inv_u() * inv_u());
  }
  RationalFunction f = check_unitarity(sosp_r(Family::SO, 3));
  CHECK(f.num().degree() >= 0);
  check_unitarity(sosp_r(Family::SP, 4));
  CHECK(check_unitarity(RMat::from_terms(2, {{QMatrix::identity(4), RationalFunction(1)}})) == RationalFunction(1));
  RMat skew = RMat::from_terms(2, {{QMatrix::identity(4), RationalFunction(1)}, {QMatrix::unit(4, 0, 1), inv_u()}});
  CHECK_THROWS_AS(check_unitarity(skew), UnitarityFailure);
}

TEST_CASE("intertwiner solver") {
  auto sl2 = build_lie(Family::SL, 2);
  auto r1 = solve_intertwiner(sl2, vector_rep(sl2), 1);
  CHECK(r1.coeffs[1] == (perm_matrix(2) - QMatrix::identity(4) * rat(1, 2)) * Rational(-1));

  auto r3 = solve_intertwiner(sl2, vector_rep(sl2), 3);
  TruncSeries g = proportional_to(r3, yang_r(2));
  CHECK(g[0] == 1);
  CHECK(g[1] == rat(1, 2));

  auto so5 = build_lie(Family::SO, 5);
  auto s3 = solve_intertwiner(so5, vector_rep(so5), 3);
  CHECK_NOTHROW(proportional_to(s3, sosp_r(Family::SO, 5)));
  CHECK(expansion_check(s3, so5, vector_rep(so5)).pass());

  // the shifted module gives an R-matrix proportional to R(u + c)
  auto sh = solve_intertwiner(sl2, shifted_rep(vector_rep(sl2), 1), 3);
  CHECK_NOTHROW(proportional_to(sh, yang_r(2)));
}

TEST_CASE("proportionality") {
  RSeries r = yang_r(3).expand(4);
  TruncSeries one = proportional_to(r, r);
  CHECK(one == TruncSeries::one(4));
  RSeries scaled = r;
  for (int k = 1; k <= 4; ++k) scaled.coeffs[k] = r.coeffs[k] + r.coeffs[k - 1];
  TruncSeries g = proportional_to(scaled, r);
  CHECK(g[1] == 1);
  CHECK(g[2] == 0);
  CHECK_THROWS_AS(proportional_to(yang_r(2).expand(2), sosp_r(Family::SP, 2).expand(2)), NotProportional);
}

TEST_CASE("solver refusals") {
  auto sl2 = build_lie(Family::SL, 2);
  Representation twice;
  twice.dim = 4;
  auto v = vector_rep(sl2);
  for (int a = 0; a < 3; ++a) {
    twice.rho_X.push_back(kron(QMatrix::identity(2), v.rho_X[a]));
    twice.rho_J.emplace_back(4, 4);
  }
  CHECK_THROWS_AS(solve_intertwiner(sl2, twice, 2), NonIrreducible);
  auto sl3 = build_lie(Family::SL, 3);
  CHECK_THROWS_AS(solve_intertwiner(sl3, adjoint_rep(sl3), 3), NotAModule);
}

TEST_CASE("second-order expansion") {
  for (int N = 2; N <= 4; ++N) {
    auto d = build_lie(Family::SL, N);
    CHECK(expansion_check(yang_r(N), d, vector_rep(d)).pass());
  }
  auto so3 = build_lie(Family::SO, 3);
  CHECK(expansion_check(sosp_r(Family::SO, 3), so3, vector_rep(so3)).pass());
  auto sp4 = build_lie(Family::SP, 4);
  CHECK(expansion_check(sosp_r(Family::SP, 4), sp4, vector_rep(sp4)).pass());
  RSeries bad = sosp_r(Family::SO, 3).expand(2);
  bad.coeffs[2](0, 1) += 1;
  CHECK_FALSE(expansion_check(bad, so3, vector_rep(so3)).pass());
}
