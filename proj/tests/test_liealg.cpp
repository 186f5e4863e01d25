#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yf/liealg.hpp"

using namespace yf;

namespace {

struct Case {
  Family f;
  int N;
};

std::vector<Case> small_cases() {
  std::vector<Case> cs;
  for (int N = 2; N <= 6; ++N) cs.push_back({Family::SL, N});
  for (int N = 3; N <= 6; ++N) cs.push_back({Family::SO, N});
  for (int N = 2; N <= 6; N += 2) cs.push_back({Family::SP, N});
  return cs;
}

std::string label(const Case& c) { return family_name(c.f) + std::to_string(c.N); }

QMatrix perm(int N) {
  QMatrix p(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p(i * N + j, j * N + i) = 1;
  return p;
}

QMatrix q_matrix(const LieAlgebraData& d) {
  int N = d.N;
  QMatrix q(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) q(i * N + d.idx.neg(i), j * N + d.idx.neg(j)) = d.idx.theta(i, j);
  return q;
}

void check_report(const Report& r) {
  INFO(r.to_json().dump());
  CHECK(r.pass());
}

}  // namespace

TEST_CASE("dimensions and kappa") {
  CHECK(build_lie(Family::SL, 2).dim() == 3);
  CHECK(build_lie(Family::SP, 4).dim() == 10);
  CHECK(build_lie(Family::SO, 6).dim() == 15);
  CHECK(build_lie(Family::SL, 5).dim() == 24);
  CHECK(*build_lie(Family::SO, 5).kappa == rat(3, 2));
  CHECK(*build_lie(Family::SP, 4).kappa == 3);
  CHECK_FALSE(build_lie(Family::SL, 3).kappa.has_value());
  CHECK_FALSE(build_lie(Family::SO, 4).simple);
  CHECK(build_lie(Family::SO, 5).simple);
  CHECK_THROWS_AS(build_lie(Family::SP, 3), InvalidAlgebra);
  CHECK_THROWS_AS(build_lie(Family::SO, 2), InvalidAlgebra);
  CHECK_THROWS_AS(build_lie(Family::SL, 1), InvalidAlgebra);
}

TEST_CASE("form is invariant and basis antisymmetric under transpose") {
  for (auto c : small_cases()) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    int n = d.dim();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        CHECK(d.form(d.basis[a], d.dual[b]) == (a == b ? 1 : 0));
        if (c.f != Family::SL) CHECK(d.transpose(d.basis[a]) == d.basis[a] * Rational(-1));
      }
    for (int a = 0; a < n && a < 4; ++a)
      for (int b = 0; b < n; ++b)
        for (int e = 0; e < n; ++e) {
          const auto &x = d.basis[a], &y = d.basis[b], &z = d.basis[e];
          CHECK(d.form(x, commutator(y, z)) == d.form(commutator(x, y), z));
        }
  }
}

TEST_CASE("Casimir in the vector representation") {
  for (auto c : small_cases()) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    auto cas = casimir(d);
    int N = c.N;
    if (c.f == Family::SL) {
      CHECK(cas.omega_rho == perm(N) - QMatrix::identity(N * N) * rat(1, N));
      CHECK(cas.c_g == 2 * N);
    } else {
      CHECK(cas.omega_rho == perm(N) - q_matrix(d));
      CHECK(cas.c_g == 4 * *d.kappa);
    }
    QMatrix id = QMatrix::identity(N);
    for (const auto& x : d.basis) CHECK(commutator(cas.omega_rho, kron(x, id) + kron(id, x)).is_zero());
  }
}

TEST_CASE("Omega does not depend on the basis") {
  for (auto c : {Case{Family::SL, 3}, Case{Family::SO, 5}, Case{Family::SP, 4}}) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    std::vector<QMatrix> nb;
    int n = d.dim();
    for (int a = 0; a < n; ++a) {
      QMatrix x = d.basis[a] * Rational(a + 2);
      if (a + 1 < n) x += d.basis[a + 1] * rat(1, 3);
      nb.push_back(x);
    }
    auto d2 = with_basis(d, nb);
    auto c1 = casimir(d), c2 = casimir(d2);
    CHECK(c1.omega_rho == c2.omega_rho);
    CHECK(c1.omega_op == c2.omega_op);
    CHECK(c1.c_g == c2.c_g);
    check_report(verify_classical_presentation(d2, vector_rep(d2)));
  }
}

TEST_CASE("decomposition of gl(V)") {
  auto sl2 = build_lie(Family::SL, 2);
  auto dec = decompose_ad(sl2, vector_rep(sl2));
  CHECK(dec.dim_ad() == 3);
  CHECK(dec.dim_eg() == 1);
  CHECK(dec.dim_w() == 0);

  auto so3 = build_lie(Family::SO, 3);
  dec = decompose_ad(so3, vector_rep(so3));
  CHECK(dec.dim_ad() == 3);
  CHECK(dec.dim_eg() == 1);
  CHECK(dec.dim_w() == 5);
  REQUIRE(dec.w_parts.size() == 1);
  for (const auto& v : dec.w_parts[0].first) {
    QMatrix m = QMatrix::from_vec(3, 3, v);
    CHECK(so3.transpose(m) == m);
    CHECK(m.trace() == 0);
  }

  for (auto c : small_cases()) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    auto cas = casimir(d);
    auto dc = decompose_ad(d, vector_rep(d));
    int n2 = c.N * c.N;
    CHECK(dc.C * dc.A == QMatrix::identity(n2));
    CHECK(dc.A * dc.C == QMatrix::identity(n2));
    REQUIRE(dc.dim_eg() == 1);
    QMatrix e = QMatrix::from_vec(c.N, c.N, dc.eg_part[0]);
    Rational s;
    CHECK(scalar_of_identity(e, &s));
    auto apply = [&](const std::vector<Rational>& v) {
      std::vector<Rational> r(v.size());
      for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) r[i] += cas.omega_op(i, j) * v[j];
      return r;
    };
    for (const auto& v : dc.ad_part) {
      auto w = apply(v);
      for (int i = 0; i < n2; ++i) CHECK(w[i] == cas.c_g * v[i]);
    }
    for (const auto& v : dc.eg_part)
      for (const auto& x : apply(v)) CHECK(x == 0);
    for (const auto& [basis, ev] : dc.w_parts) {
      CHECK(ev != 0);
      for (const auto& v : basis) {
        auto w = apply(v);
        for (int i = 0; i < n2; ++i) CHECK(w[i] == ev * v[i]);
      }
    }
    CHECK(dc.dim_ad() + dc.dim_eg() + dc.dim_w() == n2);
  }
}

TEST_CASE("classical presentation") {
  for (auto c : small_cases()) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    check_report(verify_classical_presentation(d, vector_rep(d), 3));
  }
}

TEST_CASE("perturbed F violates the bracket relation") {
  auto d = build_lie(Family::SL, 3);
  auto r = verify_classical_presentation(d, vector_rep(d), 11);
  const CheckItem* neg = nullptr;
  for (const auto& it : r.items)
    if (it.name == "negative-control") neg = &it;
  REQUIRE(neg);
  CHECK(neg->pass);
}

TEST_CASE("current presentation") {
  auto sl2 = build_lie(Family::SL, 2);
  check_report(verify_current_presentation(sl2, vector_rep(sl2), 3));
  auto so5 = build_lie(Family::SO, 5);
  check_report(verify_current_presentation(so5, vector_rep(so5), 2));
  auto sp4 = build_lie(Family::SP, 4);
  check_report(verify_current_presentation(sp4, vector_rep(sp4), 1));
  CHECK_THROWS(verify_current_presentation(sl2, vector_rep(sl2), 0));
}

TEST_CASE("extension split") {
  for (auto c : {Case{Family::SL, 2}, Case{Family::SL, 3}, Case{Family::SO, 3}, Case{Family::SO, 5}, Case{Family::SP, 4}}) {
    CAPTURE(label(c));
    auto d = build_lie(c.f, c.N);
    auto r = verify_extension_split(d, vector_rep(d));
    check_report(r);
    CHECK(r.extra["dim_E"] == 1);
    if (c.f == Family::SO && c.N == 5)
      for (const auto& it : r.items)
        if (it.name == "dim-gI") CHECK(it.detail["upper"] == 11);
  }
  auto sl2 = build_lie(Family::SL, 2);
  auto twisted = shifted_rep(vector_rep(sl2), 1);
  CHECK(twisted.rho_J[0] == twisted.rho_X[0]);
  check_report(verify_extension_split(sl2, twisted));
}

TEST_CASE("Yangian module relations") {
  auto sl2 = build_lie(Family::SL, 2);
  check_report(verify_yangian_module(sl2, vector_rep(sl2)));
  auto so5 = build_lie(Family::SO, 5);
  check_report(verify_yangian_module(so5, vector_rep(so5)));
  check_report(verify_yangian_module(so5, shifted_rep(vector_rep(so5), 1)));
  check_report(verify_yangian_module(sl2, shifted_rep(vector_rep(sl2), rat(-2, 3))));
  auto so4 = build_lie(Family::SO, 4);
  check_report(verify_yangian_module(so4, vector_rep(so4)));

  // a J that is not equivariant is rejected
  auto bad = vector_rep(sl2);
  bad.rho_J[0] = sl2.basis[1];
  auto r = verify_yangian_module(sl2, bad);
  CHECK_FALSE(r.pass());
}

TEST_CASE("cubic right-hand side is not identically zero") {
  auto adjoint = [](const LieAlgebraData& d) {
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
  };
  auto yj3 = [](const Report& r) {
    for (const auto& it : r.items)
      if (it.name == "YJ:3") return it.pass;
    return false;
  };
  auto sl2 = build_lie(Family::SL, 2);
  CHECK(yj3(verify_yangian_module(sl2, adjoint(sl2))));
  auto sl3 = build_lie(Family::SL, 3);
  CHECK_FALSE(yj3(verify_yangian_module(sl3, adjoint(sl3))));
}
