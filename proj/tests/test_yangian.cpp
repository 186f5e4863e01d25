#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "yf/yangian.hpp"

using namespace yf;

namespace {

NCPoly t(int i, int j, int r) { return NCPoly::gen(i, j, r); }

bool contains(const std::vector<NCPoly>& rels, const NCPoly& p) {
  for (const auto& r : rels)
    if (r == p || r == p * Rational(-1)) return true;
  return false;
}

void require_pass(const Report& r) {
  INFO(r.to_json().dump());
  CHECK(r.pass());
}

}  // namespace

TEST_CASE("RTT relations for sl_2 at order 2") {
  auto p = rtt_relations(Family::SL, 2, 2);
  CHECK(p.relations.size() == 6);
  // [t_ij^(1), t_kl^(1)] = delta_kj t_il^(1) - delta_il t_kj^(1)
  CHECK(contains(p.relations, commutator(t(0, 0, 1), t(0, 1, 1)) - t(0, 1, 1)));
  CHECK(contains(p.relations, commutator(t(0, 1, 1), t(1, 0, 1)) - t(0, 0, 1) + t(1, 1, 1)));
  for (const auto& r : p.relations) CHECK(r.max_sumr() <= 2);
}

TEST_CASE("relations vanish on evaluation modules") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (auto [f, N] : {std::pair{Family::SL, 2}, std::pair{Family::SL, 3}, std::pair{Family::SO, 3}, std::pair{Family::SP, 2}}) {
    auto p = rtt_relations(f, N, 3);
    for (int k = 1; k <= 2; ++k) {
      std::vector<Rational> shifts;
      for (int s = 0; s < k; ++s) shifts.push_back(rat(num(rng), den(rng)));
      Evaluator ev = evaluation_module(p, k, shifts, 3);
      for (const auto& r : p.relations) CHECK(ev(r).is_zero());
      CHECK_FALSE(ev(t(0, 0, 1)).is_zero());
    }
  }
  auto p = rtt_relations(Family::SL, 2, 2);
  CHECK_THROWS_AS(evaluation_module(p, 2, {rat(0)}, 2), std::invalid_argument);
}

TEST_CASE("closure membership and normal forms") {
  auto p = rtt_relations(Family::SL, 2, 3);
  RelationClosure cl(p, 2, 2, false);
  CHECK(cl.is_in_ideal(commutator(t(0, 0, 1), t(0, 1, 1)) - t(0, 1, 1)));
  CHECK(cl.normal_form(NCPoly()).is_zero());
  for (const auto& r : p.relations)
    if (cl.fits(r)) CHECK(cl.is_in_ideal(r));
  CHECK_FALSE(cl.is_in_ideal(t(0, 0, 1)));
  CHECK_FALSE(cl.is_in_ideal(commutator(t(0, 0, 1), t(0, 1, 1))));
  NCPoly nf = cl.normal_form(t(0, 1, 1) * t(0, 0, 1));
  CHECK(cl.is_in_ideal(nf - t(0, 1, 1) * t(0, 0, 1)));
  CHECK_THROWS_AS(cl.normal_form(t(0, 0, 3)), OutOfBounds);
  CHECK_THROWS_AS(cl.normal_form(t(0, 0, 1) * t(0, 0, 1) * t(0, 0, 1)), OutOfBounds);

  ClosureOptions tiny;
  tiny.max_columns = 100;
  CHECK_THROWS_AS(RelationClosure(p, 3, 3, false, tiny), BoundsTooLarge);
  CHECK_THROWS_AS(RelationClosure(p, 0, 2, false), std::invalid_argument);
}

TEST_CASE("closure without relations") {
  auto p = rtt_relations(Family::SL, 2, 2);
  p.relations.clear();
  RelationClosure cl(p, 2, 2, false);
  CHECK(cl.is_in_ideal(NCPoly()));
  CHECK_FALSE(cl.is_in_ideal(NCPoly(1)));
  CHECK_FALSE(cl.is_in_ideal(commutator(t(0, 0, 1), t(0, 1, 1)) - t(0, 1, 1)));
  // 1 + 4 + 16 words of length <= 2 at sum r <= 1 ... and t^(2)
  CHECK(cl.slice_dimension() == 1 + 4 + 4 + 16);
}

TEST_CASE("membership is monotone in the bounds") {
  auto p = rtt_relations(Family::SL, 2, 4);
  RelationClosure small(p, 2, 3, false), big(p, 4, 4, false);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3), pick(0, 3);
  std::vector<NCPoly> rels;
  for (const auto& r : p.relations)
    if (r.max_sumr() <= 2) rels.push_back(r);
  std::uniform_int_distribution<size_t> which(0, rels.size() - 1);
  int members = 0;
  for (int n = 0; n < 50; ++n) {
    NCPoly x;
    for (int k = 0; k < 3; ++k) {
      NCPoly left = pick(rng) == 0 ? t(pick(rng) % 2, pick(rng) % 2, 1) : NCPoly(1);
      x += left * rels[which(rng)] * Rational(coef(rng));
    }
    if (n % 5 == 0) x += t(0, 1, 1) * Rational(1 + pick(rng));
    if (!small.fits(x)) continue;
    bool a = small.is_in_ideal(x), b = big.is_in_ideal(x);
    if (a) CHECK(b);
    members += a;
  }
  CHECK(members > 0);
}

TEST_CASE("slice dimensions match the PBW count") {
  CHECK(pbw_count(4, 1, 1) == 5);
  CHECK(pbw_count(4, 2, 2) == 1 + 4 + 4 + 10);
  CHECK(pbw_count(3, 3, 3) == 1 + 3 + 3 + 6 + 3 + 9 + 10);

  auto sl2 = rtt_relations(Family::SL, 2, 5);
  RelationClosure one(sl2, 3, 1, false);
  CHECK(one.slice_dimension() == 5);
  for (auto [L, R] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}})
    for (bool q : {false, true}) {
      RelationClosure cl(sl2, L, R, q);
      CAPTURE(L);
      CAPTURE(R);
      CAPTURE(q);
      CHECK(cl.slice_dimension() == pbw_count(sl2, L, R, q));
    }
  RelationClosure big(sl2, 3, 4, false);
  CHECK(big.slice_dimension(2, 3) == pbw_count(sl2, 2, 3, false));
  CHECK(big.slice_dimension(3, 3) == pbw_count(sl2, 3, 3, false));

  auto sp2 = rtt_relations(Family::SP, 2, 4);
  for (bool q : {false, true}) {
    RelationClosure cl(sp2, 2, 3, q);
    CHECK(cl.slice_dimension() == pbw_count(sp2, 2, 3, q));
  }
  auto so3 = rtt_relations(Family::SO, 3, 4);
  RelationClosure so(so3, 2, 2, true);
  require_pass(verify_pbw(so3, so));
  CHECK(pbw_count(so3, 2, 2, true) == 13);
}

TEST_CASE("central series") {
  auto p = rtt_relations(Family::SL, 2, 4);
  auto cs = z_series(p, 4);
  CHECK(cs.z[0] == NCPoly(1));
  CHECK(cs.z[1].is_zero());
  Evaluator ev = evaluation_module(p, 1, {rat(0)}, 4);
  for (int r = 0; r <= 4; ++r) {
    Rational s;
    CHECK(scalar_of_identity(ev(cs.z[static_cast<size_t>(r)]), &s));
  }
  RelationClosure cl(p, 4, 4, false);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(cl.is_in_ideal(commutator(cl.normal_form(cs.z[2]), t(i, j, 1))));
  require_pass(verify_center(p, cl, cs, 3, 1));
}

TEST_CASE("y from z") {
  auto p = rtt_relations(Family::SL, 3, 2);
  CentralSeries cs = y_from_z(z_series(p, 2), 5);
  CHECK(cs.y[1] == CPoly::sym(2) * (2 / p.c_g()));
  for (const auto& r : y_residual(cs, 5)) CHECK(r.is_zero());
  // z = 1 gives y = 1
  std::vector<Rational> zero(8, Rational(0));
  CHECK(cs.y[0].eval(zero) == 1);
  for (int r = 1; r <= 5; ++r) CHECK(cs.y[static_cast<size_t>(r)].eval(zero) == 0);
  CentralSeries bad;
  CHECK_THROWS_AS(y_from_z(bad, 2), std::invalid_argument);
  require_pass(verify_y(cs, 5));
}

TEST_CASE("quantum determinant and symmetry series") {
  auto sl2 = rtt_relations(Family::SL, 2, 4);
  auto d = qdet(sl2, 2);
  CHECK(d[0] == NCPoly(1));
  CHECK(d[1] == t(0, 0, 1) + t(1, 1, 1));
  RelationClosure cl(sl2, 4, 4, false);
  require_pass(verify_qdet(sl2, cl, z_series(sl2, 3), 3, 1));

  auto so3 = rtt_relations(Family::SO, 3, 4);
  CHECK_THROWS_AS(qdet(so3, 2), WrongFamily);
  CHECK_THROWS_AS(symmetry_matrix(sl2, 2), WrongFamily);
  RelationClosure so(so3, 3, 3, false);
  require_pass(verify_symmetry(so3, so, z_series(so3, 3), 3));
}

TEST_CASE("Hopf structure and fixed points") {
  auto p = rtt_relations(Family::SL, 2, 4);
  RelationClosure cl(p, 3, 3, false);
  auto cs = z_series(p, 3);
  Report h = verify_hopf(p, cl, cs, 3);
  require_pass(h);
  for (const auto& f : {TruncSeries({1}, 0), TruncSeries({1, 1}, 1), TruncSeries({1, 1, 1}, 2)})
    require_pass(verify_fixed_point(p, cl, cs, f, 2));
  CHECK(h.to_json().dump() == verify_hopf(p, cl, cs, 3).to_json().dump());
}

TEST_CASE("low-order structure") {
  auto p = rtt_relations(Family::SL, 2, 4);
  RelationClosure cl(p, 3, 4, false), q(p, 2, 4, true);
  require_pass(verify_low_order_structure(p, cl, &q, z_series(p, 4)));
  for (const auto& x : b_table(p.lie, vector_rep(p.lie))) CHECK(x == 0);
}
