// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Optional argument: path for a JSON file with the per-case details.
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>

#include "yf/yangian.hpp"

using namespace yf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Criterion {
  int id;
  std::string title;
  bool pass = true;
  double seconds = 0;
  Json cases = Json::array();

  // Records one case; `limit` is the per-case time budget in seconds (0: none).
  void record(const std::string& name, bool ok, double secs, double limit, Json detail = Json()) {
    bool in_time = limit <= 0 || secs < limit;
    pass = pass && ok && in_time;
    Json c{{"case", name}, {"pass", ok}, {"seconds", secs}};
    if (limit > 0) c["within_budget"] = in_time;
    if (!detail.is_null()) c["detail"] = std::move(detail);
    cases.push_back(std::move(c));
  }

  // Times fn, which returns a Report or a bool, and records the outcome.
  template <class F>
  void run(const std::string& name, double limit, F&& fn) {
    auto t0 = Clock::now();
    try {
      auto r = fn();
      double s = since(t0);
      if constexpr (std::is_same_v<decltype(r), Report>) {
        Json d;
        if (const CheckItem* bad = r.first_failure()) d = Json{{"failed_item", bad->name}, {"detail", bad->detail}};
        record(name, r.pass(), s, limit, d);
      } else {
        record(name, static_cast<bool>(r), s, limit);
      }
    } catch (const std::exception& e) {
      record(name, false, since(t0), limit, Json{{"exception", e.what()}});
    }
  }
};

struct Case {
  Family f;
  int N;
  std::string name() const { return family_name(f) + std::to_string(N); }
};

std::vector<Case> all_supported() {
  std::vector<Case> out;
  for (int N = 2; N <= 6; ++N) out.push_back({Family::SL, N});
  for (int N = 3; N <= 6; ++N) out.push_back({Family::SO, N});
  for (int N = 2; N <= 6; N += 2) out.push_back({Family::SP, N});
  return out;
}

// Q built straight from the index pairing i <-> N+1-i, with the SP signs.
QMatrix q_by_hand(Family f, int N) {
  QMatrix q(N * N, N * N);
  auto sgn = [&](int p) { return f == Family::SP && p < N / 2 ? -1 : 1; };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) q(i * N + (N - 1 - i), j * N + (N - 1 - j)) = sgn(i) * sgn(j);
  return q;
}

QMatrix swap_by_hand(int N) {
  QMatrix p(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p(i * N + j, j * N + i) = 1;
  return p;
}

Criterion c1() {
  Criterion c{1, "Casimir constants"};
  for (const auto& cs : all_supported()) {
    c.run(cs.name(), 1.0, [&] {
      LieAlgebraData lie = build_lie(cs.f, cs.N);
      CasimirData cas = casimir(lie);
      QMatrix P = swap_by_hand(cs.N);
      if (cs.f == Family::SL)
        return cas.omega_rho == P - QMatrix::identity(cs.N * cs.N) * rat(1, cs.N) && cas.c_g == 2 * cs.N;
      Rational kappa = cs.f == Family::SO ? rat(cs.N, 2) - 1 : Rational(cs.N / 2 + 1);
      return lie.kappa && *lie.kappa == kappa && cas.omega_rho == P - q_by_hand(cs.f, cs.N) && cas.c_g == 4 * kappa;
    });
  }
  return c;
}

std::vector<std::pair<std::string, RMat>> r_matrices() {
  std::vector<std::pair<std::string, RMat>> out;
  for (int N = 2; N <= 4; ++N) out.emplace_back("yang" + std::to_string(N), yang_r(N));
  for (int N = 3; N <= 6; ++N) out.emplace_back("so" + std::to_string(N), sosp_r(Family::SO, N));
  for (int N = 2; N <= 6; N += 2) out.emplace_back("sp" + std::to_string(N), sosp_r(Family::SP, N));
  return out;
}

Criterion c2() {
  Criterion c{2, "QYBE certification"};
  for (const auto& [name, R] : r_matrices()) c.run(name, 30.0, [&R = R] { return check_qybe(R); });
  return c;
}

Criterion c3() {
  Criterion c{3, "unitarity"};
  RationalFunction u2(UPoly(Rational(1)), UPoly(std::vector<Rational>{0, 0, 1}));
  for (const auto& [name, R] : r_matrices()) {
    bool yang = name.rfind("yang", 0) == 0;
    c.run(name, 5.0, [&, yang, &R = R] {
      RationalFunction f = check_unitarity(R);  // throws unless scalar
      return !yang || f == RationalFunction(1) - u2;
    });
  }
  return c;
}

Criterion c4() {
  Criterion c{4, "intertwiner solver reproduces the closed forms at K = 4"};
  for (Case cs : {Case{Family::SL, 2}, Case{Family::SL, 3}, Case{Family::SO, 3}, Case{Family::SO, 5}, Case{Family::SP, 4}})
    c.run(cs.name(), 60.0, [cs] {
      LieAlgebraData lie = build_lie(cs.f, cs.N);
      RSeries solved = solve_intertwiner(lie, vector_rep(lie), 4);
      RMat closed = cs.f == Family::SL ? yang_r(cs.N) : sosp_r(cs.f, cs.N);
      TruncSeries g = proportional_to(solved, closed);  // includes the back-multiplication check
      return g.order() == 4;
    });
  return c;
}

Criterion c5() {
  Criterion c{5, "PBW slice dimensions"};
  auto t0 = Clock::now();
  auto pair_case = [&](Family f, int N, int L, int R, bool q) {
    std::string name = std::string(q ? "Y_R(" : "X(") + family_name(f) + std::to_string(N) + ") L=" + std::to_string(L) +
                       " R=" + std::to_string(R);
    auto s0 = Clock::now();
    try {
      RTTPresentation p = rtt_relations(f, N, R + 2);
      RelationClosure cl(p, L, R, q);
      long sd = cl.slice_dimension();
      long pc = pbw_count(p, L, R, q);
      c.record(name, sd == pc, since(s0), 0, Json{{"slice_dimension", sd}, {"pbw_count", pc}});
    } catch (const std::exception& e) {
      c.record(name, false, since(s0), 0, Json{{"exception", e.what()}});
    }
  };
  for (auto [L, R] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}})
    for (bool q : {false, true}) pair_case(Family::SL, 2, L, R, q);
  for (auto [L, R] : {std::pair{2, 2}, std::pair{2, 3}})
    for (bool q : {false, true}) pair_case(Family::SO, 3, L, R, q);
  double total = since(t0);
  if (total >= 600) c.pass = false;
  c.cases.push_back(Json{{"case", "total"}, {"seconds", total}, {"within_budget", total < 600}});
  return c;
}

Criterion c6() {
  Criterion c{6, "central series"};
  c.run("sl2 r<=4 s<=2", 0, [] {
    RTTPresentation p = rtt_relations(Family::SL, 2, 6);
    RelationClosure cl(p, 6, 6, false);
    return verify_center(p, cl, z_series(p, 4), 4, 2);
  });
  c.run("so3 r<=3 s<=1", 0, [] {
    RTTPresentation p = rtt_relations(Family::SO, 3, 5);
    RelationClosure cl(p, 4, 4, false);
    return verify_center(p, cl, z_series(p, 3), 3, 1);
  });
  return c;
}

Criterion c7() {
  Criterion c{7, "grouplike z(u) modulo the tensor ideal"};
  c.run("sl2 r<=3", 0, [] {
    RTTPresentation p = rtt_relations(Family::SL, 2, 3);
    RelationClosure cl(p, 3, 3, false);
    return verify_hopf(p, cl, z_series(p, 3), 3);
  });
  return c;
}

Criterion c8() {
  Criterion c{8, "y-recursion to order 5"};
  for (Case cs : {Case{Family::SL, 2}, Case{Family::SL, 3}, Case{Family::SO, 3}, Case{Family::SP, 4}})
    c.run(cs.name(), 1.0, [cs] {
      RTTPresentation p = rtt_relations(cs.f, cs.N, 2);
      return verify_y(z_series(p, 2), 5);
    });
  return c;
}

Criterion c9() {
  Criterion c{9, "SL specialization: qdet central, z(u) = qdet ratio at u + N"};
  c.run("sl2 orders<=3", 0, [] {
    RTTPresentation p = rtt_relations(Family::SL, 2, 5);
    RelationClosure cl(p, 5, 5, false);
    return verify_qdet(p, cl, z_series(p, 3), 3, 2);
  });
  return c;
}

Criterion c10() {
  Criterion c{10, "SO/SP specialization: symmetry series scalar, z(u) = ratio"};
  c.run("so3 orders<=3", 0, [] {
    RTTPresentation p = rtt_relations(Family::SO, 3, 4);
    RelationClosure cl(p, 3, 3, false);
    return verify_symmetry(p, cl, z_series(p, 3), 3);
  });
  return c;
}

Criterion c11() {
  Criterion c{11, "fixed points of m_f"};
  RTTPresentation p = rtt_relations(Family::SL, 2, 3);
  RelationClosure cl(p, 3, 3, false);
  CentralSeries cs = z_series(p, 3);
  c.run("f = 1 + 1/u", 0, [&] { return verify_fixed_point(p, cl, cs, TruncSeries({1, 1}, 1), 2); });
  c.run("f = 1 + 1/u + 1/u^2", 0, [&] { return verify_fixed_point(p, cl, cs, TruncSeries({1, 1, 1}, 2), 2); });
  return c;
}

Criterion c12() {
  Criterion c{12, "classical layer"};
  auto t0 = Clock::now();
  for (const auto& cs : all_supported()) {
    LieAlgebraData lie = build_lie(cs.f, cs.N);
    Representation rep = vector_rep(lie);
    c.run(cs.name() + " classical", 0, [&] { return verify_classical_presentation(lie, rep); });
    c.run(cs.name() + " current D=3", 0, [&] { return verify_current_presentation(lie, rep, 3); });
    c.run(cs.name() + " extension split", 0, [&] { return verify_extension_split(lie, rep); });
    c.run(cs.name() + " yangian module", 0, [&] { return verify_yangian_module(lie, rep); });
  }
  double total = since(t0);
  if (total >= 60) c.pass = false;
  c.cases.push_back(Json{{"case", "total"}, {"seconds", total}, {"within_budget", total < 60}});
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::function<Criterion()>> all = {c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12};
  Json doc = Json::array();
  bool ok = true;
  for (const auto& fn : all) {
    auto t0 = Clock::now();
    Criterion c = fn();
    c.seconds = since(t0);
    ok = ok && c.pass;
    int failed = 0;
    for (const auto& x : c.cases)
      if ((x.contains("pass") && !x["pass"].get<bool>()) || (x.contains("within_budget") && !x["within_budget"].get<bool>()))
        ++failed;
    std::printf("criterion %2d: %s  %s (%zu cases, %d failing, %.2fs)\n", c.id, c.pass ? "PASS" : "FAIL", c.title.c_str(),
                c.cases.size(), failed, c.seconds);
    doc.push_back(Json{{"criterion", c.id}, {"title", c.title}, {"pass", c.pass}, {"seconds", c.seconds}, {"cases", c.cases}});
  }
  if (argc > 1) std::ofstream(argv[1]) << doc.dump(2) << "\n";
  return ok ? 0 : 1;
}
