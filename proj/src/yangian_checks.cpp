#include <algorithm>

#include "yf/yangian.hpp"

namespace yf {

namespace {

using Labeled = std::vector<std::pair<std::string, NCPoly>>;

Json short_poly(const NCPoly& p, size_t max_terms = 12) {
  Json all = ncpoly_json(p);
  if (all.size() <= max_terms) return all;
  Json cut = Json::array();
  for (size_t k = 0; k < max_terms; ++k) cut.push_back(all[k]);
  cut.push_back(Json{{"omitted_terms", all.size() - max_terms}});
  return cut;
}

std::string gen_label(int i, int j, int r) {
  return "t" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(r);
}

// One item: every element lies in the ideal.
void ideal_item(Report& out, const std::string& name, const RelationClosure& cl, const Labeled& elems) {
  for (const auto& [label, p] : elems) {
    if (!cl.fits(p)) {
      out.add(name, false, Json{{"element", label}, {"reason", "out of bounds"}, {"max_len", p.max_len()},
                                {"max_sumr", p.max_sumr()}});
      return;
    }
    NCPoly nf = cl.normal_form(p);
    if (!nf.is_zero()) {
      out.add(name, false, Json{{"element", label}, {"normal_form", short_poly(nf)}});
      return;
    }
  }
  out.add(name, true, Json{{"checked", elems.size()}});
}

NCPoly representative(const RelationClosure& cl, const NCPoly& p) { return cl.fits(p) ? cl.normal_form(p) : p; }

TensorNCPoly nf_pair(const RelationClosure& cl, const TensorNCPoly& x) {
  std::map<Word, NCPoly, WordLess> cache;
  auto nf = [&](const Word& w) -> const NCPoly& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, cl.normal_form(NCPoly::word(w))).first;
    return it->second;
  };
  TensorNCPoly out(2);
  for (const auto& [key, c] : x.terms()) {
    const NCPoly& a = nf(key[0]);
    const NCPoly& b = nf(key[1]);
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) out.add({wa, wb}, c * ca * cb);
  }
  return out;
}

bool tensor_fits(const RelationClosure& cl, const TensorNCPoly& x) {
  for (const auto& [key, c] : x.terms())
    for (const auto& w : key)
      if (!cl.fits(NCPoly::word(w))) return false;
  return true;
}

std::vector<NCPoly> scalar_series(const std::vector<NCPoly>& s, int K) {
  std::vector<NCPoly> out(s.begin(), s.begin() + std::min<size_t>(s.size(), static_cast<size_t>(K) + 1));
  out.resize(static_cast<size_t>(K) + 1);
  return out;
}

TruncSeries pad(const TruncSeries& f, int K) {
  std::vector<Rational> c(static_cast<size_t>(K) + 1);
  for (int k = 0; k <= std::min(K, f.order()); ++k) c[static_cast<size_t>(k)] = f[k];
  return TruncSeries(c, K);
}

Report make_report(const std::string& name, const RTTPresentation& pres, const RelationClosure& cl, int K) {
  Report out(name, family_name(pres.family()), pres.N());
  out.K = K;
  out.bounds = bounds_json(cl);
  return out;
}

// z_r acts on evaluation modules by scalars; collects them or reports a non-scalar image.
bool module_scalars(const RTTPresentation& pres, const CentralSeries& cs, int rmax, const std::vector<Rational>& shifts,
                    std::vector<Rational>* vals, const TruncSeries& f = TruncSeries()) {
  Evaluator ev(pres.R, shifts, rmax, f);
  vals->assign(static_cast<size_t>(rmax) + 1, Rational(0));
  for (int r = 0; r <= rmax; ++r) {
    Rational s;
    if (!scalar_of_identity(ev(cs.z[static_cast<size_t>(r)]), &s)) return false;
    (*vals)[static_cast<size_t>(r)] = s;
  }
  return true;
}

}  // namespace

Report verify_center(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int r_max,
                     int s_max) {
  Report out = make_report("center", pres, cl, cs.K);
  int N = pres.N();
  bool z1 = cs.K >= 1 && cs.z[1].is_zero();
  for (int i = 0; i < N && z1; ++i)
    for (int j = 0; j < N; ++j)
      if (!cs.Z.at(1, i, j).is_zero()) z1 = false;
  out.add("z1-vanishes-in-free-algebra", z1);

  for (int r = 2; r <= std::min(cs.K, cl.work_R()); ++r) {
    Labeled elems;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j && i == 0) continue;
        std::string label = "Z" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(r);
        elems.emplace_back(label, i == j ? cs.Z.at(r, i, i) - cs.Z.at(r, 0, 0) : cs.Z.at(r, i, j));
      }
    ideal_item(out, "Z-scalar-order-" + std::to_string(r), cl, elems);
  }

  std::vector<NCPoly> rep(static_cast<size_t>(cs.K) + 1);
  for (int r = 0; r <= cs.K; ++r) rep[static_cast<size_t>(r)] = representative(cl, cs.z[static_cast<size_t>(r)]);
  for (int r = 2; r <= r_max; ++r)
    for (int s = 1; s <= s_max; ++s) {
      std::string name = "central-z" + std::to_string(r) + "-t" + std::to_string(s);
      if (r > cs.K) {
        out.add(name, false, Json{{"reason", "z series not computed to this order"}});
        continue;
      }
      Labeled elems;
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          elems.emplace_back("[z" + std::to_string(r) + ", " + gen_label(k, l, s) + "]",
                             commutator(rep[static_cast<size_t>(r)], NCPoly::gen(k, l, s)));
      ideal_item(out, name, cl, elems);
    }

  if (cs.K >= 3) {
    // monomials 1, z2, z3, z2^2, z2 z3, z3^2
    const std::vector<std::pair<int, int>> exps = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    const std::vector<std::string> names = {"1", "z2", "z3", "z2^2", "z2 z3", "z3^2"};
    auto mono = [&](int a, int b) {
      NCPoly p(1);
      for (int k = 0; k < a; ++k) p = p * rep[2];
      for (int k = 0; k < b; ++k) p = p * rep[3];
      return p;
    };
    {
      std::map<Word, int, WordLess> colmap;
      std::vector<NCPoly> nfs;
      Json tested = Json::array(), untested = Json::array();
      for (size_t m = 0; m < exps.size(); ++m) {
        NCPoly p = mono(exps[m].first, exps[m].second);
        if (!cl.fits(p)) {
          untested.push_back(names[m]);
          continue;
        }
        tested.push_back(names[m]);
        nfs.push_back(cl.normal_form(p));
        for (const auto& [w, c] : nfs.back().terms()) colmap.emplace(w, 0);
      }
      int col = 0;
      for (auto& [w, c] : colmap) c = col++;
      SparseEchelon e(std::max(col, 1));
      int rk = 0;
      for (const auto& p : nfs) {
        SparseVec v;
        for (const auto& [w, c] : p.terms()) v.emplace_back(colmap.at(w), c);
        if (e.insert(v)) ++rk;
      }
      out.add("z-monomials-independent-in-slice", rk == static_cast<int>(nfs.size()),
              Json{{"tested", tested}, {"beyond_bounds", untested}, {"rank", rk}});
    }
    {
      // Vector modules alone can leave z2 at 0 (so_3), so some are twisted by m_f.
      const std::vector<std::vector<Rational>> shifts = {
          {}, {rat(0)}, {rat(1)}, {rat(2)}, {rat(-1)}, {rat(0), rat(0)}, {rat(0), rat(1)}, {rat(1), rat(3)}, {rat(-1), rat(1, 2)}};
      const std::vector<TruncSeries> twists = {TruncSeries(), TruncSeries({1, 1}, 1), TruncSeries({1, -2, 3}, 2)};
      QMatrix M(static_cast<int>(shifts.size() * twists.size()), static_cast<int>(exps.size()));
      bool scalar = true;
      int row = 0;
      for (const auto& f : twists)
        for (size_t s = 0; s < shifts.size() && scalar; ++s, ++row) {
          std::vector<Rational> v;
          scalar = module_scalars(pres, cs, 3, shifts[s], &v, f);
          if (!scalar) break;
          for (size_t m = 0; m < exps.size(); ++m) {
            Rational x = 1;
            for (int k = 0; k < exps[m].first; ++k) x *= v[2];
            for (int k = 0; k < exps[m].second; ++k) x *= v[3];
            M(row, static_cast<int>(m)) = x;
          }
        }
      int rk = scalar ? rank(M) : 0;
      out.add("z-monomials-independent-on-evaluation-modules", scalar && rk == static_cast<int>(exps.size()),
              Json{{"modules", shifts.size() * twists.size()}, {"rank", rk}, {"central_scalars", scalar}});
    }
  }

  {
    std::vector<Rational> v;
    bool scalar = module_scalars(pres, cs, cs.K, {rat(0)}, &v);
    out.add("Z-scalar-on-vector-module", scalar, Json{{"z", scalar ? rationals_json(v) : Json()}});
  }
  return out;
}

Report verify_y(const CentralSeries& cs, int K) {
  Report out("y-recursion", "", 0);
  out.K = K;
  CentralSeries solved = static_cast<int>(cs.y.size()) >= K + 1 ? cs : y_from_z(cs, K);
  out.add("y1-equals-2z2-over-cg", solved.y[1] == CPoly::sym(2) * (2 / cs.c_g),
          Json{{"y1", to_string(solved.y[1])}});
  auto res = y_residual(solved, K);
  bool zero = std::all_of(res.begin(), res.end(), [](const CPoly& p) { return p.is_zero(); });
  out.add("y-ratio-reproduces-z", zero);
  Json ys = Json::array();
  for (int r = 0; r <= K; ++r) ys.push_back(cpoly_json(solved.y[static_cast<size_t>(r)]));
  out.extra = Json{{"c_g", to_string(cs.c_g)}, {"y", ys}};
  return out;
}

Report verify_qdet(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order,
                   int s_max) {
  Report out = make_report("qdet", pres, cl, order);
  int N = pres.N();
  auto d = qdet(pres, order);
  for (int r = 1; r <= order; ++r) {
    NCPoly rep = representative(cl, d[static_cast<size_t>(r)]);
    Labeled elems;
    for (int s = 1; s <= s_max; ++s)
      for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
          elems.emplace_back("[qdet" + std::to_string(r) + ", " + gen_label(k, l, s) + "]",
                             commutator(rep, NCPoly::gen(k, l, s)));
    ideal_item(out, "qdet-central-order-" + std::to_string(r), cl, elems);
  }
  auto dm1 = gseries::shift(d, Rational(-1), order, NCPoly());
  auto ratio = gseries::mul(dm1, gseries::inverse_unipotent(d, order, NCPoly()), order, NCPoly());
  auto shifted = gseries::shift(ratio, Rational(N), order, NCPoly());
  if (cs.K < order) {
    out.add("z-equals-shifted-qdet-ratio", false, Json{{"reason", "z series not computed to this order"}});
  } else {
    Labeled elems;
    for (int r = 1; r <= order; ++r)
      elems.emplace_back("order " + std::to_string(r), cs.z[static_cast<size_t>(r)] - shifted[static_cast<size_t>(r)]);
    ideal_item(out, "z-equals-shifted-qdet-ratio", cl, elems);
  }
  Json coeffs = Json::array();
  for (int r = 0; r <= std::min(order, 2); ++r) coeffs.push_back(short_poly(d[static_cast<size_t>(r)], 24));
  out.extra = Json{{"qdet", coeffs}};
  return out;
}

Report verify_symmetry(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order) {
  Report out = make_report("symmetry", pres, cl, order);
  int N = pres.N();
  MatSeries W = symmetry_matrix(pres, order);
  MatSeries T = t_matrix(N, order);
  MatSeries W2 = mat_mul(T, mat_shift(transpose_t(T, pres.lie.idx), *pres.lie.kappa));
  for (int r = 1; r <= order; ++r) {
    Labeled elems, sides;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        std::string label = "W" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(r);
        if (i != j) elems.emplace_back(label, W.at(r, i, j));
        else if (i > 0) elems.emplace_back(label + " - W11", W.at(r, i, i) - W.at(r, 0, 0));
        sides.emplace_back(label, W2.at(r, i, j) - W.at(r, i, j));
      }
    ideal_item(out, "W-scalar-order-" + std::to_string(r), cl, elems);
    ideal_item(out, "W-two-sided-order-" + std::to_string(r), cl, sides);
  }
  auto bz = W.entry(0, 0);
  auto ratio = gseries::mul(bz, gseries::inverse_unipotent(gseries::shift(bz, *pres.lie.kappa, order, NCPoly()), order, NCPoly()),
                            order, NCPoly());
  if (cs.K < order) {
    out.add("z-equals-symmetry-ratio", false, Json{{"reason", "z series not computed to this order"}});
  } else {
    Labeled elems;
    for (int r = 1; r <= order; ++r)
      elems.emplace_back("order " + std::to_string(r), cs.z[static_cast<size_t>(r)] - ratio[static_cast<size_t>(r)]);
    ideal_item(out, "z-equals-symmetry-ratio", cl, elems);
  }
  Json coeffs = Json::array();
  for (int r = 0; r <= std::min(order, 2); ++r) coeffs.push_back(short_poly(bz[static_cast<size_t>(r)], 24));
  out.extra = Json{{"symmetry_series", coeffs}};
  return out;
}

Report verify_hopf(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order) {
  Report out = make_report("hopf", pres, cl, order);
  int N = pres.N();
  if (cs.K < order) {
    out.add("z-series-order", false, Json{{"reason", "z series not computed to this order"}});
    return out;
  }
  bool counit_ok = counit(cs.z[0]) == NCPoly(1);
  for (int r = 1; r <= order; ++r) counit_ok = counit_ok && counit(cs.z[static_cast<size_t>(r)]).is_zero();
  out.add("counit-of-z", counit_ok);

  for (int r = 1; r <= order; ++r) {
    TensorNCPoly x = coproduct(cs.z[static_cast<size_t>(r)], N);
    for (int a = 0; a <= r; ++a)
      x -= TensorNCPoly::pure({cs.z[static_cast<size_t>(a)], cs.z[static_cast<size_t>(r - a)]});
    std::string name = "grouplike-order-" + std::to_string(r);
    if (!tensor_fits(cl, x)) {
      out.add(name, false, Json{{"reason", "out of bounds"}});
      continue;
    }
    TensorNCPoly nf = nf_pair(cl, x);
    out.add(name, nf.is_zero(), Json{{"residual_terms", nf.terms().size()}});
  }

  {
    const RTTPresentation* src = &pres;
    RTTPresentation regen;
    if (pres.K < cl.work_R()) {
      regen = rtt_relations(pres.family(), N, cl.work_R());
      src = &regen;
    }
    size_t checked = 0;
    bool ok = true;
    Json witness;
    for (const auto& rel : src->relations) {
      if (!cl.fits(rel)) continue;
      TensorNCPoly x = coproduct(rel, N);
      ++checked;
      TensorNCPoly nf = nf_pair(cl, x);
      if (!nf.is_zero()) {
        ok = false;
        witness = short_poly(rel);
        break;
      }
    }
    out.add("coproduct-preserves-relations", ok && checked > 0,
            witness.is_null() ? Json{{"checked", checked}} : Json{{"relation", witness}});
  }

  {
    Substitution S = antipode(N, order);
    std::vector<NCPoly> sz;
    for (int r = 0; r <= order; ++r) sz.push_back(S(cs.z[static_cast<size_t>(r)]));
    auto prod = gseries::mul(sz, scalar_series(cs.z, order), order, NCPoly());
    Labeled elems;
    for (int r = 1; r <= order; ++r) elems.emplace_back("order " + std::to_string(r), prod[static_cast<size_t>(r)]);
    ideal_item(out, "antipode-inverts-z", cl, elems);
  }
  return out;
}

Report verify_fixed_point(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs,
                          const TruncSeries& f, int order, const Rational& shift) {
  Report out = make_report("fixed-point", pres, cl, order);
  out.bounds["f"] = rationals_json(f.coeffs());
  int N = pres.N();
  if (cs.K < order + 1) {
    out.add("z-series-order", false, Json{{"reason", "z series must reach order + 1"}});
    return out;
  }
  CentralSeries solved = static_cast<int>(cs.y.size()) >= order + 1 ? cs : y_from_z(cs, order);
  std::vector<NCPoly> zrep(static_cast<size_t>(cs.K) + 1);
  for (int r = 0; r <= cs.K; ++r) zrep[static_cast<size_t>(r)] = representative(cl, cs.z[static_cast<size_t>(r)]);
  std::vector<NCPoly> y;
  for (int k = 0; k <= order; ++k) y.push_back(solved.y[static_cast<size_t>(k)].substitute(zrep));
  auto yinv = gseries::inverse_unipotent(y, order, NCPoly());

  MatSeries T = t_matrix(N, order);
  auto tilde_of = [&](const MatSeries& A, const std::vector<NCPoly>& scal) {
    MatSeries B(N, order, NCPoly());
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        auto s = gseries::mul(scal, A.entry(i, j), order, NCPoly());
        for (int k = 0; k <= order; ++k) B.at(k, i, j) = s[static_cast<size_t>(k)];
      }
    return B;
  };
  MatSeries Tt = tilde_of(T, yinv);
  Substitution mf = mf_substitution(f);
  for (int r = 1; r <= order; ++r) {
    Labeled elems;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        elems.emplace_back("T~" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(r),
                           mf(Tt.at(r, i, j)) - Tt.at(r, i, j));
    ideal_item(out, "mf-fixes-order-" + std::to_string(r), cl, elems);
  }

  {
    TruncSeries fp = pad(f, order);
    TruncSeries g = series_mul(fp, series_inverse(series_shift(fp, cs.c_g / 2)));
    Labeled elems;
    for (int r = 1; r <= order; ++r) {
      NCPoly expect;
      for (int b = 0; b <= r; ++b) expect += cs.z[static_cast<size_t>(r - b)] * g[b];
      elems.emplace_back("order " + std::to_string(r), mf(cs.z[static_cast<size_t>(r)]) - expect);
    }
    ideal_item(out, "mf-scales-z", cl, elems);
  }

  {
    MatSeries Tc = mat_shift(T, shift);
    Substitution tau([&Tc](Gen g) { return Tc.at(gen_r(g), gen_i(g), gen_j(g)); });
    MatSeries lhs = apply(Tt, tau);
    MatSeries rhs = mat_shift(Tt, shift);
    Labeled elems;
    for (int r = 1; r <= order; ++r)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          elems.emplace_back("T~" + std::to_string(i + 1) + std::to_string(j + 1) + "^" + std::to_string(r),
                             lhs.at(r, i, j) - rhs.at(r, i, j));
    ideal_item(out, "shift-commutes-with-normalization", cl, elems);
  }
  Json ys = Json::array();
  for (int k = 0; k <= order; ++k) ys.push_back(cpoly_json(solved.y[static_cast<size_t>(k)]));
  out.extra = Json{{"y", ys}};
  return out;
}

std::vector<Rational> b_table(const LieAlgebraData& data, const Representation& rep) {
  int N = data.N, n2 = N * N, dim = data.dim();
  // coordinates of F_kl in the basis X_b
  QMatrix A(dim, n2);
  for (int k = 0; k < N; ++k)
    for (int l = 0; l < N; ++l)
      for (int a = 0; a < dim; ++a) {
        const Rational& x = data.basis[static_cast<size_t>(a)](k, l);
        if (x == 0) continue;
        for (int b = 0; b < dim; ++b) A(b, k * N + l) -= x * data.gram_inv(a, b);
      }
  std::vector<Rational> out(static_cast<size_t>(n2 * n2));
  if (rep.j_zero()) return out;
  for (int a = 0; a < dim; ++a) {
    std::vector<Rational> target(static_cast<size_t>(dim)), beta;
    for (int b = 0; b < dim; ++b) target[static_cast<size_t>(b)] = data.gram_inv(a, b);
    if (!solve(A, target, &beta)) throw std::logic_error("F_kl do not span g");
    const QMatrix& J = rep.rho_J[static_cast<size_t>(a)];
    for (int ij = 0; ij < n2; ++ij) {
      const Rational& x = J(ij / N, ij % N);
      if (x == 0) continue;
      for (int kl = 0; kl < n2; ++kl) out[static_cast<size_t>(ij * n2 + kl)] -= x * beta[static_cast<size_t>(kl)];
    }
  }
  return out;
}

Report verify_low_order_structure(const RTTPresentation& pres, const RelationClosure& cl,
                                  const RelationClosure* quotient, const CentralSeries& cs) {
  Report out = make_report("low-order", pres, cl, cs.K);
  int N = pres.N(), n2 = N * N;
  const Rational& c = pres.c_g();
  if (cs.K < 2) {
    out.add("z-series-order", false, Json{{"reason", "z series must reach order 2"}});
    return out;
  }
  std::vector<NCPoly> F(static_cast<size_t>(n2));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      F[static_cast<size_t>(i * N + j)] = NCPoly::gen(i, j, 1) - representative(cl, cs.Z.at(2, i, j)) * (2 / c);
  auto Fe = [&](int i, int j) -> const NCPoly& { return F[static_cast<size_t>(i * N + j)]; };
  const QMatrix& om = pres.casimir.omega_rho;
  auto cc = [&](int i, int j, int k, int l) -> const Rational& { return om(i * N + k, j * N + l); };
  {
    Labeled elems;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
          for (int l = 0; l < N; ++l) {
            NCPoly e = commutator(Fe(i, j), Fe(k, l));
            for (int a = 0; a < N; ++a) {
              if (cc(i, j, k, a) != 0) e -= Fe(a, l) * cc(i, j, k, a);
              if (cc(i, j, a, l) != 0) e += Fe(k, a) * cc(i, j, a, l);
            }
            elems.emplace_back("F" + std::to_string(i + 1) + std::to_string(j + 1) + ",F" + std::to_string(k + 1) +
                                   std::to_string(l + 1),
                               e);
          }
    ideal_item(out, "F-bracket", cl, elems);
  }
  {
    Labeled sym, omg;
    const QMatrix& op = pres.casimir.omega_op;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        NCPoly e = Fe(i, j);
        for (int a = 0; a < N; ++a) e -= commutator(Fe(i, a), Fe(a, j)) * (2 / c);
        sym.emplace_back("F" + std::to_string(i + 1) + std::to_string(j + 1), e);
        NCPoly w = Fe(i, j);
        for (int p = 0; p < n2; ++p)
          if (op(i * N + j, p) != 0) w -= F[static_cast<size_t>(p)] * (op(i * N + j, p) / c);
        omg.emplace_back("F" + std::to_string(i + 1) + std::to_string(j + 1), w);
      }
    ideal_item(out, "F-commutator-identity", cl, sym);
    ideal_item(out, "F-omega-invariant", cl, omg);
  }

  if (quotient != nullptr && quotient->work_R() >= 4) {
    const RelationClosure& q = *quotient;
    std::vector<NCPoly> cand;
    std::vector<Gen> letters;
    for (int r = 1; r <= 2; ++r)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) letters.push_back(make_gen(i, j, r));
    std::vector<Word> frontier = {Word()};
    std::vector<Word> words = {Word()};
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (Gen g : letters)
          // t^(3) first shows up in [t^(2), t^(2)]
          if (word_sumr(w) + gen_r(g) <= 4) {
            next.push_back(w + Word(1, g));
            words.push_back(next.back());
          }
      frontier = std::move(next);
    }
    std::map<Word, int, WordLess> colmap;
    std::vector<NCPoly> nfs;
    for (const auto& w : words) {
      nfs.push_back(q.normal_form(NCPoly::word(w)));
      for (const auto& [x, cf] : nfs.back().terms()) colmap.emplace(x, 0);
    }
    std::vector<NCPoly> targets;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        targets.push_back(q.normal_form(NCPoly::gen(i, j, 3)));
        for (const auto& [x, cf] : targets.back().terms()) colmap.emplace(x, 0);
      }
    int col = 0;
    for (auto& [w, k] : colmap) k = col++;
    auto vec = [&](const NCPoly& p) {
      SparseVec v;
      for (const auto& [w, cf] : p.terms()) v.emplace_back(colmap.at(w), cf);
      return v;
    };
    SparseEchelon e(std::max(col, 1));
    for (const auto& p : nfs) e.insert(vec(p));
    bool ok = true;
    std::string bad;
    for (int t = 0; t < n2 && ok; ++t)
      if (!e.reduce(vec(targets[static_cast<size_t>(t)])).empty()) {
        ok = false;
        bad = gen_label(t / N, t % N, 3);
      }
    out.add("t3-generated-by-t1-t2", ok,
            ok ? Json{{"spanning_words", words.size()}} : Json{{"element", bad}, {"spanning_words", words.size()}});
  }

  {
    auto b = b_table(pres.lie, vector_rep(pres.lie));
    bool zero = std::all_of(b.begin(), b.end(), [](const Rational& x) { return x == 0; });
    out.add("b-table-vanishes", zero);
  }

  if (quotient != nullptr && quotient->work_R() >= 4 && std::min(quotient->L(), quotient->R()) >= 2) {
    const RelationClosure& q = *quotient;
    std::vector<Word> basis = q.standard_words(2, 2);
    std::map<std::pair<int, Word>, int> colmap;
    std::vector<SparseVec> cols;
    std::vector<std::vector<std::pair<std::pair<int, Word>, Rational>>> raw;
    for (const auto& w : basis) {
      std::vector<std::pair<std::pair<int, Word>, Rational>> entries;
      int tix = 0;
      for (int s = 1; s <= 2; ++s)
        for (int k = 0; k < N; ++k)
          for (int l = 0; l < N; ++l, ++tix) {
            NCPoly nf = q.normal_form(commutator(NCPoly::word(w), NCPoly::gen(k, l, s)));
            for (const auto& [x, cf] : nf.terms()) {
              colmap.emplace(std::make_pair(tix, x), 0);
              entries.emplace_back(std::make_pair(tix, x), cf);
            }
          }
      raw.push_back(std::move(entries));
    }
    int col = 0;
    for (auto& [key, k] : colmap) k = col++;
    SparseEchelon e(std::max(col, 1));
    for (const auto& entries : raw) {
      SparseVec v;
      for (const auto& [key, cf] : entries) v.emplace_back(colmap.at(key), cf);
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      e.insert(v);
    }
    long nullity = static_cast<long>(basis.size()) - e.rank();
    out.add("quotient-center-is-scalars", nullity == 1, Json{{"slice_basis", basis.size()}, {"centralizer_dim", nullity}});
  }
  return out;
}

}  // namespace yf
