#include <functional>
#include <map>
#include <optional>
#include <tuple>

#include "yf/echelon.hpp"
#include "yf/liealg.hpp"

namespace yf {

namespace {

// n x n matrix whose entries are vectors of length w (End(V^{(x)2}) (x) U for a
// finite-dimensional coefficient space U).
struct GMat {
  int n = 0, w = 0;
  std::vector<Rational> a;
  GMat(int n_, int w_) : n(n_), w(w_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_) * static_cast<size_t>(w_)) {}
  Rational* at(int r, int c) { return &a[(static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)) * static_cast<size_t>(w)]; }
  const Rational* at(int r, int c) const { return &a[(static_cast<size_t>(r) * static_cast<size_t>(n) + static_cast<size_t>(c)) * static_cast<size_t>(w)]; }
  bool is_zero() const {
    for (const auto& x : a)
      if (x != 0) return false;
    return true;
  }
  GMat operator-(const GMat& o) const {
    GMat r = *this;
    for (size_t k = 0; k < a.size(); ++k) r.a[k] -= o.a[k];
    return r;
  }
  GMat operator+(const GMat& o) const {
    GMat r = *this;
    for (size_t k = 0; k < a.size(); ++k) r.a[k] += o.a[k];
    return r;
  }
  GMat scaled(const Rational& s) const {
    GMat r = *this;
    for (auto& x : r.a) x *= s;
    return r;
  }
  bool operator==(const GMat& o) const { return a == o.a; }
};

GMat lmul(const QMatrix& m, const GMat& g) {
  GMat r(g.n, g.w);
  Rational t;
  for (int i = 0; i < g.n; ++i)
    for (int k = 0; k < g.n; ++k) {
      const Rational& x = m(i, k);
      if (x == 0) continue;
      for (int j = 0; j < g.n; ++j) {
        const Rational* src = g.at(k, j);
        Rational* dst = r.at(i, j);
        for (int c = 0; c < g.w; ++c)
          if (src[c] != 0) {
            mpq_mul(t.get_mpq_t(), x.get_mpq_t(), src[c].get_mpq_t());
            dst[c] += t;
          }
      }
    }
  return r;
}

GMat rmul(const GMat& g, const QMatrix& m) {
  GMat r(g.n, g.w);
  Rational t;
  for (int k = 0; k < g.n; ++k)
    for (int j = 0; j < g.n; ++j) {
      const Rational& x = m(k, j);
      if (x == 0) continue;
      for (int i = 0; i < g.n; ++i) {
        const Rational* src = g.at(i, k);
        Rational* dst = r.at(i, j);
        for (int c = 0; c < g.w; ++c)
          if (src[c] != 0) {
            mpq_mul(t.get_mpq_t(), x.get_mpq_t(), src[c].get_mpq_t());
            dst[c] += t;
          }
      }
    }
  return r;
}

GMat commutator(const QMatrix& m, const GMat& g) { return lmul(m, g) - rmul(g, m); }

// entries: d*d vectors of length w, indexed i*d+j.
using Entries = std::vector<std::vector<Rational>>;

GMat leg2(const Entries& f, int d, int w) {  // sum (1 (x) E_kl) (x) f_kl
  GMat g(d * d, w);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int l = 0; l < d; ++l) {
        Rational* dst = g.at(i * d + k, i * d + l);
        const auto& src = f[static_cast<size_t>(k * d + l)];
        for (int c = 0; c < w; ++c) dst[c] = src[static_cast<size_t>(c)];
      }
  return g;
}

GMat leg1(const Entries& f, int d, int w) {  // sum (E_ij (x) 1) (x) f_ij
  GMat g(d * d, w);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Rational* dst = g.at(i * d + k, j * d + k);
        const auto& src = f[static_cast<size_t>(i * d + j)];
        for (int c = 0; c < w; ++c) dst[c] = src[static_cast<size_t>(c)];
      }
  return g;
}

Entries apply_omega(const QMatrix& omega_op, const Entries& f, int w) {
  int n = omega_op.rows();
  Entries out(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(w)));
  for (int e = 0; e < n; ++e)
    for (int p = 0; p < n; ++p) {
      const Rational& x = omega_op(e, p);
      if (x == 0) continue;
      for (int c = 0; c < w; ++c) out[static_cast<size_t>(e)][static_cast<size_t>(c)] += x * f[static_cast<size_t>(p)][static_cast<size_t>(c)];
    }
  return out;
}

// F_ij = -sum_a rho(X_a)_ij X^a, in g-coordinates.
Entries f_entries(const LieAlgebraData& data, const Representation& rep) {
  int d = rep.dim, n = data.dim();
  Entries f(static_cast<size_t>(d * d), std::vector<Rational>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Rational& x = rep.rho_X[static_cast<size_t>(a)](i, j);
        if (x == 0) continue;
        for (int g = 0; g < n; ++g)
          if (data.gram_inv(a, g) != 0) f[static_cast<size_t>(i * d + j)][static_cast<size_t>(g)] -= x * data.gram_inv(a, g);
      }
  return f;
}

// [F_1, F_2] with entries bracketed in g.
GMat bracket_f1f2(const LieAlgebraData& data, const Entries& f, int d) {
  int w = data.dim();
  GMat g(d * d, w);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          auto br = data.bracket_coords(f[static_cast<size_t>(i * d + j)], f[static_cast<size_t>(k * d + l)]);
          Rational* dst = g.at(i * d + k, j * d + l);
          for (int c = 0; c < w; ++c) dst[c] = br[static_cast<size_t>(c)];
        }
  return g;
}

bool entries_equal(const Entries& a, const Entries& b) { return a == b; }

Entries scale(const Entries& f, const Rational& s) {
  Entries r = f;
  for (auto& v : r)
    for (auto& x : v) x *= s;
  return r;
}

Json dims_json(std::initializer_list<std::pair<const char*, int>> kv) {
  Json j;
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

}  // namespace

Report verify_classical_presentation(const LieAlgebraData& data, const Representation& rep, unsigned seed) {
  Report rep_out("classical_presentation", family_name(data.family), data.N);
  int d = rep.dim, w = data.dim();
  CasimirData cas = casimir(data, rep);
  Entries f = f_entries(data, rep);
  GMat lhs = bracket_f1f2(data, f, d);
  GMat F2 = leg2(f, d, w), F1 = leg1(f, d, w);
  GMat om2 = commutator(cas.omega_rho, F2);
  GMat om1 = commutator(cas.omega_rho, F1);
  rep_out.add("F-br", lhs == om2);
  rep_out.add("F-sym", entries_equal(f, scale(apply_omega(cas.omega_op, f, w), 1 / cas.c_g)), Json{{"c_g", to_string(cas.c_g)}});
  rep_out.add("sigma-sym", om2 == om1.scaled(-1));

  // component form with c_ij^kl read off from Omega_rho
  bool comp_br = true, comp_sym = true;
  const QMatrix& om = cas.omega_rho;
  for (int i = 0; i < d && comp_br; ++i)
    for (int j = 0; j < d && comp_br; ++j)
      for (int k = 0; k < d && comp_br; ++k)
        for (int l = 0; l < d && comp_br; ++l) {
          std::vector<Rational> rhs(static_cast<size_t>(w));
          for (int a = 0; a < d; ++a) {
            const Rational& c1 = om(i * d + k, j * d + a);  // c_ij^{ka}
            const Rational& c2 = om(i * d + a, j * d + l);  // c_ij^{al}
            for (int g = 0; g < w; ++g) {
              if (c1 != 0) rhs[static_cast<size_t>(g)] += c1 * f[static_cast<size_t>(a * d + l)][static_cast<size_t>(g)];
              if (c2 != 0) rhs[static_cast<size_t>(g)] -= c2 * f[static_cast<size_t>(k * d + a)][static_cast<size_t>(g)];
            }
          }
          auto br = data.bracket_coords(f[static_cast<size_t>(i * d + j)], f[static_cast<size_t>(k * d + l)]);
          comp_br = br == rhs;
        }
  for (int i = 0; i < d && comp_sym; ++i)
    for (int j = 0; j < d && comp_sym; ++j) {
      std::vector<Rational> s(static_cast<size_t>(w));
      for (int a = 0; a < d; ++a) {
        auto br = data.bracket_coords(f[static_cast<size_t>(i * d + a)], f[static_cast<size_t>(a * d + j)]);
        for (int g = 0; g < w; ++g) s[static_cast<size_t>(g)] += br[static_cast<size_t>(g)];
      }
      for (auto& x : s) x *= 2 / cas.c_g;
      comp_sym = s == f[static_cast<size_t>(i * d + j)];
    }
  rep_out.add("F-sym-components", comp_br && comp_sym, Json{{"bracket", comp_br}, {"casimir", comp_sym}});

  // negative control: F + eps E_11 (x) X_1 must violate F-br
  Rational eps = rat(static_cast<long>(seed % 7) + 1, static_cast<long>(seed % 5) + 2);
  Entries fp = f;
  fp[0][0] += eps;
  GMat lhs_p = bracket_f1f2(data, fp, d);
  GMat rhs_p = commutator(cas.omega_rho, leg2(fp, d, w));
  rep_out.add("negative-control", !(lhs_p == rhs_p), Json{{"epsilon", to_string(eps)}});
  return rep_out;
}

namespace {

// End(V^{(x)2}) (x) g[z] value, graded by z-degree.
using GzMat = std::map<int, GMat>;

void gz_add(GzMat& acc, int deg, const GMat& m, const Rational& s) {
  auto it = acc.find(deg);
  if (it == acc.end()) it = acc.emplace(deg, GMat(m.n, m.w)).first;
  for (size_t k = 0; k < m.a.size(); ++k)
    if (m.a[k] != 0) it->second.a[k] += s * m.a[k];
}

bool gz_equal(const GzMat& a, const GzMat& b) {
  auto nz = [](const GzMat& m) {
    std::map<int, const GMat*> r;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) r[k] = &v;
    return r;
  };
  auto x = nz(a), y = nz(b);
  if (x.size() != y.size()) return false;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end() || !(*v == *it->second)) return false;
  }
  return true;
}

struct Term {
  int kind;  // 0: [F1^(r),F2^(s)], 1: [Omega,F1^(a)], 2: [Omega,F2^(b)]
  int i1, i2;
  Rational coeff;
};

// Solutions of one family of monomials at a given (u,v)-exponent.
using TermFamily = std::function<std::optional<Term>(int eu, int ev)>;

}  // namespace

Report verify_current_presentation(const LieAlgebraData& data, const Representation& rep, int D) {
  if (D < 1) throw std::invalid_argument("z-degree bound must be >= 1");
  Report out("current_presentation", family_name(data.family), data.N);
  out.K = D;
  int d = rep.dim, w = data.dim();
  CasimirData cas = casimir(data, rep);
  Entries f = f_entries(data, rep);
  // F^(r) has the coefficients of F in z-degree r; [x z^r, y z^s] = [x,y] z^{r+s}.
  GMat br = bracket_f1f2(data, f, d);
  GMat om1 = commutator(cas.omega_rho, leg1(f, d, w));
  GMat om2 = commutator(cas.omega_rho, leg2(f, d, w));
  auto bracket_rs = [&](int r, int s) {
    GzMat m;
    gz_add(m, r + s, br, 1);
    return m;
  };
  auto omega_f2 = [&](int k) {
    GzMat m;
    gz_add(m, k, om2, 1);
    return m;
  };

  bool rel = true;
  int pairs = 0;
  for (int r = 0; r <= D; ++r)
    for (int s = 0; r + s <= D; ++s) {
      ++pairs;
      if (!gz_equal(bracket_rs(r, s), omega_f2(r + s))) rel = false;
    }
  out.add("g[z]-R", rel, Json{{"pairs", pairs}});
  bool sym = entries_equal(f, scale(apply_omega(cas.omega_op, f, w), 1 / cas.c_g));
  out.add("g[z]-sym", sym, Json{{"orders", D + 1}});
  GMat classical_lhs = bracket_f1f2(data, f, d);
  out.add("degree-zero-specialization", bracket_rs(0, 0).at(0) == classical_lhs && classical_lhs == om2);

  auto eval_family = [&](const std::vector<TermFamily>& fams, int eu, int ev, int maxidx, bool& complete) {
    GzMat acc;
    for (const auto& fam : fams) {
      auto t = fam(eu, ev);
      if (!t) continue;
      if (t->i1 > maxidx || t->i2 > maxidx) {
        complete = false;
        continue;
      }
      if (t->kind == 0) gz_add(acc, t->i1 + t->i2, br, t->coeff);
      if (t->kind == 1) gz_add(acc, t->i1, om1, t->coeff);
      if (t->kind == 2) gz_add(acc, t->i1, om2, t->coeff);
    }
    return acc;
  };
  auto nonneg = [](int x) { return x >= 0; };
  TermFamily lhs_plain = [&](int eu, int ev) -> std::optional<Term> {
    int r = -eu - 1, s = -ev - 1;
    if (!nonneg(r) || !nonneg(s)) return std::nullopt;
    return Term{0, r, s, Rational(1)};
  };
  // (u-v)^{-1} = sum_p v^p u^{-p-1}
  TermFamily a1 = [&](int eu, int ev) -> std::optional<Term> {
    int p = ev, a = -eu - p - 2;
    if (!nonneg(p) || !nonneg(a)) return std::nullopt;
    return Term{1, a, 0, Rational(1)};
  };
  TermFamily a2 = [&](int eu, int ev) -> std::optional<Term> {
    int p = -eu - 1, b = p - 1 - ev;
    if (!nonneg(p) || !nonneg(b)) return std::nullopt;
    return Term{2, b, 0, Rational(1)};
  };
  // (u-v)^{-1} = -sum_p u^p v^{-p-1}
  TermFamily b1 = [&](int eu, int ev) -> std::optional<Term> {
    int p = -ev - 1, a = p - 1 - eu;
    if (!nonneg(p) || !nonneg(a)) return std::nullopt;
    return Term{1, a, 0, Rational(-1)};
  };
  TermFamily b2 = [&](int eu, int ev) -> std::optional<Term> {
    int p = eu, b = -ev - p - 2;
    if (!nonneg(p) || !nonneg(b)) return std::nullopt;
    return Term{2, b, 0, Rational(-1)};
  };
  // (u-v) [F_1(u),F_2(v)] = [Omega, F_1(u) + F_2(v)]
  TermFamily c_l1 = [&](int eu, int ev) -> std::optional<Term> {
    int r = -eu, s = -ev - 1;
    if (!nonneg(r) || !nonneg(s)) return std::nullopt;
    return Term{0, r, s, Rational(1)};
  };
  TermFamily c_l2 = [&](int eu, int ev) -> std::optional<Term> {
    int r = -eu - 1, s = -ev;
    if (!nonneg(r) || !nonneg(s)) return std::nullopt;
    return Term{0, r, s, Rational(-1)};
  };
  TermFamily c_r1 = [&](int eu, int ev) -> std::optional<Term> {
    if (ev != 0 || eu > -1) return std::nullopt;
    return Term{1, -eu - 1, 0, Rational(1)};
  };
  TermFamily c_r2 = [&](int eu, int ev) -> std::optional<Term> {
    if (eu != 0 || ev > -1) return std::nullopt;
    return Term{2, -ev - 1, 0, Rational(1)};
  };

  struct Expansion {
    const char* name;
    std::vector<TermFamily> lhs, rhs;
  };
  std::vector<Expansion> exps = {{"expansion-v-powers", {lhs_plain}, {a1, a2}},
                                 {"expansion-u-powers", {lhs_plain}, {b1, b2}},
                                 {"expansion-cleared", {c_l1, c_l2}, {c_r1, c_r2}}};
  int box = D + 2, maxidx = 2 * D + 4;
  for (const auto& e : exps) {
    bool ok = true;
    int compared = 0, nonzero = 0;
    for (int eu = -box; eu <= box; ++eu)
      for (int ev = -box; ev <= box; ++ev) {
        bool complete = true;
        GzMat l = eval_family(e.lhs, eu, ev, maxidx, complete);
        GzMat r = eval_family(e.rhs, eu, ev, maxidx, complete);
        if (!complete) continue;
        ++compared;
        bool any = false;
        for (const auto& [k, v] : l) any = any || !v.is_zero();
        nonzero += any;
        if (!gz_equal(l, r)) ok = false;
      }
    out.add(e.name, ok, Json{{"coefficients", compared}, {"nonzero", nonzero}});
  }
  return out;
}

namespace {

// Smallest subspace of span{F_p} containing `seed` rows and closed under [F_p, .].
int closed_relation_rank(SparseEchelon& rel, const std::vector<std::vector<SparseVec>>& btab, int n) {
  std::vector<SparseVec> work(rel.rows().begin(), rel.rows().end());
  while (!work.empty()) {
    SparseVec v = std::move(work.back());
    work.pop_back();
    for (int p = 0; p < n; ++p) {
      std::map<int, Rational> acc;
      for (const auto& [s, x] : v)
        for (const auto& [t, y] : btab[static_cast<size_t>(p)][static_cast<size_t>(s)]) acc[t] += x * y;
      SparseVec img;
      for (auto& [t, y] : acc)
        if (y != 0) img.emplace_back(t, y);
      if (img.empty()) continue;
      size_t before = rel.rows().size();
      if (rel.insert(img)) work.push_back(rel.rows()[before]);
    }
  }
  return rel.rank();
}

SparseVec to_sparse(const Rational* v, int w) {
  SparseVec s;
  for (int c = 0; c < w; ++c)
    if (v[c] != 0) s.emplace_back(c, v[c]);
  return s;
}

std::vector<std::vector<Rational>> joint_commutant(const std::vector<QMatrix>& ms, int d) {
  int n2 = d * d;
  QMatrix stacked(static_cast<int>(ms.size()) * n2, n2);
  for (size_t a = 0; a < ms.size(); ++a) {
    QMatrix ad = ad_operator(ms[a]);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j) stacked(static_cast<int>(a) * n2 + i, j) = ad(i, j);
  }
  return nullspace(stacked);
}

}  // namespace

Report verify_extension_split(const LieAlgebraData& data, const Representation& rep) {
  Report out("extension_split", family_name(data.family), data.N);
  int d = rep.dim, n = d * d, w = data.dim();
  CasimirData cas = casimir(data, rep);
  Decomposition dec = decompose_ad(data, rep);
  Entries f = f_entries(data, rep);

  // bracket table on generators: [F_p, F_q] = sum_s B_pq^s F_s
  Entries gens(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int p = 0; p < n; ++p) gens[static_cast<size_t>(p)][static_cast<size_t>(p)] = 1;
  GMat brt = commutator(cas.omega_rho, leg2(gens, d, n));
  std::vector<std::vector<SparseVec>> btab(static_cast<size_t>(n), std::vector<SparseVec>(static_cast<size_t>(n)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) btab[static_cast<size_t>(i * d + j)][static_cast<size_t>(k * d + l)] = to_sparse(brt.at(i * d + k, j * d + l), n);

  auto base_relations = [&](SparseEchelon& rel) {
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        std::map<int, Rational> acc;
        for (const auto& [s, x] : btab[static_cast<size_t>(p)][static_cast<size_t>(q)]) acc[s] += x;
        for (const auto& [s, x] : btab[static_cast<size_t>(q)][static_cast<size_t>(p)]) acc[s] += x;
        SparseVec v;
        for (auto& [s, x] : acc)
          if (x != 0) v.emplace_back(s, x);
        if (!v.empty()) rel.insert(v);
      }
    auto ad = [&](int p, const SparseVec& v) {
      std::map<int, Rational> acc;
      for (const auto& [s, x] : v)
        for (const auto& [t, y] : btab[static_cast<size_t>(p)][static_cast<size_t>(s)]) acc[t] += x * y;
      return acc;
    };
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int r = q + 1; r < n; ++r) {
          std::map<int, Rational> acc;
          for (auto [x, y, z] : {std::tuple{p, q, r}, std::tuple{q, r, p}, std::tuple{r, p, q}})
            for (const auto& [t, c] : ad(x, btab[static_cast<size_t>(y)][static_cast<size_t>(z)])) acc[t] += c;
          SparseVec v;
          for (auto& [t, c] : acc)
            if (c != 0) v.emplace_back(t, c);
          if (!v.empty()) rel.insert(v);
        }
  };

  // model F + sum_{lambda} x_lambda (x) K_lambda with central K_lambda
  auto model_rank = [&](const std::vector<std::vector<Rational>>& ebasis, bool& satisfies) {
    int e = static_cast<int>(ebasis.size());
    std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(w + e)));
    for (int p = 0; p < n; ++p) {
      for (int g = 0; g < w; ++g) m[static_cast<size_t>(p)][static_cast<size_t>(g)] = f[static_cast<size_t>(p)][static_cast<size_t>(g)];
      for (int l = 0; l < e; ++l) m[static_cast<size_t>(p)][static_cast<size_t>(w + l)] = ebasis[static_cast<size_t>(l)][static_cast<size_t>(p)];
    }
    satisfies = true;
    for (int p = 0; p < n && satisfies; ++p)
      for (int q = 0; q < n && satisfies; ++q) {
        auto lhs = data.bracket_coords(f[static_cast<size_t>(p)], f[static_cast<size_t>(q)]);
        lhs.resize(static_cast<size_t>(w + e));
        std::vector<Rational> rhs(static_cast<size_t>(w + e));
        for (const auto& [s, x] : btab[static_cast<size_t>(p)][static_cast<size_t>(q)])
          for (int c = 0; c < w + e; ++c) rhs[static_cast<size_t>(c)] += x * m[static_cast<size_t>(s)][static_cast<size_t>(c)];
        satisfies = lhs == rhs;
      }
    return std::pair{rank(from_rows(m, w + e)), m};
  };

  // g_J
  SparseEchelon relJ(n);
  base_relations(relJ);
  int upperJ = n - closed_relation_rank(relJ, btab, n);
  bool modelJ_ok = false;
  auto [lowerJ, mJ] = model_rank(dec.eg_part, modelJ_ok);
  int expectJ = w + dec.dim_eg();
  out.add("model-satisfies-relations", modelJ_ok);
  out.add("dim-gJ", lowerJ == upperJ && upperJ == expectJ,
          dims_json({{"lower", lowerJ}, {"upper", upperJ}, {"dim_g", w}, {"dim_Eg", dec.dim_eg()}}));

  // K = F' - c^{-1} omega(F') on the model: [Omega,K_2] = 0 and omega(K) = 0
  {
    int wm = static_cast<int>(mJ.front().size());
    Entries k = mJ;
    Entries om = apply_omega(cas.omega_op, mJ, wm);
    for (int p = 0; p < n; ++p)
      for (int c = 0; c < wm; ++c) k[static_cast<size_t>(p)][static_cast<size_t>(c)] -= om[static_cast<size_t>(p)][static_cast<size_t>(c)] / cas.c_g;
    bool comm = commutator(cas.omega_rho, leg2(k, d, wm)).is_zero() && commutator(cas.omega_rho, leg1(k, d, wm)).is_zero();
    Entries ok = apply_omega(cas.omega_op, k, wm);
    bool killed = true;
    for (const auto& v : ok)
      for (const auto& x : v) killed = killed && x == 0;
    out.add("K-commutes-with-Omega", comm);
    out.add("omega-kills-K", killed);
  }

  // g_I: add [K_2, (1(x)J)(Omega)] = [K_1, (J(x)1)(Omega)]
  std::vector<QMatrix> xj = rep.rho_X;
  xj.insert(xj.end(), rep.rho_J.begin(), rep.rho_J.end());
  auto ebasis = joint_commutant(xj, d);
  {
    std::vector<QMatrix> rd;
    for (int a = 0; a < w; ++a) {
      std::vector<Rational> c(static_cast<size_t>(w));
      for (int b = 0; b < w; ++b) c[static_cast<size_t>(b)] = data.gram_inv(b, a);
      rd.push_back(rep.J(c));
    }
    QMatrix oj2(n, n), oj1(n, n);
    for (int a = 0; a < w; ++a) {
      oj2 += kron(rep.rho_X[static_cast<size_t>(a)], rd[static_cast<size_t>(a)]);
      std::vector<Rational> c(static_cast<size_t>(w));
      for (int b = 0; b < w; ++b) c[static_cast<size_t>(b)] = data.gram_inv(b, a);
      oj1 += kron(rep.rho_J[static_cast<size_t>(a)], rep.X(c));
    }
    // K in generator coordinates
    Entries kg(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int e = 0; e < n; ++e)
      for (int p = 0; p < n; ++p) kg[static_cast<size_t>(e)][static_cast<size_t>(p)] = (e == p ? Rational(1) : Rational(0)) - cas.omega_op(e, p) / cas.c_g;
    auto kj_relation = [&](const Entries& k, int wk) {
      GMat k2 = leg2(k, d, wk), k1 = leg1(k, d, wk);
      return (rmul(k2, oj2) - lmul(oj2, k2)) - (rmul(k1, oj1) - lmul(oj1, k1));
    };
    GMat relmat = kj_relation(kg, n);
    SparseEchelon relI(n);
    base_relations(relI);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        SparseVec v = to_sparse(relmat.at(r, c), n);
        if (!v.empty()) relI.insert(v);
      }
    int upperI = n - closed_relation_rank(relI, btab, n);
    bool modelI_ok = false;
    auto [lowerI, mI] = model_rank(ebasis, modelI_ok);
    int wm = static_cast<int>(mI.front().size());
    Entries km = mI;
    Entries om = apply_omega(cas.omega_op, mI, wm);
    for (int p = 0; p < n; ++p)
      for (int c = 0; c < wm; ++c) km[static_cast<size_t>(p)][static_cast<size_t>(c)] -= om[static_cast<size_t>(p)][static_cast<size_t>(c)] / cas.c_g;
    bool kj_model = kj_relation(km, wm).is_zero();
    out.add("model-satisfies-KJ", modelI_ok && kj_model);
    int expectI = w + static_cast<int>(ebasis.size());
    out.add("dim-gI", lowerI == upperI && upperI == expectI,
            dims_json({{"lower", lowerI}, {"upper", upperI}, {"dim_g", w}, {"dim_E", static_cast<int>(ebasis.size())}}));
  }

  // W(x) = span{[x, rho J(X_a)]} meets ad(g) trivially
  {
    bool ok = true;
    Json dims = Json::array();
    for (const auto& xv : dec.eg_part) {
      QMatrix x = QMatrix::from_vec(d, d, xv);
      std::vector<std::vector<Rational>> wx;
      for (const auto& j : rep.rho_J) wx.push_back(commutator(x, j).vec());
      int rw = rank(from_rows(wx, n));
      auto both = wx;
      both.insert(both.end(), dec.ad_part.begin(), dec.ad_part.end());
      int rb = rank(from_rows(both, n));
      ok = ok && rb == rw + w && (rw == 0 || rw == w);
      dims.push_back(rw);
    }
    out.add("W(x)-meets-ad-trivially", ok, Json{{"dim_W", dims}});
  }
  out.extra = Json{{"dim_E", static_cast<int>(ebasis.size())}, {"dim_Eg", dec.dim_eg()}};
  return out;
}

namespace {

std::vector<Rational> unit_vec(int n, int k) {
  std::vector<Rational> v(static_cast<size_t>(n));
  v[static_cast<size_t>(k)] = 1;
  return v;
}

// Highest weight vectors of the adjoint module: kernel of ad(n+) on g, with n+
// the strictly upper triangular part of g.
std::vector<std::vector<Rational>> adjoint_highest(const LieAlgebraData& data) {
  int w = data.dim(), N = data.N;
  QMatrix cond(N * (N + 1) / 2, w);
  int row = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j <= i; ++j, ++row)
      for (int a = 0; a < w; ++a) cond(row, a) = data.basis[static_cast<size_t>(a)](i, j);
  auto nplus = nullspace(cond);
  QMatrix adm(static_cast<int>(nplus.size()) * w, w);
  for (size_t k = 0; k < nplus.size(); ++k)
    for (int b = 0; b < w; ++b) {
      auto col = data.bracket_coords(nplus[k], unit_vec(w, b));
      for (int g = 0; g < w; ++g) adm(static_cast<int>(k) * w + g, b) = col[static_cast<size_t>(g)];
    }
  return nullspace(adm);
}

// T(X,Y,U) = sum over dual pairs of ([X,X_l],[[Y,X_m],[U,X_n]]) {X^l, X^m, s(X^n)}
//          = -1/24 sum_{ab} Sym(rho[X,[X_a,X_b]], rho[Y,X^a], s[U,X^b])
// for a fixed X, all basis Y and U.
class TripleSum {
 public:
  TripleSum(const LieAlgebraData& data, const Representation& rep, bool j_third)
      : data_(data), rep_(rep), j_third_(j_third), w_(data.dim()), d_(rep.dim) {
    for (int a = 0; a < w_; ++a) {
      std::vector<Rational> c(static_cast<size_t>(w_));
      for (int b = 0; b < w_; ++b) c[static_cast<size_t>(b)] = data.gram_inv(b, a);
      dual_.push_back(std::move(c));
    }
    for (int y = 0; y < w_; ++y) {
      std::vector<QMatrix> bs, cs;
      for (int a = 0; a < w_; ++a) {
        auto br = data.bracket_coords(unit_vec(w_, y), dual_[static_cast<size_t>(a)]);
        bs.push_back(rep.X(br));
        cs.push_back(j_third_ ? rep.J(br) : rep.X(br));
      }
      b_.push_back(std::move(bs));
      c_.push_back(std::move(cs));
    }
  }

  // Returns the matrices T(X, Y, U) for all basis Y, U, index y*w+u.
  std::vector<QMatrix> all_for(const std::vector<Rational>& x) const {
    int w = w_;
    std::vector<QMatrix> a(static_cast<size_t>(w * w));
    for (int al = 0; al < w; ++al)
      for (int be = 0; be < w; ++be) {
        auto inner = data_.bracket_coords(unit_vec(w, al), unit_vec(w, be));
        a[static_cast<size_t>(al * w + be)] = rep_.X(data_.bracket_coords(x, inner));
      }
    QMatrix zero(d_, d_);
    std::vector<std::vector<QMatrix>> P(static_cast<size_t>(w)), Pp(static_cast<size_t>(w)), Q(static_cast<size_t>(w)), Qp(static_cast<size_t>(w));
    for (int y = 0; y < w; ++y) {
      P[static_cast<size_t>(y)].assign(static_cast<size_t>(w), zero);
      Pp[static_cast<size_t>(y)].assign(static_cast<size_t>(w), zero);
      Q[static_cast<size_t>(y)].assign(static_cast<size_t>(w), zero);
      Qp[static_cast<size_t>(y)].assign(static_cast<size_t>(w), zero);
      for (int al = 0; al < w; ++al)
        for (int be = 0; be < w; ++be) {
          const QMatrix& m = a[static_cast<size_t>(al * w + be)];
          if (m.is_zero()) continue;
          const QMatrix& b = b_[static_cast<size_t>(y)][static_cast<size_t>(al)];
          if (!b.is_zero()) {
            P[static_cast<size_t>(y)][static_cast<size_t>(be)] += m * b;
            Pp[static_cast<size_t>(y)][static_cast<size_t>(be)] += b * m;
          }
          const QMatrix& c = c_[static_cast<size_t>(y)][static_cast<size_t>(be)];
          if (!c.is_zero()) {
            Q[static_cast<size_t>(y)][static_cast<size_t>(al)] += c * m;
            Qp[static_cast<size_t>(y)][static_cast<size_t>(al)] += m * c;
          }
        }
    }
    std::vector<QMatrix> out(static_cast<size_t>(w * w), zero);
    Rational s = rat(-1, 24);
    for (int y = 0; y < w; ++y)
      for (int u = 0; u < w; ++u) {
        QMatrix acc(d_, d_);
        for (int k = 0; k < w; ++k) {
          const QMatrix& c = c_[static_cast<size_t>(u)][static_cast<size_t>(k)];
          if (!c.is_zero()) {
            acc += P[static_cast<size_t>(y)][static_cast<size_t>(k)] * c;
            acc += Pp[static_cast<size_t>(y)][static_cast<size_t>(k)] * c;
            acc += c * Pp[static_cast<size_t>(y)][static_cast<size_t>(k)];
          }
          const QMatrix& b = b_[static_cast<size_t>(y)][static_cast<size_t>(k)];
          if (!b.is_zero()) {
            acc += Qp[static_cast<size_t>(u)][static_cast<size_t>(k)] * b;
            acc += b * Q[static_cast<size_t>(u)][static_cast<size_t>(k)];
            acc += Q[static_cast<size_t>(u)][static_cast<size_t>(k)] * b;
          }
        }
        out[static_cast<size_t>(y * w + u)] = acc * s;
      }
    return out;
  }

 private:
  const LieAlgebraData& data_;
  const Representation& rep_;
  bool j_third_;
  int w_, d_;
  std::vector<std::vector<Rational>> dual_;
  std::vector<std::vector<QMatrix>> b_, c_;  // [Y][a] -> rho[Y, X^a], s[Y, X^a]
};

}  // namespace

Report verify_yangian_module(const LieAlgebraData& data, const Representation& rep) {
  Report out("yangian_module", family_name(data.family), data.N);
  int w = data.dim();
  std::vector<QMatrix> jb(static_cast<size_t>(w));
  bool yj1a = true, yj1b = true;
  for (int a = 0; a < w; ++a)
    for (int b = 0; b < w; ++b) {
      auto c = data.bracket_coords(unit_vec(w, a), unit_vec(w, b));
      yj1a = yj1a && commutator(rep.rho_X[static_cast<size_t>(a)], rep.rho_X[static_cast<size_t>(b)]) == rep.X(c);
      yj1b = yj1b && rep.J(c) == commutator(rep.rho_J[static_cast<size_t>(a)], rep.rho_X[static_cast<size_t>(b)]);
    }
  out.add("YJ:1-bracket", yj1a);
  out.add("YJ:1-J-equivariance", yj1b);
  out.add("YJ:2", true, Json{{"note", "J is defined on a basis and extended linearly"}});

  auto hw = adjoint_highest(data);
  std::vector<std::vector<Rational>> xs;
  bool reduced = hw.size() == 1 && data.simple;
  if (reduced)
    xs = hw;
  else
    for (int a = 0; a < w; ++a) xs.push_back(unit_vec(w, a));

  TripleSum tri(data, rep, false);
  bool yj3 = true;
  long triples = 0;
  for (const auto& x : xs) {
    auto rhs = tri.all_for(x);
    QMatrix jx = rep.J(x), rx = rep.X(x);
    for (int y = 0; y < w && yj3; ++y)
      for (int z = 0; z < w && yj3; ++z) {
        const QMatrix& jy = rep.rho_J[static_cast<size_t>(y)];
        const QMatrix& jz = rep.rho_J[static_cast<size_t>(z)];
        QMatrix lhs = commutator(jx, commutator(jy, rep.rho_X[static_cast<size_t>(z)])) - commutator(rx, commutator(jy, jz));
        ++triples;
        yj3 = lhs == rhs[static_cast<size_t>(y * w + z)];
      }
  }
  out.add("YJ:3", yj3, Json{{"triples", triples}, {"highest_weight_reduction", reduced}});

  if (rep.j_zero()) {
    out.add("YJ:4", true, Json{{"note", "every term contains rho(J) = 0"}});
  } else {
    TripleSum trj(data, rep, true);
    std::vector<std::vector<QMatrix>> tall;
    for (int a = 0; a < w; ++a) tall.push_back(trj.all_for(unit_vec(w, a)));
    auto T = [&](const std::vector<Rational>& x, int y, const std::vector<Rational>& u) {
      QMatrix acc(rep.dim, rep.dim);
      for (int a = 0; a < w; ++a) {
        if (x[static_cast<size_t>(a)] == 0) continue;
        for (int c = 0; c < w; ++c)
          if (u[static_cast<size_t>(c)] != 0) acc += tall[static_cast<size_t>(a)][static_cast<size_t>(y * w + c)] * (x[static_cast<size_t>(a)] * u[static_cast<size_t>(c)]);
      }
      return acc;
    };
    bool yj4 = true;
    long quads = 0;
    for (const auto& x : xs) {
      QMatrix jx = rep.J(x), rx = rep.X(x);
      for (int y = 0; y < w && yj4; ++y)
        for (int z = 0; z < w && yj4; ++z)
          for (int ww = 0; ww < w && yj4; ++ww) {
            const QMatrix& jy = rep.rho_J[static_cast<size_t>(y)];
            const QMatrix& jz = rep.rho_J[static_cast<size_t>(z)];
            const QMatrix& jw = rep.rho_J[static_cast<size_t>(ww)];
            QMatrix lhs = commutator(commutator(jx, jy), commutator(rep.rho_X[static_cast<size_t>(z)], jw)) +
                          commutator(commutator(jz, jw), commutator(rx, jy));
            auto zw = data.bracket_coords(unit_vec(w, z), unit_vec(w, ww));
            auto xy = data.bracket_coords(x, unit_vec(w, y));
            QMatrix rhs = T(x, y, zw);
            for (int c = 0; c < w; ++c)
              if (xy[static_cast<size_t>(c)] != 0) rhs += T(unit_vec(w, z), ww, unit_vec(w, c)) * xy[static_cast<size_t>(c)];
            ++quads;
            yj4 = lhs == rhs;
          }
    }
    out.add("YJ:4", yj4, Json{{"quadruples", quads}, {"highest_weight_reduction", reduced}});
  }
  return out;
}

}  // namespace yf
