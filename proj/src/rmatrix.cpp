#include "yf/rmatrix.hpp"

#include "yf/echelon.hpp"

namespace yf {

RMat RMat::from_terms(int N, const std::vector<std::pair<QMatrix, RationalFunction>>& terms) {
  RMat r(N);
  int n = N * N;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RationalFunction f;
      for (const auto& [m, g] : terms)
        if (m(i, j) != 0) f = f + g * RationalFunction(m(i, j));
      r.set(i, j, f);
    }
  return r;
}

RationalFunction RMat::entry(int r, int c) const {
  auto it = e_.find({r, c});
  return it == e_.end() ? RationalFunction() : it->second;
}

void RMat::set(int r, int c, const RationalFunction& f) {
  if (f.is_zero())
    e_.erase({r, c});
  else
    e_[{r, c}] = f;
}

std::optional<SparseQMatrix> RMat::eval(const Rational& u) const {
  SparseQMatrix m(size());
  for (const auto& [rc, f] : e_) {
    auto v = f.eval(u);
    if (!v) return std::nullopt;
    if (*v != 0) m.add(rc.first, rc.second, *v);
  }
  return m;
}

int RMat::max_degree() const {
  int d = 0;
  for (const auto& [rc, f] : e_) d = std::max({d, f.num().degree(), f.den().degree()});
  return d;
}

RSeries RMat::expand(int K) const {
  RSeries s;
  s.N = N_;
  s.coeffs.assign(static_cast<size_t>(K) + 1, QMatrix(size(), size()));
  for (const auto& [rc, f] : e_) {
    TruncSeries t = f.expand(K);
    for (int k = 0; k <= K; ++k) s.coeffs[static_cast<size_t>(k)](rc.first, rc.second) = t[k];
  }
  return s;
}

RMat RMat::compose_affine(const Rational& a, const Rational& b) const {
  RMat r(N_);
  for (const auto& [rc, f] : e_) r.e_[rc] = f.compose_affine(a, b);
  return r;
}

RMat RMat::flip() const {
  RMat r(N_);
  auto sw = [&](int x) { return (x % N_) * N_ + x / N_; };
  for (const auto& [rc, f] : e_) r.e_[{sw(rc.first), sw(rc.second)}] = f;
  return r;
}

RMat operator*(const RMat& a, const RMat& b) {
  RMat c(a.N_);
  std::vector<std::vector<std::pair<int, const RationalFunction*>>> brows(static_cast<size_t>(b.size()));
  for (const auto& [rc, f] : b.e_) brows[static_cast<size_t>(rc.first)].emplace_back(rc.second, &f);
  std::map<std::pair<int, int>, RationalFunction> acc;
  for (const auto& [rc, f] : a.e_)
    for (const auto& [j, g] : brows[static_cast<size_t>(rc.second)]) {
      auto& slot = acc[{rc.first, j}];
      slot = slot + f * *g;
    }
  for (auto& [rc, f] : acc) c.set(rc.first, rc.second, f);
  return c;
}

QMatrix perm_matrix(int N) {
  QMatrix p(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) p(i * N + j, j * N + i) = 1;
  return p;
}

QMatrix q_matrix(const LieAlgebraData& data) {
  int N = data.N;
  QMatrix q(N * N, N * N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) q(i * N + data.idx.neg(i), j * N + data.idx.neg(j)) = data.idx.theta(i, j);
  return q;
}

namespace {

RationalFunction inv_linear(const Rational& shift) {  // (u - shift)^{-1}
  return RationalFunction(UPoly(Rational(1)), UPoly(std::vector<Rational>{-shift, Rational(1)}));
}

}  // namespace

RMat yang_r(int N) {
  if (N < 2) throw InvalidAlgebra("yang_r needs N >= 2");
  return RMat::from_terms(N, {{QMatrix::identity(N * N), RationalFunction(1)}, {perm_matrix(N), -inv_linear(0)}});
}

RMat sosp_r(Family family, int N) {
  if (family == Family::SL) throw InvalidAlgebra("sosp_r needs SO or SP");
  LieAlgebraData d = build_lie(family, N);
  return RMat::from_terms(N, {{QMatrix::identity(N * N), RationalFunction(1)},
                              {perm_matrix(N), -inv_linear(0)},
                              {q_matrix(d), inv_linear(*d.kappa)}});
}

namespace {

// R acting on legs (a, b) of V^{(x)3}, a < b.
SparseQMatrix embed(const SparseQMatrix& r, int N, int a, int b) {
  int n3 = N * N * N;
  SparseQMatrix out(n3);
  int c = 3 - a - b;
  auto digit = [&](int x, int leg) { return leg == 0 ? x / (N * N) : leg == 1 ? (x / N) % N : x % N; };
  auto compose = [&](int x, int y, int z) {  // x on leg a, y on leg b, z on leg c
    int d[3];
    d[a] = x;
    d[b] = y;
    d[c] = z;
    return (d[0] * N + d[1]) * N + d[2];
  };
  for (int row = 0; row < n3; ++row) {
    int x = digit(row, a), y = digit(row, b), z = digit(row, c);
    std::vector<std::pair<int, Rational>> entries;
    for (const auto& [col, v] : r.row(x * N + y)) entries.emplace_back(compose(col / N, col % N, z), v);
    std::sort(entries.begin(), entries.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    for (const auto& [col, v] : entries) out.add(row, col, v);
  }
  return out;
}

}  // namespace

bool check_qybe(const RMat& R, CertifyStats* stats) {
  int N = R.N();
  auto legs = [&R, N](const Rational& u, const Rational& v)
      -> std::optional<std::tuple<SparseQMatrix, SparseQMatrix, SparseQMatrix>> {
    auto ruv = R.eval(u - v), ru = R.eval(u), rv = R.eval(v);
    if (!ruv || !ru || !rv) return std::nullopt;
    return std::tuple{embed(*ruv, N, 0, 1), embed(*ru, N, 0, 2), embed(*rv, N, 1, 2)};
  };
  BivariateEval lhs = [&](const Rational& u, const Rational& v) -> std::optional<std::vector<Rational>> {
    auto l = legs(u, v);
    if (!l) return std::nullopt;
    auto& [r12, r13, r23] = *l;
    return (r12 * r13 * r23).flatten();
  };
  BivariateEval rhs = [&](const Rational& u, const Rational& v) -> std::optional<std::vector<Rational>> {
    auto l = legs(u, v);
    if (!l) return std::nullopt;
    auto& [r12, r13, r23] = *l;
    return (r23 * r13 * r12).flatten();
  };
  int d = 3 * R.max_degree() + 3;
  return certify_bivariate_identity(lhs, rhs, {d, d}, stats);
}

RationalFunction check_unitarity(const RMat& R) {
  RMat prod = R * R.flip().compose_affine(-1, 0);
  RationalFunction f = prod.entry(0, 0);
  for (int i = 0; i < R.size(); ++i)
    if (!(prod.entry(i, i) == f)) throw UnitarityFailure("R_12(u) R_21(-u) has unequal diagonal entries");
  for (const auto& [rc, g] : prod.entries())
    if (rc.first != rc.second) throw UnitarityFailure("R_12(u) R_21(-u) is not diagonal");
  return f;
}

RSeries solve_intertwiner(const LieAlgebraData& data, const Representation& rep, int K) {
  if (K < 1) throw std::invalid_argument("order must be >= 1");
  int d = rep.dim, n = d * d, w = data.dim();
  Decomposition dec = decompose_ad(data, rep);
  if (dec.dim_eg() != 1) throw NonIrreducible("End_g V has dimension " + std::to_string(dec.dim_eg()));
  CasimirData cas = casimir(data, rep);
  QMatrix id_d = QMatrix::identity(d), P = perm_matrix(d);

  std::vector<QMatrix> x1(static_cast<size_t>(w)), x2(static_cast<size_t>(w)), c(static_cast<size_t>(w)), cp(static_cast<size_t>(w));
  for (int a = 0; a < w; ++a) {
    x1[a] = kron(rep.rho_X[a], id_d);
    x2[a] = kron(id_d, rep.rho_X[a]);
    QMatrix jj = kron(rep.rho_J[a], id_d) + kron(id_d, rep.rho_J[a]);
    c[a] = jj + commutator(x1[a], cas.omega_rho) * rat(1, 2);
    cp[a] = jj + commutator(x2[a], cas.omega_rho) * rat(1, 2);
  }

  // Column 0 holds minus the right-hand side; column 1 + r*n + s is R(r,s).
  auto commutator_row = [&](const QMatrix& x, int r, int s, const Rational& rhs) {
    std::map<int, Rational> acc;
    for (int k = 0; k < n; ++k) {
      if (x(r, k) != 0) acc[1 + k * n + s] += x(r, k);
      if (x(k, s) != 0) acc[1 + r * n + k] -= x(k, s);
    }
    SparseVec v;
    if (rhs != 0) v.emplace_back(0, -rhs);
    for (auto& [col, val] : acc)
      if (val != 0) v.emplace_back(col, val);
    return v;
  };

  RSeries out;
  out.N = d;
  out.coeffs.push_back(QMatrix::identity(n));
  for (int m = 1; m <= K; ++m) {
    const QMatrix& prev = out.coeffs.back();
    SparseEchelon ech(n * n + 1);
    std::vector<QMatrix> rhs(static_cast<size_t>(w));
    for (int a = 0; a < w; ++a) {
      rhs[a] = prev * cp[a] - c[a] * prev;
      QMatrix sum = x1[a] + x2[a];
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          SparseVec v = commutator_row(x1[a], r, s, rhs[a](r, s));
          if (!v.empty()) ech.insert(v);
          v = commutator_row(sum, r, s, 0);
          if (!v.empty()) ech.insert(v);
        }
      if (ech.is_pivot(0)) throw NotAModule("intertwiner equation inconsistent at order " + std::to_string(m));
    }
    int free_dims = n * n - ech.rank();
    if (free_dims != 1) throw NonIrreducible("solution space of dimension " + std::to_string(free_dims) + " at order " + std::to_string(m));
    ech.finalize();
    QMatrix sol(n, n);
    for (const auto& row : ech.rows()) {
      int p = row.back().first - 1;
      Rational val = row.front().first == 0 ? Rational(-row.front().second) : Rational(0);
      sol(p / n, p % n) = val;
    }
    // the free line is c I; fix c
    Rational shift;
    if (m % 2 == 1) {
      shift = -sol.trace() / n;
    } else {
      QMatrix u = sol + P * sol * P;  // j = 0 and j = m terms, (-1)^m = 1
      for (int j = 1; j < m; ++j) {
        QMatrix t = out.coeffs[m - j] * P * out.coeffs[j] * P;
        u += j % 2 ? t * Rational(-1) : t;
      }
      shift = -u.trace() / (2 * n);
    }
    sol += QMatrix::identity(n) * shift;
    for (int a = 0; a < w; ++a) {
      if (!commutator(x1[a] + x2[a], sol).is_zero()) throw std::logic_error("intertwiner solution does not commute with g");
      if (!(commutator(x1[a], sol) == rhs[a])) throw std::logic_error("intertwiner solution violates the recursion");
    }
    out.coeffs.push_back(sol);
  }
  return out;
}

TruncSeries proportional_to(const RSeries& R1, const RSeries& R2) {
  int K = std::min(R1.order(), R2.order());
  int n = R1.coeffs.at(0).rows();
  std::vector<Rational> g(static_cast<size_t>(K) + 1);
  Rational s;
  if (!scalar_of_identity(R1.coeffs[0], &s) || !scalar_of_identity(R2.coeffs[0], &s) || !(R1.coeffs[0] == R2.coeffs[0]))
    throw NotProportional("leading coefficients differ");
  g[0] = 1;
  for (int k = 1; k <= K; ++k) {
    QMatrix rem = R1.coeffs[k];
    for (int j = 0; j < k; ++j) rem = rem - R2.coeffs[k - j] * g[j];
    if (!scalar_of_identity(rem, &s)) throw NotProportional("ratio is not scalar at order " + std::to_string(k));
    g[k] = s;
  }
  for (int k = 0; k <= K; ++k) {
    QMatrix back(n, n);
    for (int j = 0; j <= k; ++j) back += R2.coeffs[k - j] * g[j];
    if (!(back == R1.coeffs[k])) throw std::logic_error("back-multiplication check failed");
  }
  return TruncSeries(g, K);
}

TruncSeries proportional_to(const RSeries& R1, const RMat& R2) { return proportional_to(R1, R2.expand(R1.order())); }

RSeries expansion_target(const LieAlgebraData& data, const Representation& rep) {
  CasimirData cas = casimir(data, rep);
  int w = data.dim(), n = rep.dim * rep.dim;
  QMatrix jo(n, n);
  for (int a = 0; a < w; ++a) {
    std::vector<Rational> dual(static_cast<size_t>(w));
    for (int b = 0; b < w; ++b) dual[b] = data.gram_inv(b, a);
    QMatrix x = rep.X(dual);
    jo += kron(rep.rho_J[a], x) - kron(x, rep.rho_J[a]);
  }
  RSeries t;
  t.N = rep.dim;
  t.coeffs = {QMatrix::identity(n), cas.omega_rho * Rational(-1), jo + cas.omega_rho * cas.omega_rho * rat(1, 2)};
  return t;
}

Report expansion_check(const RSeries& R, const LieAlgebraData& data, const Representation& rep) {
  Report out("expansion", family_name(data.family), data.N);
  out.K = 2;
  RSeries t = expansion_target(data, rep);
  RSeries r = R;
  if (r.order() < 2) throw std::invalid_argument("expansion_check needs order >= 2");
  r.coeffs.resize(3);
  try {
    TruncSeries g = proportional_to(r, t);
    out.add("proportional-to-second-order-expansion", true, Json{{"ratio", rationals_json(g.coeffs())}});
  } catch (const NotProportional& e) {
    out.add("proportional-to-second-order-expansion", false, Json{{"reason", e.what()}});
  }
  return out;
}

Report expansion_check(const RMat& R, const LieAlgebraData& data, const Representation& rep) {
  return expansion_check(R.expand(2), data, rep);
}

Json qmatrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

Json rmat_json(const RMat& R) {
  Json e = Json::array();
  for (const auto& [rc, f] : R.entries())
    e.push_back(Json{{"row", rc.first}, {"col", rc.second}, {"num", rationals_json(f.num().coeffs())}, {"den", rationals_json(f.den().coeffs())}});
  return Json{{"N", R.N()}, {"size", R.size()}, {"entries", e}};
}

Json rseries_json(const RSeries& R) {
  Json c = Json::array();
  for (const auto& m : R.coeffs) c.push_back(qmatrix_json(m));
  return Json{{"N", R.N}, {"order", R.order()}, {"coeffs", c}};
}

}  // namespace yf
