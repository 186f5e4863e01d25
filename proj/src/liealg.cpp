#include "yf/liealg.hpp"

#include <algorithm>
#include <map>

namespace yf {

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SO: return "so";
    case Family::SP: return "sp";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  std::string t = s;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (t == "sl") return Family::SL;
  if (t == "so") return Family::SO;
  if (t == "sp") return Family::SP;
  throw InvalidAlgebra("unknown family '" + s + "'");
}

int IndexLayer::signed_index(int p) const {
  if (family == Family::SL) return p + 1;
  int n = N / 2;
  if (N % 2 == 1) return p - n;
  return p < n ? p - n : p - n + 1;
}

Rational LieAlgebraData::form(const QMatrix& a, const QMatrix& b) const { return form_scale * (a * b).trace(); }

std::vector<Rational> LieAlgebraData::coords(const QMatrix& m) const {
  std::vector<Rational> c(static_cast<size_t>(dim()));
  const auto& v = m.data();
  for (int g = 0; g < dim(); ++g)
    for (int k = 0; k < N * N; ++k)
      if (coord_map(g, k) != 0 && v[static_cast<size_t>(k)] != 0) c[static_cast<size_t>(g)] += coord_map(g, k) * v[static_cast<size_t>(k)];
  return c;
}

QMatrix LieAlgebraData::element(const std::vector<Rational>& c) const {
  QMatrix m(N, N);
  for (int a = 0; a < dim(); ++a)
    if (c[static_cast<size_t>(a)] != 0) m += basis[static_cast<size_t>(a)] * c[static_cast<size_t>(a)];
  return m;
}

std::vector<Rational> LieAlgebraData::bracket_coords(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
  int d = dim();
  std::vector<Rational> out(static_cast<size_t>(d));
  Rational t;
  for (int a = 0; a < d; ++a) {
    if (x[static_cast<size_t>(a)] == 0) continue;
    for (int b = 0; b < d; ++b) {
      if (y[static_cast<size_t>(b)] == 0) continue;
      mpq_mul(t.get_mpq_t(), x[static_cast<size_t>(a)].get_mpq_t(), y[static_cast<size_t>(b)].get_mpq_t());
      for (const auto& [g, f] : bracket[static_cast<size_t>(a * d + b)]) out[static_cast<size_t>(g)] += t * f;
    }
  }
  return out;
}

QMatrix LieAlgebraData::transpose(const QMatrix& m) const {
  QMatrix t(N, N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      if (m(p, q) != 0) t(idx.neg(q), idx.neg(p)) = m(p, q) * idx.theta(p, q);
  return t;
}

QMatrix LieAlgebraData::theta_table() const {
  QMatrix t(N, N);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q) t(p, q) = idx.theta(p, q);
  return t;
}

namespace {

std::vector<Rational> flat(const QMatrix& m) { return m.vec(); }

void finish(LieAlgebraData& d) {
  int n = d.dim();
  d.gram = QMatrix(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Rational f = d.form(d.basis[static_cast<size_t>(a)], d.basis[static_cast<size_t>(b)]);
      d.gram(a, b) = f;
      d.gram(b, a) = f;
    }
  try {
    d.gram_inv = inverse(d.gram);
  } catch (const std::domain_error&) {
    throw InvalidAlgebra("invariant form is degenerate on the basis span");
  }
  d.dual.assign(static_cast<size_t>(n), QMatrix(d.N, d.N));
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a)
      if (d.gram_inv(a, b) != 0) d.dual[static_cast<size_t>(b)] += d.basis[static_cast<size_t>(a)] * d.gram_inv(a, b);
  d.coord_map = QMatrix(n, d.N * d.N);
  for (int g = 0; g < n; ++g)
    for (int i = 0; i < d.N; ++i)
      for (int j = 0; j < d.N; ++j) d.coord_map(g, i * d.N + j) = d.form_scale * d.dual[static_cast<size_t>(g)](j, i);
  d.bracket.assign(static_cast<size_t>(n) * static_cast<size_t>(n), {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      QMatrix c = commutator(d.basis[static_cast<size_t>(a)], d.basis[static_cast<size_t>(b)]);
      auto co = d.coords(c);
      if (!(d.element(co) == c)) throw InvalidAlgebra("basis span is not closed under the bracket");
      auto& sp = d.bracket[static_cast<size_t>(a * n + b)];
      for (int g = 0; g < n; ++g)
        if (co[static_cast<size_t>(g)] != 0) sp.emplace_back(g, co[static_cast<size_t>(g)]);
    }
}

}  // namespace

LieAlgebraData build_lie(Family family, int N) {
  LieAlgebraData d;
  d.family = family;
  d.N = N;
  d.idx = IndexLayer{family, N};
  switch (family) {
    case Family::SL:
      if (N < 2) throw InvalidAlgebra("sl_N needs N >= 2");
      break;
    case Family::SO:
      if (N < 3) throw InvalidAlgebra("so_N needs N >= 3");
      break;
    case Family::SP:
      if (N < 2 || N % 2 != 0) throw InvalidAlgebra("sp_N needs even N >= 2");
      break;
  }
  if (family == Family::SL) {
    d.form_scale = 1;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (i != j) d.basis.push_back(QMatrix::unit(N, i, j));
    for (int i = 0; i + 1 < N; ++i) d.basis.push_back(QMatrix::unit(N, i, i) - QMatrix::unit(N, i + 1, i + 1));
  } else {
    d.form_scale = rat(1, 2);
    d.kappa = family == Family::SO ? Rational(rat(N, 2) - 1) : Rational(rat(N, 2) + 1);
    d.simple = !(family == Family::SO && N == 4);
    std::vector<std::vector<Rational>> rows;
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        QMatrix f = QMatrix::unit(N, p, q) - QMatrix::unit(N, d.idx.neg(q), d.idx.neg(p)) * d.idx.theta(p, q);
        if (f.is_zero()) continue;
        rows.push_back(flat(f));
        if (rank(from_rows(rows, N * N)) == static_cast<int>(rows.size()))
          d.basis.push_back(f);
        else
          rows.pop_back();
      }
  }
  int expect = family == Family::SL ? N * N - 1 : family == Family::SO ? N * (N - 1) / 2 : N * (N + 1) / 2;
  if (d.dim() != expect) throw InvalidAlgebra("unexpected dimension");
  if (family != Family::SL)
    for (const auto& x : d.basis)
      if (!(d.transpose(x) == -x)) throw InvalidAlgebra("basis element is not antisymmetric under the transpose");
  finish(d);
  return d;
}

LieAlgebraData with_basis(const LieAlgebraData& data, std::vector<QMatrix> basis) {
  LieAlgebraData d = data;
  d.basis = std::move(basis);
  std::vector<std::vector<Rational>> rows;
  for (const auto& x : d.basis) rows.push_back(flat(x));
  if (d.dim() != data.dim() || rank(from_rows(rows, d.N * d.N)) != d.dim()) throw InvalidAlgebra("not a basis");
  for (const auto& x : d.basis)
    if (!(data.element(data.coords(x)) == x)) throw InvalidAlgebra("basis element outside the algebra");
  finish(d);
  return d;
}

bool Representation::j_zero() const {
  for (const auto& m : rho_J)
    if (!m.is_zero()) return false;
  return true;
}

QMatrix Representation::X(const std::vector<Rational>& c) const {
  QMatrix m(dim, dim);
  for (size_t a = 0; a < rho_X.size(); ++a)
    if (c[a] != 0) m += rho_X[a] * c[a];
  return m;
}

QMatrix Representation::J(const std::vector<Rational>& c) const {
  QMatrix m(dim, dim);
  for (size_t a = 0; a < rho_J.size(); ++a)
    if (c[a] != 0) m += rho_J[a] * c[a];
  return m;
}

Representation vector_rep(const LieAlgebraData& data) {
  Representation r;
  r.dim = data.N;
  r.rho_X = data.basis;
  r.rho_J.assign(data.basis.size(), QMatrix(data.N, data.N));
  return r;
}

Representation shifted_rep(const Representation& rep, const Rational& c) {
  Representation r = rep;
  for (size_t a = 0; a < r.rho_J.size(); ++a) r.rho_J[a] += rep.rho_X[a] * c;
  return r;
}

QMatrix ad_operator(const QMatrix& x) {
  int n = x.rows();
  QMatrix id = QMatrix::identity(n);
  return kron(x, id) - kron(id, x.transpose());
}

namespace {

std::vector<QMatrix> rho_dual(const LieAlgebraData& data, const Representation& rep) {
  std::vector<QMatrix> out;
  for (int a = 0; a < data.dim(); ++a) {
    std::vector<Rational> c(static_cast<size_t>(data.dim()));
    for (int b = 0; b < data.dim(); ++b) c[static_cast<size_t>(b)] = data.gram_inv(b, a);
    out.push_back(rep.X(c));
  }
  return out;
}

}  // namespace

CasimirData casimir(const LieAlgebraData& data, const Representation& rep) {
  CasimirData c;
  int d = rep.dim;
  auto rd = rho_dual(data, rep);
  c.omega_rho = QMatrix(d * d, d * d);
  c.omega_op = QMatrix(d * d, d * d);
  for (int a = 0; a < data.dim(); ++a) {
    c.omega_rho += kron(rep.rho_X[static_cast<size_t>(a)], rd[static_cast<size_t>(a)]);
    c.omega_op += ad_operator(rep.rho_X[static_cast<size_t>(a)]) * ad_operator(rd[static_cast<size_t>(a)]);
  }
  bool have = false;
  for (int a = 0; a < data.dim(); ++a) {
    auto v = rep.rho_X[static_cast<size_t>(a)].vec();
    QMatrix col = QMatrix::from_vec(d * d, 1, v);
    QMatrix img = c.omega_op * col;
    for (int k = 0; k < d * d; ++k) {
      if (v[static_cast<size_t>(k)] == 0) continue;
      if (!have) {
        c.c_g = img(k, 0) / v[static_cast<size_t>(k)];
        have = true;
      }
      break;
    }
    if (!have || !(img == col * c.c_g)) throw std::runtime_error("Casimir operator is not scalar on ad(g)");
  }
  return c;
}

CasimirData casimir(const LieAlgebraData& data) { return casimir(data, vector_rep(data)); }

int Decomposition::dim_w() const {
  int s = 0;
  for (const auto& w : w_parts) s += static_cast<int>(w.first.size());
  return s;
}

Decomposition decompose_ad(const LieAlgebraData& data, const Representation& rep) {
  Decomposition dec;
  int d = rep.dim, n2 = d * d;
  CasimirData cas = casimir(data, rep);
  for (const auto& x : rep.rho_X) dec.ad_part.push_back(x.vec());

  QMatrix stacked(data.dim() * n2, n2);
  for (int a = 0; a < data.dim(); ++a) {
    QMatrix ad = ad_operator(rep.rho_X[static_cast<size_t>(a)]);
    for (int i = 0; i < n2; ++i)
      for (int j = 0; j < n2; ++j) stacked(a * n2 + i, j) = ad(i, j);
  }
  dec.eg_part = nullspace(stacked);

  dec.charpoly = charpoly(cas.omega_op);
  UPoly cp(dec.charpoly);
  auto roots = rational_roots(cp);
  UPoly rest = cp;
  std::map<Rational, int> mult;
  for (const auto& r : roots) {
    UPoly lin(std::vector<Rational>{-r, Rational(1)});
    while (true) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero()) break;
      rest = q;
      ++mult[r];
    }
  }
  if (rest.degree() != 0) throw UnsupportedDecomposition("Casimir operator has non-rational eigenvalues", dec.charpoly);

  std::vector<std::vector<Rational>> cols = dec.ad_part;
  for (const auto& [r, m] : mult) {
    auto eig = nullspace(cas.omega_op - QMatrix::identity(n2) * r);
    if (static_cast<int>(eig.size()) != m) throw UnsupportedDecomposition("Casimir operator is not diagonalizable", dec.charpoly);
    if (r == 0) {
      auto both = dec.eg_part;
      both.insert(both.end(), eig.begin(), eig.end());
      if (eig.size() != dec.eg_part.size() || rank(from_rows(both, n2)) != m)
        throw UnsupportedDecomposition("zero eigenspace differs from the joint kernel", dec.charpoly);
      cols.insert(cols.end(), dec.eg_part.begin(), dec.eg_part.end());
      continue;
    }
    std::vector<std::vector<Rational>> block;
    if (r == cas.c_g) {
      // complement of ad(g) inside the c_g eigenspace
      auto acc = dec.ad_part;
      for (const auto& v : eig) {
        acc.push_back(v);
        if (rank(from_rows(acc, n2)) == static_cast<int>(acc.size()))
          block.push_back(v);
        else
          acc.pop_back();
      }
    } else {
      block = eig;
    }
    if (!block.empty()) dec.w_parts.emplace_back(block, r);
  }
  if (mult.count(Rational(0)) == 0 && !dec.eg_part.empty())
    throw UnsupportedDecomposition("joint kernel without zero eigenvalue", dec.charpoly);
  for (const auto& w : dec.w_parts) cols.insert(cols.end(), w.first.begin(), w.first.end());
  if (static_cast<int>(cols.size()) != n2) throw UnsupportedDecomposition("parts do not span gl(V)", dec.charpoly);
  dec.C = from_rows(cols, n2).transpose();
  dec.A = inverse(dec.C);
  return dec;
}

namespace {

Json matrix_json(const QMatrix& m) {
  Json a = Json::array();
  for (const auto& x : m.data()) a.push_back(to_string(x));
  return a;
}

}  // namespace

Json lie_json(const LieAlgebraData& data) {
  Json j;
  j["family"] = family_name(data.family);
  j["N"] = data.N;
  j["dim"] = data.dim();
  j["simple"] = data.simple;
  j["form_scale"] = to_string(data.form_scale);
  if (data.kappa) j["kappa"] = to_string(*data.kappa);
  Json b = Json::array(), du = Json::array();
  for (const auto& x : data.basis) b.push_back(matrix_json(x));
  for (const auto& x : data.dual) du.push_back(matrix_json(x));
  j["basis"] = std::move(b);
  j["dual_basis"] = std::move(du);
  if (data.family != Family::SL) j["theta"] = matrix_json(data.theta_table());
  return j;
}

}  // namespace yf
