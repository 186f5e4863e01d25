#include <set>

#include "yf/yangian.hpp"

namespace yf {

namespace {

NCPoly t_or_delta(int i, int j, int r) {
  if (r > 0) return NCPoly::gen(i, j, r);
  if (r == 0 && i == j) return NCPoly(1);
  return NCPoly();
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  UPoly g = gcd(a, b);
  return divmod(a * b, g).first.monic();
}

// Nonzero entries of a square matrix, by row and by column.
struct SparseView {
  std::vector<std::vector<std::pair<int, Rational>>> by_row, by_col;
  explicit SparseView(const QMatrix& m) : by_row(static_cast<size_t>(m.rows())), by_col(static_cast<size_t>(m.cols())) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (m(r, c) != 0) {
          by_row[static_cast<size_t>(r)].emplace_back(c, m(r, c));
          by_col[static_cast<size_t>(c)].emplace_back(r, m(r, c));
        }
  }
};

}  // namespace

RTTPresentation rtt_relations(Family family, int N, int K) {
  if (K < 1) throw std::invalid_argument("truncation order must be >= 1");
  RTTPresentation pres;
  pres.lie = build_lie(family, N);
  pres.casimir = casimir(pres.lie);
  pres.R = family == Family::SL ? yang_r(N) : sosp_r(family, N);
  pres.K = K;
  pres.dim_eg = decompose_ad(pres.lie, vector_rep(pres.lie)).dim_eg();

  int n2 = N * N;
  UPoly D(Rational(1));
  for (const auto& [rc, f] : pres.R.entries()) D = lcm(D, f.den());
  std::vector<std::vector<UPoly>> M(static_cast<size_t>(n2), std::vector<UPoly>(static_cast<size_t>(n2)));
  int d = 0;
  for (const auto& [rc, f] : pres.R.entries()) {
    UPoly p = f.num() * divmod(D, f.den()).first;
    d = std::max(d, p.degree());
    M[static_cast<size_t>(rc.first)][static_cast<size_t>(rc.second)] = p;
  }
  for (int m = 0; m <= d; ++m) {
    QMatrix Mm(n2, n2);
    for (int r = 0; r < n2; ++r)
      for (int c = 0; c < n2; ++c) Mm(r, c) = M[static_cast<size_t>(r)][static_cast<size_t>(c)].coeff(m);
    pres.cleared.push_back(Mm);
  }
  std::vector<SparseView> views;
  for (const auto& Mm : pres.cleared) views.emplace_back(Mm);

  std::set<NCPoly::Terms> seen;
  for (int s = -d; s <= K; ++s)  // s = a + b + d bounds the highest term
    for (int a = -d; a <= s; ++a) {
      int b = s - a - d;
      if (b < -d) continue;
      for (int i = 0; i < N; ++i)
        for (int k = 0; k < N; ++k)
          for (int j = 0; j < N; ++j)
            for (int l = 0; l < N; ++l) {
              int row = i * N + k, col = j * N + l;
              NCPoly rel;
              for (int m = 0; m <= d; ++m)
                for (int c = 0; c <= m; ++c) {
                  int pa = a + c, pb = b + m - c;
                  if (pa < 0 || pb < 0) continue;
                  Rational w = binomial(m, c) * ((m - c) % 2 ? -1 : 1);
                  const auto& V = views[static_cast<size_t>(m)];
                  for (const auto& [jl, x] : V.by_row[static_cast<size_t>(row)]) {
                    int jp = jl / N, lp = jl % N;
                    rel += t_or_delta(jp, j, pa) * t_or_delta(lp, l, pb) * Rational(w * x);
                  }
                  for (const auto& [jl, x] : V.by_col[static_cast<size_t>(col)]) {
                    int jp = jl / N, lp = jl % N;
                    rel -= t_or_delta(k, lp, pb) * t_or_delta(i, jp, pa) * Rational(w * x);
                  }
                }
              if (rel.is_zero()) continue;
              Rational lead = rel.terms().rbegin()->second;
              NCPoly normed = rel * (1 / lead);
              if (seen.insert(normed.terms()).second) pres.relations.push_back(std::move(normed));
            }
    }
  return pres;
}

Evaluator::Evaluator(const RMat& R, std::vector<Rational> shifts, int K, const TruncSeries& f)
    : N_(R.N()), k_(static_cast<int>(shifts.size())), K_(K) {
  dim_ = 1;
  for (int s = 0; s < k_; ++s) dim_ *= N_;
  int full = dim_ * N_;
  std::vector<QMatrix> acc(static_cast<size_t>(K) + 1, QMatrix(full, full));
  acc[0] = QMatrix::identity(full);
  // place value of slot s in a basis index of V_0 (x) V_1 (x) ... (x) V_k
  auto place = [&](int slot) {
    int p = 1;
    for (int s = slot; s < k_; ++s) p *= N_;
    return p;
  };
  for (int s = 1; s <= k_; ++s) {
    RSeries ser = R.compose_affine(Rational(1), -shifts[static_cast<size_t>(s - 1)]).expand(K);
    int p0 = place(0), ps = place(s);
    std::vector<QMatrix> emb;
    for (const auto& C : ser.coeffs) {
      QMatrix E(full, full);
      for (int x = 0; x < full; ++x) {
        int x0 = x / p0 % N_, xs = x / ps % N_;
        int rest = x - x0 * p0 - xs * ps;
        for (int y0 = 0; y0 < N_; ++y0)
          for (int ys = 0; ys < N_; ++ys) {
            const Rational& v = C(x0 * N_ + xs, y0 * N_ + ys);
            if (v != 0) E(x, rest + y0 * p0 + ys * ps) = v;
          }
      }
      emb.push_back(std::move(E));
    }
    std::vector<QMatrix> next(static_cast<size_t>(K) + 1, QMatrix(full, full));
    for (int p = 0; p <= K; ++p)
      for (int q = 0; p + q <= K; ++q) {
        if (acc[static_cast<size_t>(p)].is_zero() || emb[static_cast<size_t>(q)].is_zero()) continue;
        next[static_cast<size_t>(p + q)] += acc[static_cast<size_t>(p)] * emb[static_cast<size_t>(q)];
      }
    acc = std::move(next);
  }
  coeffs_.assign(static_cast<size_t>(K) + 1, QMatrix(full, full));
  for (int r = 0; r <= K; ++r)
    for (int a = 0; a <= r; ++a) {
      Rational fa = f.coeffs().empty() ? Rational(a == 0 ? 1 : 0) : (a <= f.order() ? f[a] : Rational(0));
      if (fa != 0) coeffs_[static_cast<size_t>(r)] += acc[static_cast<size_t>(r - a)] * fa;
    }
}

const QMatrix& Evaluator::image(Gen g) const {
  auto it = cache_.find(g);
  if (it != cache_.end()) return it->second;
  int r = gen_r(g), i = gen_i(g), j = gen_j(g);
  if (r > K_) throw OutOfBounds("generator order exceeds the evaluation truncation");
  QMatrix blk(dim_, dim_);
  const QMatrix& C = coeffs_[static_cast<size_t>(r)];
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) blk(a, b) = C(i * dim_ + a, j * dim_ + b);
  return cache_.emplace(g, std::move(blk)).first->second;
}

QMatrix Evaluator::operator()(const NCPoly& p) const {
  QMatrix out(dim_, dim_);
  for (const auto& [w, c] : p.terms()) {
    QMatrix m = QMatrix::identity(dim_);
    for (Gen g : w) m = m * image(g);
    out += m * c;
  }
  return out;
}

Evaluator evaluation_module(const RTTPresentation& pres, int k, const std::vector<Rational>& shifts, int K) {
  if (static_cast<int>(shifts.size()) != k) throw std::invalid_argument("need one shift per tensor factor");
  return Evaluator(pres.R, shifts, K);
}

}  // namespace yf
