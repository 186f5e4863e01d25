#include <algorithm>
#include <numeric>

#include "yf/yangian.hpp"

namespace yf {

CPoly::CPoly(const Rational& c) {
  if (c != 0) t_.emplace(Mono(), c);
}

CPoly CPoly::sym(int r) {
  if (r < 2) throw std::invalid_argument("z-symbols start at z_2");
  Mono m(static_cast<size_t>(r - 1), 0);
  m.back() = 1;
  CPoly p;
  p.t_.emplace(std::move(m), Rational(1));
  return p;
}

void CPoly::add(const Mono& m, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

CPoly& CPoly::operator+=(const CPoly& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

CPoly operator*(const CPoly& a, const CPoly& b) {
  CPoly r;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) {
      CPoly::Mono m(std::max(ma.size(), mb.size()), 0);
      for (size_t k = 0; k < ma.size(); ++k) m[k] += ma[k];
      for (size_t k = 0; k < mb.size(); ++k) m[k] += mb[k];
      r.add(m, ca * cb);
    }
  return r;
}

CPoly operator*(const CPoly& a, const Rational& s) {
  CPoly r;
  if (s == 0) return r;
  r = a;
  for (auto& [m, c] : r.t_) c *= s;
  return r;
}

NCPoly CPoly::substitute(const std::vector<NCPoly>& z) const {
  NCPoly out;
  for (const auto& [m, c] : t_) {
    NCPoly term(c);
    for (size_t k = 0; k < m.size(); ++k) {
      if (m[k] > 0 && k + 2 >= z.size()) throw std::out_of_range("missing z-symbol image");
      for (int e = 0; e < m[k]; ++e) term = term * z[k + 2];
    }
    out += term;
  }
  return out;
}

Rational CPoly::eval(const std::vector<Rational>& z) const {
  Rational out = 0;
  for (const auto& [m, c] : t_) {
    Rational term = c;
    for (size_t k = 0; k < m.size(); ++k)
      for (int e = 0; e < m[k]; ++e) term *= z.at(k + 2);
    out += term;
  }
  return out;
}

std::string to_string(const CPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) s += " z" + std::to_string(k + 2) + (m[k] > 1 ? "^" + std::to_string(m[k]) : "");
  }
  return s;
}

Json cpoly_json(const CPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json e = Json::object();
    for (size_t k = 0; k < m.size(); ++k)
      if (m[k] > 0) e["z" + std::to_string(k + 2)] = m[k];
    out.push_back(Json{{"coeff", to_string(c)}, {"exponents", e}});
  }
  return out;
}

MatSeries z_matrix(const RTTPresentation& pres, int K) {
  int N = pres.N();
  MatSeries T = t_matrix(N, K);
  Substitution S = antipode(N, K);
  MatSeries S2 = apply(mat_inverse(T), S);
  return mat_mul(S2, mat_inverse(mat_shift(T, pres.c_g() / 2)));
}

CentralSeries z_series(const RTTPresentation& pres, int K) {
  CentralSeries cs;
  cs.c_g = pres.c_g();
  cs.K = K;
  cs.Z = z_matrix(pres, K);
  for (int r = 0; r <= K; ++r) cs.z.push_back(cs.Z.at(r, 0, 0));
  return cs;
}

namespace {

std::vector<CPoly> symbolic_z(int K) {
  std::vector<CPoly> z(static_cast<size_t>(K) + 1);
  z[0] = CPoly(Rational(1));
  for (int r = 2; r <= K; ++r) z[static_cast<size_t>(r)] = CPoly::sym(r);
  return z;
}

}  // namespace

CentralSeries y_from_z(CentralSeries cs, int K) {
  if (cs.c_g == 0) throw std::invalid_argument("c_g must be nonzero");
  Rational h = cs.c_g / 2;
  std::vector<CPoly> z = symbolic_z(K + 1);
  std::vector<CPoly> y(static_cast<size_t>(K) + 1);
  y[0] = CPoly(Rational(1));
  // order r of z(u) y(u+h) - y(u): -(r-1) h y_{r-1} + (terms in y_0..y_{r-2})
  for (int r = 2; r <= K + 1; ++r) {
    std::vector<CPoly> known(static_cast<size_t>(r) + 1);
    for (int k = 0; k <= r - 2; ++k) known[static_cast<size_t>(k)] = y[static_cast<size_t>(k)];
    std::vector<CPoly> zr(z.begin(), z.begin() + r + 1);
    auto shifted = gseries::shift(known, h, r, CPoly());
    auto lhs = gseries::mul(zr, shifted, r, CPoly());
    CPoly rem = lhs[static_cast<size_t>(r)] - known[static_cast<size_t>(r)];
    y[static_cast<size_t>(r - 1)] = rem * (1 / (Rational(r - 1) * h));
  }
  cs.y = std::move(y);
  return cs;
}

std::vector<CPoly> y_residual(const CentralSeries& cs, int K) {
  if (static_cast<int>(cs.y.size()) < K + 1) throw std::invalid_argument("y not solved to the requested order");
  std::vector<CPoly> y(cs.y.begin(), cs.y.begin() + K + 1);
  auto inv = gseries::inverse_unipotent(gseries::shift(y, cs.c_g / 2, K, CPoly()), K, CPoly());
  auto prod = gseries::mul(y, inv, K, CPoly());
  std::vector<CPoly> z = symbolic_z(K);
  std::vector<CPoly> out;
  for (int r = 0; r <= K; ++r) out.push_back(prod[static_cast<size_t>(r)] - z[static_cast<size_t>(r)]);
  return out;
}

std::vector<NCPoly> qdet(const RTTPresentation& pres, int K) {
  if (pres.family() != Family::SL) throw WrongFamily("quantum determinant is defined for the SL family");
  int N = pres.N();
  MatSeries T = t_matrix(N, K);
  std::vector<MatSeries> Ts;  // T(u - m)
  for (int m = 0; m < N; ++m) Ts.push_back(mat_shift(T, Rational(-m)));
  std::vector<int> perm(static_cast<size_t>(N));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<NCPoly> out(static_cast<size_t>(K) + 1);
  do {
    int inv = 0;
    for (int a = 0; a < N; ++a)
      for (int b = a + 1; b < N; ++b)
        if (perm[static_cast<size_t>(a)] > perm[static_cast<size_t>(b)]) ++inv;
    std::vector<NCPoly> acc(static_cast<size_t>(K) + 1);
    acc[0] = NCPoly(inv % 2 ? -1 : 1);
    for (int m = 0; m < N; ++m)
      acc = gseries::mul(acc, Ts[static_cast<size_t>(m)].entry(perm[static_cast<size_t>(m)], m), K, NCPoly());
    for (int r = 0; r <= K; ++r) out[static_cast<size_t>(r)] += acc[static_cast<size_t>(r)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

MatSeries symmetry_matrix(const RTTPresentation& pres, int K) {
  if (pres.family() == Family::SL) throw WrongFamily("symmetry series is defined for the SO and SP families");
  MatSeries T = t_matrix(pres.N(), K);
  return mat_mul(mat_shift(transpose_t(T, pres.lie.idx), *pres.lie.kappa), T);
}

}  // namespace yf
