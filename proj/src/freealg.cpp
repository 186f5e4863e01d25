#include "yf/freealg.hpp"

namespace yf {

int word_sumr(const Word& w) {
  int s = 0;
  for (Gen g : w) s += gen_r(g);
  return s;
}

bool WordLess::operator()(const Word& a, const Word& b) const {
  int sa = word_sumr(a), sb = word_sumr(b);
  if (sa != sb) return sa < sb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

NCPoly::NCPoly(const Rational& c) {
  if (c != 0) t_.emplace(Word(), c);
}

NCPoly NCPoly::gen(int i, int j, int r) { return word(Word(1, make_gen(i, j, r))); }

NCPoly NCPoly::word(const Word& w, const Rational& c) {
  NCPoly p;
  if (c != 0) p.t_.emplace(w, c);
  return p;
}

Rational NCPoly::constant() const { return coeff(Word()); }

Rational NCPoly::coeff(const Word& w) const {
  auto it = t_.find(w);
  return it == t_.end() ? Rational(0) : it->second;
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

int NCPoly::max_len() const {
  int m = 0;
  for (const auto& [w, c] : t_) m = std::max(m, static_cast<int>(w.size()));
  return m;
}

int NCPoly::max_sumr() const { return t_.empty() ? 0 : word_sumr(t_.rbegin()->first); }

NCPoly NCPoly::operator-() const {
  NCPoly r = *this;
  for (auto& [w, c] : r.t_) c = -c;
  return r;
}

NCPoly& NCPoly::operator+=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add(w, c);
  return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& o) {
  for (const auto& [w, c] : o.t_) add(w, -c);
  return *this;
}

NCPoly operator*(const NCPoly& a, const NCPoly& b) {
  NCPoly r;
  Rational t;
  for (const auto& [wa, ca] : a.t_)
    for (const auto& [wb, cb] : b.t_) {
      mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      r.add(wa + wb, t);
    }
  return r;
}

NCPoly operator*(const NCPoly& a, const Rational& s) {
  if (s == 0) return NCPoly();
  NCPoly r = a;
  for (auto& [w, c] : r.t_) c *= s;
  return r;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

std::string to_string(const NCPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [w, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (Gen g : w)
      s += " t" + std::to_string(gen_i(g) + 1) + std::to_string(gen_j(g) + 1) + "^" + std::to_string(gen_r(g));
  }
  return s;
}

Json ncpoly_json(const NCPoly& p) {
  Json out = Json::array();
  for (const auto& [w, c] : p.terms()) {
    Json word = Json::array();
    for (Gen g : w) word.push_back(Json::array({gen_i(g) + 1, gen_j(g) + 1, gen_r(g)}));
    out.push_back(Json{{"coeff", to_string(c)}, {"word", word}});
  }
  return out;
}

const NCPoly& Substitution::image(Gen g) const {
  auto it = cache_.find(g);
  if (it == cache_.end()) it = cache_.emplace(g, image_(g)).first;
  return it->second;
}

NCPoly Substitution::operator()(const NCPoly& p) const {
  NCPoly out;
  for (const auto& [w, c] : p.terms()) {
    NCPoly acc(c);
    if (reverse_)
      for (auto it = w.rbegin(); it != w.rend() && !acc.is_zero(); ++it) acc = acc * image(*it);
    else
      for (auto it = w.begin(); it != w.end() && !acc.is_zero(); ++it) acc = acc * image(*it);
    out += acc;
  }
  return out;
}

TensorNCPoly::TensorNCPoly(const Rational& c, int arity) : arity_(arity) {
  if (c != 0) t_.emplace(Key(static_cast<size_t>(arity)), c);
}

TensorNCPoly TensorNCPoly::pure(const std::vector<NCPoly>& legs) {
  TensorNCPoly r(static_cast<int>(legs.size()));
  r.t_.emplace(Key(legs.size()), Rational(1));
  for (size_t l = 0; l < legs.size(); ++l) {
    TensorNCPoly f = leg(legs[l], static_cast<int>(legs.size()), static_cast<int>(l));
    r = r * f;
  }
  return r;
}

TensorNCPoly TensorNCPoly::leg(const NCPoly& p, int arity, int position) {
  TensorNCPoly r(arity);
  for (const auto& [w, c] : p.terms()) {
    Key k(static_cast<size_t>(arity));
    k[static_cast<size_t>(position)] = w;
    r.t_.emplace(std::move(k), c);
  }
  return r;
}

void TensorNCPoly::add(const Key& k, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

TensorNCPoly& TensorNCPoly::operator+=(const TensorNCPoly& o) {
  for (const auto& [k, c] : o.t_) add(k, c);
  return *this;
}

TensorNCPoly& TensorNCPoly::operator-=(const TensorNCPoly& o) {
  for (const auto& [k, c] : o.t_) add(k, -c);
  return *this;
}

TensorNCPoly operator*(const TensorNCPoly& a, const TensorNCPoly& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("tensor arity mismatch");
  TensorNCPoly r(a.arity_);
  TensorNCPoly::Key k(static_cast<size_t>(a.arity_));
  for (const auto& [ka, ca] : a.t_)
    for (const auto& [kb, cb] : b.t_) {
      for (size_t l = 0; l < k.size(); ++l) k[l] = ka[l] + kb[l];
      r.add(k, ca * cb);
    }
  return r;
}

TensorNCPoly operator*(const TensorNCPoly& a, const Rational& s) {
  TensorNCPoly r(a.arity_);
  if (s == 0) return r;
  r = a;
  for (auto& [k, c] : r.t_) c *= s;
  return r;
}

MatSeries t_matrix(int N, int K) {
  if (K < 1) throw std::invalid_argument("order must be >= 1");
  MatSeries t(N, K, NCPoly());
  for (int i = 0; i < N; ++i) t.at(0, i, i) = NCPoly(1);
  for (int r = 1; r <= K; ++r)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) t.at(r, i, j) = NCPoly::gen(i, j, r);
  return t;
}

MatSeries mat_mul(const MatSeries& a, const MatSeries& b) { return mat_mul(a, b, NCPoly()); }
MatSeries mat_inverse(const MatSeries& a) { return mat_inverse(a, NCPoly(), NCPoly(1)); }
MatSeries mat_shift(const MatSeries& a, const Rational& c) { return mat_shift(a, c, NCPoly()); }

MatSeries transpose_t(const MatSeries& a, const IndexLayer& idx) {
  MatSeries r(a.N, a.K, NCPoly());
  for (int k = 0; k <= a.K; ++k)
    for (int i = 0; i < a.N; ++i)
      for (int j = 0; j < a.N; ++j) r.at(k, idx.neg(j), idx.neg(i)) = a.at(k, i, j) * Rational(idx.theta(i, j));
  return r;
}

NCPoly counit(const NCPoly& p) { return NCPoly(p.constant()); }

namespace {

NCPoly t_or_delta(int i, int j, int r) {
  if (r > 0) return NCPoly::gen(i, j, r);
  return NCPoly(i == j ? 1 : 0);
}

}  // namespace

TensorNCPoly coproduct_leg(const TensorNCPoly& x, int leg, int N) {
  int k = x.arity();
  std::map<Gen, TensorNCPoly> images;
  auto image = [&](Gen g) -> const TensorNCPoly& {
    auto it = images.find(g);
    if (it != images.end()) return it->second;
    TensorNCPoly d(k + 1);
    int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b <= r; ++b) {
        NCPoly l = t_or_delta(i, a, b), rr = t_or_delta(a, j, r - b);
        if (l.is_zero() || rr.is_zero()) continue;
        d += TensorNCPoly::leg(l, k + 1, leg) * TensorNCPoly::leg(rr, k + 1, leg + 1);
      }
    return images.emplace(g, d).first->second;
  };
  TensorNCPoly out(k + 1);
  for (const auto& [key, c] : x.terms()) {
    TensorNCPoly::Key base(static_cast<size_t>(k + 1));
    for (int l = 0, m = 0; l < k; ++l, ++m) {
      if (l == leg) ++m;
      if (l != leg) base[static_cast<size_t>(m)] = key[static_cast<size_t>(l)];
    }
    TensorNCPoly acc(k + 1);
    acc.add(base, c);
    // base has empty words on legs leg, leg+1; multiply in the images in order
    for (Gen g : key[static_cast<size_t>(leg)]) acc = acc * image(g);
    out += acc;
  }
  return out;
}

TensorNCPoly coproduct(const NCPoly& p, int N) { return coproduct_leg(TensorNCPoly::leg(p, 1, 0), 0, N); }

TensorNCPoly counit_leg(const TensorNCPoly& x, int leg) {
  TensorNCPoly out(x.arity() - 1);
  for (const auto& [key, c] : x.terms()) {
    if (!key[static_cast<size_t>(leg)].empty()) continue;
    TensorNCPoly::Key k;
    for (int l = 0; l < x.arity(); ++l)
      if (l != leg) k.push_back(key[static_cast<size_t>(l)]);
    out.add(k, c);
  }
  return out;
}

TensorMatSeries coproduct(const MatSeries& a) {
  TensorMatSeries r(a.N, a.K, TensorNCPoly(2));
  for (int k = 0; k <= a.K; ++k)
    for (int i = 0; i < a.N; ++i)
      for (int j = 0; j < a.N; ++j) r.at(k, i, j) = coproduct(a.at(k, i, j), a.N);
  return r;
}

Substitution antipode(int N, int K) {
  auto inv = std::make_shared<MatSeries>(mat_inverse(t_matrix(N, K)));
  return Substitution(
      [inv, K](Gen g) {
        if (gen_r(g) > K) throw std::out_of_range("antipode image beyond truncation order");
        return inv->at(gen_r(g), gen_i(g), gen_j(g));
      },
      true);
}

Substitution mf_substitution(const TruncSeries& f) {
  if (f[0] != 1) throw std::invalid_argument("f must have constant term 1");
  return Substitution([f](Gen g) {
    int i = gen_i(g), j = gen_j(g), r = gen_r(g);
    NCPoly out;
    for (int b = 0; b <= r && b <= f.order(); ++b) out += t_or_delta(i, j, r - b) * f[b];
    return out;
  });
}

MatSeries apply(const MatSeries& a, const Substitution& s) {
  return map_entries(a, [&](const NCPoly& p) { return s(p); });
}

MatSeries apply_mf(const MatSeries& a, const TruncSeries& f) { return apply(a, mf_substitution(f)); }

}  // namespace yf
