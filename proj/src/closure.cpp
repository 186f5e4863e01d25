#include <numeric>
#include <algorithm>
#include <cmath>
#include <functional>

#include "yf/yangian.hpp"

namespace yf {

struct RelationClosure::Block {
  std::vector<Word> cols;
  std::unordered_map<Word, int> index;
  std::vector<char> target;
  int n_target = 0;
  int target_rank = 0;
  long rows = 0;
  std::unique_ptr<SparseEchelon> ech;
};

namespace {

// Graded by sum r - length (t^(r) has degree r - 1); within one degree the
// words outside (L, R) sit on top.
auto graded_less(int L, int R) {
  return [L, R](const Word& x, const Word& y) {
    int sx = word_sumr(x), sy = word_sumr(y);
    int dx = sx - static_cast<int>(x.size()), dy = sy - static_cast<int>(y.size());
    if (dx != dy) return dx < dy;
    bool ox = static_cast<int>(x.size()) > L || sx > R, oy = static_cast<int>(y.size()) > L || sy > R;
    if (ox != oy) return oy;
    return WordLess()(x, y);
  };
}

double word_count_estimate(int letters, int L, int R) {
  // words of sum r = s and length l: C(s-1, l-1) letters^l
  double total = 1;
  for (int s = 1; s <= R; ++s)
    for (int l = 1; l <= std::min(s, L); ++l) {
      double c = 1;
      for (int q = 1; q <= l - 1; ++q) c = c * (s - q) / q;
      total += c * std::pow(static_cast<double>(letters), l);
    }
  return total;
}

std::vector<std::vector<int>> letter_weights(const IndexLayer& idx) {
  int N = idx.N;
  int n = idx.family == Family::SL ? N : N / 2;
  auto wt = [&](int p) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    if (idx.family == Family::SL) {
      v[static_cast<size_t>(p)] = 1;
    } else {
      int s = idx.signed_index(p);
      if (s != 0) v[static_cast<size_t>(std::abs(s) - 1)] = s > 0 ? 1 : -1;
    }
    return v;
  };
  std::vector<std::vector<int>> out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      auto a = wt(i), b = wt(j);
      for (int c = 0; c < n; ++c) a[static_cast<size_t>(c)] -= b[static_cast<size_t>(c)];
      out.push_back(a);
    }
  return out;
}

}  // namespace

RelationClosure::RelationClosure(const RTTPresentation& pres, int L, int R, bool quotient_mode, ClosureOptions opt)
    : N_(pres.N()), L_(L), R_(R), quotient_(quotient_mode) {
  if (L < 1 || R < 1) throw std::invalid_argument("closure bounds must be positive");
  sumr_margin_ = opt.sumr_margin >= 0 ? opt.sumr_margin : (pres.family() == Family::SL ? 0 : 1);
  wR_ = R + sumr_margin_;
  wL_ = std::min(wR_, std::min(L, R) + std::max(0, opt.len_margin));
  double est = word_count_estimate(N_ * N_, wL_, wR_);
  if (est > opt.max_columns)
    throw BoundsTooLarge("closure would index about " + std::to_string(static_cast<long long>(est)) + " words", est);

  long long base = 4LL * wL_ + 1;
  for (const auto& v : letter_weights(pres.lie.idx)) {
    WeightKey k = 0, p = 1;
    for (int c : v) {
      k += c * p;
      p *= base;
    }
    letter_weight_.push_back(k);
  }

  const RTTPresentation* src = &pres;
  RTTPresentation regenerated;
  if (pres.K < wR_ + (quotient_ ? 1 : 0)) {
    regenerated = rtt_relations(pres.family(), pres.N(), wR_ + (quotient_ ? 1 : 0));
    src = &regenerated;
  }
  auto take = [&](const NCPoly& g) {
    if (g.is_zero() || g.max_len() > wL_ || g.max_sumr() > wR_) return;
    WeightKey w = weight_of(g.terms().begin()->first);
    for (const auto& [word, c] : g.terms())
      if (weight_of(word) != w) throw std::logic_error("ideal generator is not weight-homogeneous");
    gens_.push_back(g);
    gen_weight_.push_back(w);
  };
  for (const auto& rel : src->relations) take(rel);
  if (quotient_) {
    // Reduced forms of the entries of Z(u) - I can sit one order lower than
    // the entries themselves, so reduce them in an extended closure first.
    ClosureOptions eo = opt;
    eo.sumr_margin = 0;
    RelationClosure ext(*src, wR_ + 1, wR_ + 1, false, eo);
    MatSeries Z = z_matrix(*src, wR_ + 1);
    for (int r = 2; r <= wR_ + 1; ++r)
      for (int i = 0; i < N_; ++i)
        for (int j = 0; j < N_; ++j) {
          take(Z.at(r, i, j));
          take(ext.normal_form(Z.at(r, i, j)));
        }
  }

  // enumerate every word within the work bounds
  std::vector<Gen> letters;
  for (int r = 1; r <= wR_; ++r)
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) letters.push_back(make_gen(i, j, r));
  Word cur;
  std::function<void(int, WeightKey)> rec = [&](int sumr, WeightKey w) {
    buckets_[{w, sumr, static_cast<int>(cur.size())}].push_back(cur);
    by_shape_[{sumr, static_cast<int>(cur.size())}].push_back(cur);
    if (static_cast<int>(cur.size()) == wL_) return;
    for (Gen g : letters) {
      if (sumr + gen_r(g) > wR_) break;
      cur.push_back(g);
      rec(sumr + gen_r(g), w + letter_weight_[static_cast<size_t>(gen_i(g) * N_ + gen_j(g))]);
      cur.pop_back();
    }
  };
  rec(0, 0);
  for (const auto& [key, words] : buckets_) weights_.push_back(std::get<0>(key));
  std::sort(weights_.begin(), weights_.end());
  weights_.erase(std::unique(weights_.begin(), weights_.end()), weights_.end());
}

RelationClosure::~RelationClosure() = default;

RelationClosure::WeightKey RelationClosure::weight_of(const Word& w) const {
  WeightKey k = 0;
  for (Gen g : w) k += letter_weight_[static_cast<size_t>(gen_i(g) * N_ + gen_j(g))];
  return k;
}

bool RelationClosure::fits(const NCPoly& p) const {
  for (const auto& [w, c] : p.terms())
    if (static_cast<int>(w.size()) > wL_ || word_sumr(w) > wR_) return false;
  for (const auto& [w, c] : p.terms())
    for (Gen g : w)
      if (gen_i(g) >= N_ || gen_j(g) >= N_) return false;
  return true;
}

RelationClosure::Block& RelationClosure::block(WeightKey w) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = blocks_.find(w);
  if (it != blocks_.end()) return *it->second;
  auto b = std::make_unique<Block>();
  build_block(w, *b);
  return *blocks_.emplace(w, std::move(b)).first->second;
}

void RelationClosure::build_block(WeightKey w, Block& b) const {
  int Lt = std::min(L_, R_);
  for (const auto& [key, words] : buckets_)
    if (std::get<0>(key) == w) b.cols.insert(b.cols.end(), words.begin(), words.end());
  std::sort(b.cols.begin(), b.cols.end(), graded_less(Lt, R_));
  for (size_t c = 0; c < b.cols.size(); ++c) {
    b.index.emplace(b.cols[c], static_cast<int>(c));
    const Word& x = b.cols[c];
    bool t = static_cast<int>(x.size()) <= Lt && word_sumr(x) <= R_;
    b.target.push_back(t);
    b.n_target += t;
  }
  b.ech = std::make_unique<SparseEchelon>(static_cast<int>(b.cols.size()));

  SparseVec row;
  for (size_t g = 0; g < gens_.size(); ++g) {
    const NCPoly& rel = gens_[g];
    int s_rem = wR_ - rel.max_sumr(), l_rem = wL_ - rel.max_len();
    WeightKey need = w - gen_weight_[g];
    for (int s1 = 0; s1 <= s_rem; ++s1)
      for (int l1 = 0; l1 <= std::min(s1, l_rem); ++l1) {
        auto lit = by_shape_.find({s1, l1});
        if (lit == by_shape_.end()) continue;
        for (const Word& m : lit->second) {
          WeightKey need2 = need - weight_of(m);
          for (int s2 = 0; s2 <= s_rem - s1; ++s2)
            for (int l2 = 0; l2 <= std::min(s2, l_rem - l1); ++l2) {
              auto rit = buckets_.find({need2, s2, l2});
              if (rit == buckets_.end()) continue;
              for (const Word& mp : rit->second) {
                row.clear();
                for (const auto& [x, c] : rel.terms()) row.emplace_back(b.index.at(m + x + mp), c);
                std::sort(row.begin(), row.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
                b.ech->insert(row);
                ++b.rows;
              }
            }
        }
      }
  }
  b.ech->finalize();
  for (const auto& r : b.ech->rows())
    if (b.target[static_cast<size_t>(r.back().first)]) ++b.target_rank;
  rows_generated_ += b.rows;
}

NCPoly RelationClosure::normal_form(const NCPoly& p) const {
  if (!fits(p)) throw OutOfBounds("element exceeds the closure bounds (L = " + std::to_string(wL_) + ", R = " + std::to_string(wR_) + ")");
  std::map<WeightKey, std::vector<std::pair<const Word*, const Rational*>>> parts;
  for (const auto& [w, c] : p.terms()) parts[weight_of(w)].emplace_back(&w, &c);
  NCPoly out;
  for (const auto& [wk, terms] : parts) {
    Block& b = block(wk);
    SparseVec v;
    for (const auto& [w, c] : terms) v.emplace_back(b.index.at(*w), *c);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [col, c] : b.ech->reduce(v)) out.add(b.cols[static_cast<size_t>(col)], c);
  }
  return out;
}

void RelationClosure::build_all() const {
  for (WeightKey w : weights_) block(w);
}

long RelationClosure::slice_dimension() const {
  long d = 0;
  for (WeightKey w : weights_) {
    const Block& b = block(w);
    d += b.n_target - b.target_rank;
  }
  return d;
}

long RelationClosure::slice_dimension(int L, int R) const {
  if (L >= std::min(L_, R_) && R >= R_) return slice_dimension();
  return static_cast<long>(standard_words(L, R).size());
}

// Re-eliminates the stored rows under the graded order for the length bound L.
std::vector<Word> RelationClosure::standard_words(int L, int R) const {
  if (R > R_ || std::min(L, R) > std::min(L_, R_)) throw OutOfBounds("requested slice exceeds the target bounds");
  int Ls = std::min(L, R);
  std::vector<Word> out;
  for (WeightKey w : weights_) {
    const Block& b = block(w);
    int n = static_cast<int>(b.cols.size());
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto cmp = graded_less(Ls, R);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return cmp(b.cols[static_cast<size_t>(x)], b.cols[static_cast<size_t>(y)]);
    });
    std::vector<int> newcol(static_cast<size_t>(n));
    bool identity = true;
    for (int k = 0; k < n; ++k) {
      newcol[static_cast<size_t>(order[static_cast<size_t>(k)])] = k;
      if (order[static_cast<size_t>(k)] != k) identity = false;
    }
    SparseEchelon e(n);
    const SparseEchelon* use = b.ech.get();
    if (!identity) {
      for (const auto& r : b.ech->rows()) {
        SparseVec v;
        for (const auto& [c, x] : r) v.emplace_back(newcol[static_cast<size_t>(c)], x);
        std::sort(v.begin(), v.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        e.insert(v);
      }
      use = &e;
    }
    for (int k = 0; k < n; ++k) {
      const Word& x = b.cols[static_cast<size_t>(order[static_cast<size_t>(k)])];
      if (static_cast<int>(x.size()) <= Ls && word_sumr(x) <= R && !use->is_pivot(k)) out.push_back(x);
    }
  }
  std::sort(out.begin(), out.end(), WordLess());
  return out;
}

Json RelationClosure::stats_json() const {
  std::lock_guard<std::mutex> lock(mu_);
  long cols = 0, rank = 0;
  for (const auto& [w, b] : blocks_) {
    cols += static_cast<long>(b->cols.size());
    rank += b->ech->rank();
  }
  return Json{{"generators", gens_.size()}, {"weights", weights_.size()}, {"blocks_built", blocks_.size()},
              {"columns", cols}, {"rows_generated", rows_generated_}, {"rank", rank}};
}

Json bounds_json(const RelationClosure& cl) {
  return Json{{"L", cl.L()}, {"R_ord", cl.R()}, {"work_L", cl.work_L()}, {"work_R", cl.work_R()},
              {"quotient", cl.quotient_mode()}};
}

long pbw_count(int letters, int L, int R) {
  // dp[s][l]: multisets of total weight s and size l
  std::vector<std::vector<Rational>> dp(static_cast<size_t>(R) + 1, std::vector<Rational>(static_cast<size_t>(L) + 1));
  dp[0][0] = 1;
  for (int w = 1; w <= R; ++w) {
    auto next = dp;
    for (int s = 0; s <= R; ++s)
      for (int l = 0; l <= L; ++l) {
        if (dp[static_cast<size_t>(s)][static_cast<size_t>(l)] == 0) continue;
        for (int k = 1; s + k * w <= R && l + k <= L; ++k)
          next[static_cast<size_t>(s + k * w)][static_cast<size_t>(l + k)] +=
              dp[static_cast<size_t>(s)][static_cast<size_t>(l)] * binomial(letters + k - 1, k);
      }
    dp = std::move(next);
  }
  Rational total = 0;
  for (const auto& row : dp)
    for (const auto& x : row) total += x;
  return total.get_num().get_si();
}

long pbw_count(const RTTPresentation& pres, int L, int R, bool quotient_mode) {
  return pbw_count(pres.lie.dim() + (quotient_mode ? 0 : pres.dim_eg), L, R);
}

Report verify_pbw(const RTTPresentation& pres, const RelationClosure& cl) {
  Report out("pbw", family_name(pres.family()), pres.N());
  out.bounds = bounds_json(cl);
  long sd = cl.slice_dimension();
  long pc = pbw_count(pres, cl.L(), cl.R(), cl.quotient_mode());
  out.add("slice-dimension-equals-pbw-count", sd == pc,
          Json{{"slice_dimension", sd}, {"pbw_count", pc},
               {"letters_per_weight", pres.lie.dim() + (cl.quotient_mode() ? 0 : pres.dim_eg)}});
  out.extra = cl.stats_json();
  return out;
}

}  // namespace yf
