#include "yf/certify.hpp"

#include <string>

namespace yf {

namespace {

Rational u_point(int k) { return rat(13, 3) + rat(7, 2) * k; }
Rational v_point(int k) { return rat(17, 5) + rat(5, 2) * k; }

constexpr int kMaxCandidates = 400;

}  // namespace

bool certify_bivariate_identity(const BivariateEval& lhs, const BivariateEval& rhs, DegreeBound bound,
                                CertifyStats* stats) {
  CertifyStats local;
  CertifyStats& st = stats ? *stats : local;
  std::vector<Rational> us;
  int next_u = 0, next_v = 0;
  while (static_cast<int>(us.size()) <= bound.du) {
    if (next_u >= kMaxCandidates) throw GridExhausted("no pole-free u values");
    us.push_back(u_point(next_u++));
  }
  int good_v = 0;
  while (good_v <= bound.dv) {
    if (next_v >= kMaxCandidates) throw GridExhausted("no pole-free grid after " + std::to_string(next_v) + " v candidates");
    Rational v = v_point(next_v++);
    bool column_ok = true;
    for (size_t i = 0; i < us.size() && column_ok; ++i) {
      auto a = lhs(us[i], v);
      auto b = rhs(us[i], v);
      if (!a || !b) {
        // a u value that is itself a pole line is replaced
        bool u_bad = true;
        for (int t = 0; t < 3 && u_bad; ++t) {
          Rational probe = v_point(kMaxCandidates + 7 * t + next_v);
          u_bad = !lhs(us[i], probe) || !rhs(us[i], probe);
        }
        if (u_bad) {
          if (next_u >= kMaxCandidates) throw GridExhausted("no pole-free u values");
          us[i] = u_point(next_u++);
          good_v = 0;  // earlier columns did not use the new u
        }
        ++st.poles_skipped;
        column_ok = false;
        break;
      }
      ++st.points;
      if (*a != *b) return false;
    }
    if (column_ok) ++good_v;
  }
  return true;
}

}  // namespace yf
