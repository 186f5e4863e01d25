#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "yf/echelon.hpp"
#include "yf/freealg.hpp"
#include "yf/liealg.hpp"
#include "yf/rmatrix.hpp"

namespace yf {

class WrongFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class OutOfBounds : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};
class BoundsTooLarge : public std::runtime_error {
 public:
  BoundsTooLarge(const std::string& what, double estimate) : std::runtime_error(what), estimate(estimate) {}
  double estimate;
};

struct RTTPresentation {
  LieAlgebraData lie;
  CasimirData casimir;
  RMat R;
  int K = 0;
  int dim_eg = 1;                // dim of the invariant part of End V
  std::vector<QMatrix> cleared;  // D(x) R(x) = sum_m cleared[m] x^m
  std::vector<NCPoly> relations;

  Family family() const { return lie.family; }
  int N() const { return lie.N; }
  const Rational& c_g() const { return casimir.c_g; }
};

// Coefficients of D(u-v)[R(u-v) T1(u) T2(v) - T2(v) T1(u) R(u-v)] at u^{-a} v^{-b},
// for every (a, b) whose terms only involve t^(r) with r <= K. Zero and
// proportional duplicates are dropped.
RTTPresentation rtt_relations(Family family, int N, int K);

// t_ij(u) -> block (i, j) of f(u) R_01(u - a_1) ... R_0k(u - a_k), slot 0
// auxiliary. The scalar f (default 1) is the twist by m_f.
class Evaluator {
 public:
  Evaluator(const RMat& R, std::vector<Rational> shifts, int K, const TruncSeries& f = TruncSeries());

  int dim() const { return dim_; }
  int order() const { return K_; }
  const QMatrix& image(Gen g) const;
  QMatrix operator()(const NCPoly& p) const;

 private:
  int N_, k_, K_, dim_;
  std::vector<QMatrix> coeffs_;  // aux (x) V^k, orders 0..K
  mutable std::map<Gen, QMatrix> cache_;
};

Evaluator evaluation_module(const RTTPresentation& pres, int k, const std::vector<Rational>& shifts, int K);

struct ClosureOptions {
  int len_margin = 64;  // work length bound is min(R, L + len_margin)
  int sumr_margin = -1;  // -1: 0 for SL, 1 for SO/SP
  double max_columns = 4.0e6;
};

// Bounded slice of the two-sided ideal, one weight space at a time. Blocks are
// eliminated lazily on first use; columns are ordered so that every word
// outside the target bounds sits above every target word.
class RelationClosure {
 public:
  RelationClosure(const RTTPresentation& pres, int L, int R, bool quotient_mode, ClosureOptions opt = {});
  ~RelationClosure();
  RelationClosure(const RelationClosure&) = delete;
  RelationClosure& operator=(const RelationClosure&) = delete;

  int L() const { return L_; }
  int R() const { return R_; }
  int work_L() const { return wL_; }
  int work_R() const { return wR_; }
  bool quotient_mode() const { return quotient_; }
  int N() const { return N_; }
  size_t generator_count() const { return gens_.size(); }

  bool fits(const NCPoly& p) const;
  NCPoly normal_form(const NCPoly& p) const;
  bool is_in_ideal(const NCPoly& p) const { return normal_form(p).is_zero(); }
  // Words of length <= L, sum r <= R (within the target) modulo the ideal.
  long slice_dimension() const;
  long slice_dimension(int L, int R) const;
  // Target words that are not pivots, i.e. a basis of the quotient slice.
  std::vector<Word> standard_words(int L, int R) const;
  void build_all() const;
  Json stats_json() const;

 private:
  struct Block;
  using WeightKey = std::int64_t;

  WeightKey weight_of(const Word& w) const;
  Block& block(WeightKey w) const;
  void build_block(WeightKey w, Block& b) const;

  int N_, L_, R_, wL_, wR_, sumr_margin_;
  bool quotient_;
  std::vector<WeightKey> letter_weight_;  // packed, per (i * N + j)
  std::vector<NCPoly> gens_;
  std::vector<WeightKey> gen_weight_;
  // words grouped by (weight, sum r, length)
  std::map<std::tuple<WeightKey, int, int>, std::vector<Word>> buckets_;
  std::map<std::pair<int, int>, std::vector<Word>> by_shape_;
  std::vector<WeightKey> weights_;
  mutable std::map<WeightKey, std::unique_ptr<Block>> blocks_;
  mutable std::mutex mu_;
  mutable long rows_generated_ = 0;
};

// Multisets of letters, `letters` of each weight w >= 1, total weight <= R, size <= L.
long pbw_count(int letters, int L, int R);
long pbw_count(const RTTPresentation& pres, int L, int R, bool quotient_mode);
Report verify_pbw(const RTTPresentation& pres, const RelationClosure& cl);

// Commutative polynomial in the symbols z_2, z_3, ...
class CPoly {
 public:
  using Mono = std::vector<int>;  // exponent of z_{k+2} at position k, no trailing zeros

  CPoly() = default;
  CPoly(const Rational& c);  // NOLINT(implicit)
  static CPoly sym(int r);

  const std::map<Mono, Rational>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  void add(const Mono& m, const Rational& c);

  CPoly& operator+=(const CPoly& o);
  friend CPoly operator+(CPoly a, const CPoly& b) { return a += b; }
  friend CPoly operator-(CPoly a, const CPoly& b) { return a += b * Rational(-1); }
  friend CPoly operator*(const CPoly& a, const CPoly& b);
  friend CPoly operator*(const CPoly& a, const Rational& s);
  friend bool operator==(const CPoly& a, const CPoly& b) { return a.t_ == b.t_; }

  // Factors ordered by increasing symbol index; z[r] is the image of z_r.
  NCPoly substitute(const std::vector<NCPoly>& z) const;
  Rational eval(const std::vector<Rational>& z) const;

 private:
  std::map<Mono, Rational> t_;
};

std::string to_string(const CPoly& p);
Json cpoly_json(const CPoly& p);

struct CentralSeries {
  Rational c_g;
  int K = 0;
  MatSeries Z;                // S^2(T(u)) T(u + c_g/2)^{-1} in the free algebra
  std::vector<NCPoly> z;      // z[r] = Z_11^(r), r = 0..K
  std::vector<CPoly> y;       // y[r], r = 0..Ky, in the symbols z_2, z_3, ...
};

MatSeries z_matrix(const RTTPresentation& pres, int K);
CentralSeries z_series(const RTTPresentation& pres, int K);
// Solves y(u) = z(u) y(u + c_g/2) for y_1..y_K.
CentralSeries y_from_z(CentralSeries cs, int K);
// y(u) y(u + c_g/2)^{-1} - z(u) in Q[z_2, ..., z_{K+1}] up to order K.
std::vector<CPoly> y_residual(const CentralSeries& cs, int K);

// Coefficients 0..K of the quantum determinant (SL only).
std::vector<NCPoly> qdet(const RTTPresentation& pres, int K);
// T^t(u + kappa) T(u) (SO/SP only).
MatSeries symmetry_matrix(const RTTPresentation& pres, int K);

// z1 vanishing, Z scalar modulo the ideal, [z_r, t^(s)] in the ideal, and
// independence of the monomials in z_2, z_3 of degree <= 2.
Report verify_center(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int r_max,
                     int s_max);
Report verify_y(const CentralSeries& cs, int K);
Report verify_qdet(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order,
                   int s_max);
Report verify_symmetry(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order);
Report verify_hopf(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs, int order);
Report verify_fixed_point(const RTTPresentation& pres, const RelationClosure& cl, const CentralSeries& cs,
                          const TruncSeries& f, int order, const Rational& shift = Rational(1));
// quotient may be null; the checks needing it are then skipped.
Report verify_low_order_structure(const RTTPresentation& pres, const RelationClosure& cl,
                                  const RelationClosure* quotient, const CentralSeries& cs);

// b_{kl}^{(ij)} at [(i*N + j) * N^2 + k*N + l], from (rho(J) (x) 1) applied to F.
std::vector<Rational> b_table(const LieAlgebraData& data, const Representation& rep);

Json bounds_json(const RelationClosure& cl);

}  // namespace yf
