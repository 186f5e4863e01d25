#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yf/certify.hpp"
#include "yf/liealg.hpp"
#include "yf/matrix.hpp"
#include "yf/ratfunc.hpp"
#include "yf/report.hpp"

namespace yf {

class UnitarityFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotAModule : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NonIrreducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class NotProportional : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients R^(0..K) of R(u) = sum_k R^(k) u^{-k}, each N^2 x N^2.
struct RSeries {
  int N = 0;
  std::vector<QMatrix> coeffs;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// N^2 x N^2 matrix of rational functions in u, stored sparsely.
class RMat {
 public:
  RMat() = default;
  explicit RMat(int N) : N_(N) {}
  // sum_t M_t f_t(u)
  static RMat from_terms(int N, const std::vector<std::pair<QMatrix, RationalFunction>>& terms);

  int N() const { return N_; }
  int size() const { return N_ * N_; }
  const std::map<std::pair<int, int>, RationalFunction>& entries() const { return e_; }
  RationalFunction entry(int r, int c) const;
  void set(int r, int c, const RationalFunction& f);

  std::optional<SparseQMatrix> eval(const Rational& u) const;  // nullopt at a pole
  int max_degree() const;
  RSeries expand(int K) const;
  RMat compose_affine(const Rational& a, const Rational& b) const;  // R(a u + b)
  RMat flip() const;                                                // R_21 = P R P

  friend RMat operator*(const RMat& a, const RMat& b);

 private:
  int N_ = 0;
  std::map<std::pair<int, int>, RationalFunction> e_;
};

QMatrix perm_matrix(int N);
// Q = sum theta_ij E_ij (x) E_{-i,-j}
QMatrix q_matrix(const LieAlgebraData& data);

RMat yang_r(int N);
RMat sosp_r(Family family, int N);

bool check_qybe(const RMat& R, CertifyStats* stats = nullptr);
// Returns f with R_12(u) R_21(-u) = f(u) I.
RationalFunction check_unitarity(const RMat& R);

RSeries solve_intertwiner(const LieAlgebraData& data, const Representation& rep, int K);

// g with R1 = g R2 through order K = min of the orders.
TruncSeries proportional_to(const RSeries& R1, const RSeries& R2);
TruncSeries proportional_to(const RSeries& R1, const RMat& R2);

// Second-order expansion target built from Omega_rho and the J-images of rep.
RSeries expansion_target(const LieAlgebraData& data, const Representation& rep);
Report expansion_check(const RMat& R, const LieAlgebraData& data, const Representation& rep);
Report expansion_check(const RSeries& R, const LieAlgebraData& data, const Representation& rep);

Json rmat_json(const RMat& R);
Json rseries_json(const RSeries& R);
Json qmatrix_json(const QMatrix& m);

}  // namespace yf
