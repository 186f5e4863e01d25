#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yf/matrix.hpp"
#include "yf/poly.hpp"
#include "yf/report.hpp"

namespace yf {

enum class Family { SL, SO, SP };

std::string family_name(Family f);  // "sl", "so", "sp"
Family parse_family(const std::string& s);

class InvalidAlgebra : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedDecomposition : public std::runtime_error {
 public:
  UnsupportedDecomposition(const std::string& what, std::vector<Rational> charpoly)
      : std::runtime_error(what), charpoly(std::move(charpoly)) {}
  std::vector<Rational> charpoly;
};

// Positions 0..N-1. For SO/SP they stand for -n..-1,(0),1..n in that order.
struct IndexLayer {
  Family family = Family::SL;
  int N = 0;

  int signed_index(int p) const;
  int neg(int p) const { return N - 1 - p; }
  int sign(int p) const { return signed_index(p) < 0 ? -1 : 1; }
  int theta(int p, int q) const { return family == Family::SP ? sign(p) * sign(q) : 1; }
};

struct LieAlgebraData {
  Family family = Family::SL;
  int N = 0;
  IndexLayer idx;
  bool simple = true;
  std::optional<Rational> kappa;     // SO/SP only
  Rational form_scale;               // form(A,B) = form_scale * tr(AB)
  std::vector<QMatrix> basis, dual;  // form(basis[a], dual[b]) = delta_ab
  QMatrix gram, gram_inv;
  QMatrix coord_map;                                // dim x N^2: coords(M) = coord_map * vec(M)
  std::vector<std::vector<std::pair<int, Rational>>> bracket;  // [a*dim+b] -> sparse coords of [X_a, X_b]

  int dim() const { return static_cast<int>(basis.size()); }
  Rational form(const QMatrix& a, const QMatrix& b) const;
  std::vector<Rational> coords(const QMatrix& m) const;
  QMatrix element(const std::vector<Rational>& c) const;
  std::vector<Rational> bracket_coords(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
  // (E_pq)^t = theta_pq E_{-q,-p}; identity map on SL data is not meaningful
  QMatrix transpose(const QMatrix& m) const;
  QMatrix theta_table() const;
};

LieAlgebraData build_lie(Family family, int N);
// Recomputes dual basis, Gram matrix and structure constants for a new basis of the same algebra.
LieAlgebraData with_basis(const LieAlgebraData& data, std::vector<QMatrix> basis);

struct Representation {
  int dim = 0;
  std::vector<QMatrix> rho_X, rho_J;  // images of basis[a] and J(basis[a])

  bool j_zero() const;
  QMatrix X(const std::vector<Rational>& c) const;
  QMatrix J(const std::vector<Rational>& c) const;
};

Representation vector_rep(const LieAlgebraData& data);
// J(X) -> J(X) + c X, the pullback along the shift automorphism.
Representation shifted_rep(const Representation& rep, const Rational& c);

struct CasimirData {
  QMatrix omega_rho;  // sum rho(X_a) (x) rho(X^a)
  QMatrix omega_op;   // A -> sum [rho X_a, [rho X^a, A]] on row-major vec(A)
  Rational c_g;
};

CasimirData casimir(const LieAlgebraData& data, const Representation& rep);
CasimirData casimir(const LieAlgebraData& data);

struct Decomposition {
  std::vector<std::vector<Rational>> ad_part, eg_part;
  std::vector<std::pair<std::vector<std::vector<Rational>>, Rational>> w_parts;
  QMatrix C;  // columns: new basis X^bullet in E_ij coordinates (c_ij^lambda)
  QMatrix A;  // A = C^{-1}: E_ij = sum_lambda A(lambda, ij) X^bullet_lambda
  std::vector<Rational> charpoly;
  int dim_ad() const { return static_cast<int>(ad_part.size()); }
  int dim_eg() const { return static_cast<int>(eg_part.size()); }
  int dim_w() const;
};

Decomposition decompose_ad(const LieAlgebraData& data, const Representation& rep);

// Matrix of A -> [X, A] on row-major vec(A).
QMatrix ad_operator(const QMatrix& x);

Report verify_classical_presentation(const LieAlgebraData& data, const Representation& rep, unsigned seed = 1);
Report verify_current_presentation(const LieAlgebraData& data, const Representation& rep, int D);
Report verify_extension_split(const LieAlgebraData& data, const Representation& rep);
Report verify_yangian_module(const LieAlgebraData& data, const Representation& rep);

Json lie_json(const LieAlgebraData& data);

}  // namespace yf
