#pragma once

#include <utility>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}
  static QMatrix identity(int n);
  static QMatrix unit(int n, int i, int j);  // E_ij

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j)]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * static_cast<size_t>(c_) + static_cast<size_t>(j)]; }
  const std::vector<Rational>& data() const { return a_; }

  bool is_zero() const;
  Rational trace() const;
  QMatrix transpose() const;
  std::vector<Rational> vec() const { return a_; }  // row-major flattening
  static QMatrix from_vec(int rows, int cols, const std::vector<Rational>& v);

  QMatrix operator-() const;
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const QMatrix& a, const Rational& s);
  friend QMatrix operator*(const Rational& s, const QMatrix& a) { return a * s; }
  QMatrix& operator+=(const QMatrix& b);
  friend bool operator==(const QMatrix& a, const QMatrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rational> a_;
};

QMatrix commutator(const QMatrix& a, const QMatrix& b);
QMatrix kron(const QMatrix& a, const QMatrix& b);
// Is m == s * I for some s? Returns s.
bool scalar_of_identity(const QMatrix& m, Rational* s);

struct RrefResult {
  QMatrix r;
  std::vector<int> pivots;
};
RrefResult rref(QMatrix m);
int rank(const QMatrix& m);
// Basis of {x : m x = 0}, as columns-vectors.
std::vector<std::vector<Rational>> nullspace(const QMatrix& m);
// Matrix whose rows are the given vectors.
QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols);
// Any solution of m x = b (free variables zero), or false.
bool solve(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>* x);
QMatrix inverse(const QMatrix& m);  // throws if singular
// Characteristic polynomial det(x I - m), coefficients low to high.
std::vector<Rational> charpoly(const QMatrix& m);

// Row-compressed sparse matrix for large products on tensor cubes.
class SparseQMatrix {
 public:
  SparseQMatrix() = default;
  explicit SparseQMatrix(int n) : n_(n), rows_(static_cast<size_t>(n)) {}
  static SparseQMatrix from_dense(const QMatrix& m);
  static SparseQMatrix identity(int n);

  int size() const { return n_; }
  const std::vector<std::pair<int, Rational>>& row(int i) const { return rows_[static_cast<size_t>(i)]; }
  void add(int i, int j, const Rational& v);  // appends; caller keeps columns unique and sorted
  QMatrix to_dense() const;
  std::vector<Rational> flatten() const;

  friend SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b);
  friend bool operator==(const SparseQMatrix& a, const SparseQMatrix& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  int n_ = 0;
  std::vector<std::vector<std::pair<int, Rational>>> rows_;
};

}  // namespace yf
