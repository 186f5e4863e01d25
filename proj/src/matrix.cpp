#include "yf/matrix.hpp"

#include <map>
#include <stdexcept>

namespace yf {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::unit(int n, int i, int j) {
  QMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

Rational QMatrix::trace() const {
  Rational t(0);
  for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::from_vec(int rows, int cols, const std::vector<Rational>& v) {
  QMatrix m(rows, cols);
  m.a_ = v;
  m.a_.resize(static_cast<size_t>(rows) * static_cast<size_t>(cols));
  return m;
}

QMatrix QMatrix::operator-() const {
  QMatrix m = *this;
  for (auto& x : m.a_) x = -x;
  return m;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  QMatrix m = a;
  m += b;
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& b) {
  if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
  return *this;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) { return a + (-b); }

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("shape mismatch");
  QMatrix m(a.r_, b.c_);
  Rational t;
  for (int i = 0; i < a.r_; ++i)
    for (int k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.c_; ++j) {
        const Rational& y = b(k, j);
        if (y == 0) continue;
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        m(i, j) += t;
      }
    }
  return m;
}

QMatrix operator*(const QMatrix& a, const Rational& s) {
  QMatrix m = a;
  for (auto& x : m.a_) x *= s;
  return m;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix kron(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return m;
}

bool scalar_of_identity(const QMatrix& m, Rational* s) {
  if (m.rows() != m.cols()) return false;
  Rational d = m.rows() > 0 ? m(0, 0) : Rational(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != (i == j ? d : Rational(0))) return false;
  if (s) *s = d;
  return true;
}

RrefResult rref(QMatrix m) {
  RrefResult res;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(i, j) -= f * m(row, j);
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.r = std::move(m);
  return res;
}

int rank(const QMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<std::vector<Rational>> nullspace(const QMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int p : rr.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(f)] = 1;
    for (size_t k = 0; k < rr.pivots.size(); ++k) v[static_cast<size_t>(rr.pivots[k])] = -rr.r(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix from_rows(const std::vector<std::vector<Rational>>& rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m(static_cast<int>(i), j) = rows[i][static_cast<size_t>(j)];
  return m;
}

bool solve(const QMatrix& m, const std::vector<Rational>& b, std::vector<Rational>* x) {
  QMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[static_cast<size_t>(i)];
  }
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return false;
  if (x) {
    x->assign(static_cast<size_t>(m.cols()), Rational(0));
    for (size_t k = 0; k < rr.pivots.size(); ++k) (*x)[static_cast<size_t>(rr.pivots[k])] = rr.r(static_cast<int>(k), m.cols());
  }
  return true;
}

QMatrix inverse(const QMatrix& m) {
  int n = m.rows();
  QMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefResult rr = rref(aug);
  if (static_cast<int>(rr.pivots.size()) < n || rr.pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw std::domain_error("singular matrix");
  QMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = rr.r(i, n + j);
  return inv;
}

std::vector<Rational> charpoly(const QMatrix& m) {
  // Faddeev-LeVerrier
  int n = m.rows();
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1;
  QMatrix mk = QMatrix(n, n);
  QMatrix id = QMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * (mk + id * c[static_cast<size_t>(n - k + 1)]);
    c[static_cast<size_t>(n - k)] = -mk.trace() / k;
  }
  return c;
}

SparseQMatrix SparseQMatrix::from_dense(const QMatrix& m) {
  SparseQMatrix s(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) s.rows_[static_cast<size_t>(i)].emplace_back(j, m(i, j));
  return s;
}

SparseQMatrix SparseQMatrix::identity(int n) {
  SparseQMatrix s(n);
  for (int i = 0; i < n; ++i) s.rows_[static_cast<size_t>(i)].emplace_back(i, Rational(1));
  return s;
}

void SparseQMatrix::add(int i, int j, const Rational& v) {
  if (v != 0) rows_[static_cast<size_t>(i)].emplace_back(j, v);
}

QMatrix SparseQMatrix::to_dense() const {
  QMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (const auto& [j, v] : rows_[static_cast<size_t>(i)]) m(i, j) = v;
  return m;
}

std::vector<Rational> SparseQMatrix::flatten() const { return to_dense().vec(); }

SparseQMatrix operator*(const SparseQMatrix& a, const SparseQMatrix& b) {
  SparseQMatrix c(a.n_);
  std::map<int, Rational> acc;
  Rational t;
  for (int i = 0; i < a.n_; ++i) {
    acc.clear();
    for (const auto& [k, x] : a.rows_[static_cast<size_t>(i)])
      for (const auto& [j, y] : b.rows_[static_cast<size_t>(k)]) {
        mpq_mul(t.get_mpq_t(), x.get_mpq_t(), y.get_mpq_t());
        acc[j] += t;
      }
    for (auto& [j, v] : acc)
      if (v != 0) c.rows_[static_cast<size_t>(i)].emplace_back(j, v);
  }
  return c;
}

}  // namespace yf
