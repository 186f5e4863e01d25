#pragma once

#include <utility>
#include <vector>

#include "yf/rational.hpp"

namespace yf {

// Sparse vector: (column, value) pairs, columns strictly ascending, no zeros.
using SparseVec = std::vector<std::pair<int, Rational>>;

// Exact row echelon form over Q. The pivot of a row is its largest column and
// is normalized to 1; after finalize() every pivot column is zero in all other rows.
class SparseEchelon {
 public:
  class Workspace {
   public:
    explicit Workspace(int ncols) : acc_(static_cast<size_t>(ncols)), queued_(static_cast<size_t>(ncols), 0) {}

   private:
    friend class SparseEchelon;
    std::vector<Rational> acc_;
    std::vector<char> queued_;
    std::vector<int> heap_;
  };

  explicit SparseEchelon(int ncols);

  int cols() const { return ncols_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  // Reduces v and adds it if nonzero; returns true iff the rank grew.
  bool insert(const SparseVec& v);
  SparseVec reduce(const SparseVec& v) const;
  SparseVec reduce(const SparseVec& v, Workspace& ws) const;
  bool is_pivot(int col) const { return row_of_pivot_[static_cast<size_t>(col)] >= 0; }
  const std::vector<SparseVec>& rows() const { return rows_; }
  void finalize();

 private:
  int ncols_;
  std::vector<SparseVec> rows_;
  std::vector<int> row_of_pivot_;
  Workspace ws_;
};

}  // namespace yf
