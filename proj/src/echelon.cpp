#include "yf/echelon.hpp"

#include <algorithm>
#include <stdexcept>

namespace yf {

SparseEchelon::SparseEchelon(int ncols)
    : ncols_(ncols), row_of_pivot_(static_cast<size_t>(ncols), -1), ws_(ncols) {}

SparseVec SparseEchelon::reduce(const SparseVec& v) const {
  Workspace ws(ncols_);
  return reduce(v, ws);
}

SparseVec SparseEchelon::reduce(const SparseVec& v, Workspace& ws) const {
  auto& acc = ws.acc_;
  auto& queued = ws.queued_;
  auto& heap = ws.heap_;
  heap.clear();
  for (const auto& [c, x] : v) {
    if (c < 0 || c >= ncols_) throw std::out_of_range("column out of range");
    acc[static_cast<size_t>(c)] += x;
    if (!queued[static_cast<size_t>(c)]) {
      queued[static_cast<size_t>(c)] = 1;
      heap.push_back(c);
    }
  }
  std::make_heap(heap.begin(), heap.end());
  SparseVec out;
  Rational t;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end());
    int c = heap.back();
    heap.pop_back();
    auto& a = acc[static_cast<size_t>(c)];
    queued[static_cast<size_t>(c)] = 0;
    if (a == 0) continue;
    int p = row_of_pivot_[static_cast<size_t>(c)];
    if (p < 0) {
      out.emplace_back(c, a);
      a = 0;
      continue;
    }
    Rational f = a;
    a = 0;
    const SparseVec& row = rows_[static_cast<size_t>(p)];
    for (size_t k = 0; k + 1 < row.size(); ++k) {
      int col = row[k].first;
      mpq_mul(t.get_mpq_t(), f.get_mpq_t(), row[k].second.get_mpq_t());
      acc[static_cast<size_t>(col)] -= t;
      if (!queued[static_cast<size_t>(col)]) {
        queued[static_cast<size_t>(col)] = 1;
        heap.push_back(col);
        std::push_heap(heap.begin(), heap.end());
      }
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool SparseEchelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v, ws_);
  if (r.empty()) return false;
  Rational inv = 1 / r.back().second;
  for (auto& e : r) e.second *= inv;
  row_of_pivot_[static_cast<size_t>(r.back().first)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

void SparseEchelon::finalize() {
  std::vector<int> order(rows_.size());
  for (size_t k = 0; k < rows_.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return rows_[static_cast<size_t>(a)].back().first < rows_[static_cast<size_t>(b)].back().first;
  });
  // Ascending pivots: each row only meets pivots of rows already fully reduced.
  for (int idx : order) {
    SparseVec& row = rows_[static_cast<size_t>(idx)];
    bool dirty = false;
    for (size_t k = 0; k + 1 < row.size(); ++k)
      if (is_pivot(row[k].first)) {
        dirty = true;
        break;
      }
    if (!dirty) continue;
    SparseVec tail(row.begin(), row.end() - 1);
    SparseVec red = reduce(tail, ws_);
    red.push_back(row.back());
    row = std::move(red);
  }
}

}  // namespace yf
