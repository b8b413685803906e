#include "hnf/linear_span.hpp"

namespace hnf {

void axpy(SparseVector& y, const Rational& a, const SparseVector& x) {
  if (sgn(a) == 0) return;
  for (const auto& [i, c] : x) {
    auto [it, inserted] = y.try_emplace(i, a * c);
    if (!inserted) {
      it->second += a * c;
      if (sgn(it->second) == 0) y.erase(it);
    }
  }
}

SparseVector scaled(const SparseVector& x, const Rational& a) {
  SparseVector out;
  if (sgn(a) == 0) return out;
  for (const auto& [i, c] : x) out.emplace(i, a * c);
  return out;
}

LinearSpan::Reduction LinearSpan::reduce(const SparseVector& x) const {
  Reduction r{x, {}};
  // Rows are mutually reduced, so one pass over the pivots present in x suffices;
  // subtracting a row never introduces another pivot index.
  for (const auto& [pivot, row_index] : pivot_row_) {
    auto it = r.residual.find(pivot);
    if (it == r.residual.end()) continue;
    const Rational c = it->second;
    const Row& row = rows_[row_index];
    axpy(r.residual, -c, row.vec);
    axpy(r.combo, c, row.combo);
  }
  return r;
}

bool LinearSpan::insert(const SparseVector& v, std::size_t id) {
  Reduction r = reduce(v);
  if (r.residual.empty()) return false;
  const std::size_t pivot = r.residual.begin()->first;
  const Rational inv = 1 / r.residual.begin()->second;
  Row row{pivot, scaled(r.residual, inv), {}};
  row.combo.emplace(id, inv);
  axpy(row.combo, -inv, r.combo);
  for (Row& other : rows_) {
    auto it = other.vec.find(pivot);
    if (it == other.vec.end()) continue;
    const Rational c = it->second;
    axpy(other.vec, -c, row.vec);
    axpy(other.combo, -c, row.combo);
  }
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(row));
  return true;
}

}  // namespace hnf
