#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hnf/rational.hpp"

namespace hnf {

/// Sparse coordinate vector: index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Rational>;

void axpy(SparseVector& y, const Rational& a, const SparseVector& x);  // y += a*x
SparseVector scaled(const SparseVector& x, const Rational& a);

/// Incrementally built span kept in reduced row echelon form. Every stored
/// row remembers which inserted vectors it is a combination of, so a
/// reduction also yields the coefficients that express a vector through the
/// original generators.
class LinearSpan {
 public:
  struct Reduction {
    SparseVector residual;  ///< x minus its part in the span
    SparseVector combo;     ///< x - residual = sum combo[id] * inserted[id]
  };

  /// Adds v tagged with id; returns false (and stores nothing) if v is
  /// already in the span.
  bool insert(const SparseVector& v, std::size_t id);

  Reduction reduce(const SparseVector& x) const;
  bool contains(const SparseVector& x) const { return reduce(x).residual.empty(); }
  std::size_t rank() const { return rows_.size(); }

 private:
  struct Row {
    std::size_t pivot;
    SparseVector vec;    // vec[pivot] == 1, zero at every other pivot
    SparseVector combo;  // over inserted ids
  };
  std::vector<Row> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

}  // namespace hnf
