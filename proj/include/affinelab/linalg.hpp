#pragma once

#include "affinelab/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace affinelab {

using SparseRow = std::vector<std::pair<int, Integer>>;  // sorted by column, no zeros
using RationalRow = std::map<int, Rational>;
using DenseVector = std::vector<Rational>;

// Incremental fraction-free row echelon form over the integers. Rows are kept
// primitive; the pivot of a row is its smallest column.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(int cols) : cols_(cols), pivot_row_(static_cast<std::size_t>(cols), -1) {}

  // Reduces the row against the current pivots; returns true if it raised the rank.
  bool add(const RationalRow& row);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  // Kernel basis in reduced form: one vector per free column, with 1 there.
  std::vector<DenseVector> kernel() const;

 private:
  void reduce(SparseRow& row) const;

  int cols_;
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
};

SparseRow primitive_row(const RationalRow& row);

std::vector<DenseVector> nullspace(int cols, const std::vector<RationalRow>& rows);

// Reduced basis of span(vectors) keyed on the last nonzero coordinate: every
// output vector has coefficient 1 at its last nonzero position and 0 there in
// all others. Output is sorted by that position. Spans compare equal iff the
// canonical bases do.
std::vector<DenseVector> canonical_basis(const std::vector<DenseVector>& vectors);

int rank_of(const std::vector<DenseVector>& vectors);
bool in_span(const std::vector<DenseVector>& basis, const DenseVector& v);

}  // namespace affinelab
