#pragma once

#include <utility>
#include <vector>

#include "moymf/poly.hpp"

namespace moymf {

// Sparse row over Q, entries sorted by column.
using SparseRow = std::vector<std::pair<int, Rational>>;

// Row echelon form built incrementally. Column 0 is the most significant:
// a row's pivot is its smallest nonzero column.
class Echelon {
 public:
  explicit Echelon(int columns = 0) : pivot_row_(columns, -1) {}

  // Returns true when the row was independent of the rows already present.
  bool insert(const SparseRow& row);
  // Eliminates every pivot column from the row; the result is canonical modulo the span.
  SparseRow reduce(const SparseRow& row) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  int columns() const { return static_cast<int>(pivot_row_.size()); }
  bool is_pivot(int col) const { return pivot_row_[col] >= 0; }
  const std::vector<SparseRow>& rows() const { return rows_; }

 private:
  std::vector<SparseRow> rows_;
  std::vector<int> pivot_row_;
};

int rank_of(const std::vector<SparseRow>& rows, int columns);

}  // namespace moymf
