#pragma once

#include <cstddef>
#include <tuple>
#include <vector>

#include "rephom/rational.hpp"

namespace rephom::linalg {

// Sparse matrix over the rationals.  Rows hold (column, value) pairs sorted by
// column with no explicit zeros and no duplicates.  Elimination is
// fraction-free (Bareiss-style): rows are scaled to integers and every update
// divides exactly by the previous pivot, so intermediate entries stay minors
// of the input rather than exploding.  Pivot selection prefers sparse rows and
// low-fill columns; ties break on the lowest index so results are
// deterministic.
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, Rat>;  // (column, value)

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix identity(std::size_t n);
  static SparseMatrix from_triplets(
      std::size_t rows, std::size_t cols,
      const std::vector<std::tuple<std::size_t, std::size_t, Rat>>& triplets);
  // Columns given as dense vectors of length `rows`.
  static SparseMatrix from_columns(std::size_t rows,
                                   const std::vector<std::vector<Rat>>& cols);

  std::size_t rows() const { return n_rows_; }
  std::size_t cols() const { return n_cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const std::vector<Entry>& row(std::size_t r) const { return rows_[r]; }
  Rat at(std::size_t r, std::size_t c) const;
  // Adds `value` at (r, c), merging with an existing entry.
  void add(std::size_t r, std::size_t c, const Rat& value);

  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& rhs) const;
  std::vector<Rat> apply(const std::vector<Rat>& x) const;
  std::vector<std::vector<Rat>> to_columns() const;

  std::size_t rank() const;
  // Basis of the right kernel {x : Ax = 0}, each vector scaled to coprime
  // integers with a positive leading entry; deterministic order.
  std::vector<std::vector<Rat>> kernel_basis() const;
  // Solves A X = B columnwise.  Throws MathError if any column is
  // inconsistent.  B is given and returned in column-major form.
  std::vector<std::vector<Rat>> solve(
      const std::vector<std::vector<Rat>>& rhs_cols) const;

  bool operator==(const SparseMatrix& other) const;

 private:
  std::size_t n_rows_ = 0;
  std::size_t n_cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

}  // namespace rephom::linalg
