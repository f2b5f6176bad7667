#pragma once

#include <map>

#include "rephom/sparse_matrix.hpp"

namespace rephom::linalg {

// A finite complex of finite-dimensional rational vector spaces indexed by an
// integer degree interval, with differentials d_n : C_n -> C_{n-1}.
// Degrees outside [lo, hi] are zero.
class BoundedChainComplex {
 public:
  BoundedChainComplex(int lo, int hi);

  int lo() const { return lo_; }
  int hi() const { return hi_; }

  void set_dimension(int degree, std::size_t dim);
  std::size_t dimension(int degree) const;
  // d_n maps C_n to C_{n-1}; shape dim(n-1) x dim(n).
  void set_differential(int degree, SparseMatrix d);
  const SparseMatrix& differential(int degree) const;

  // Shape checks plus d∘d = 0 on every composable pair.
  // Throws MathError on violation.
  void validate() const;

  // Homology dimensions per degree:
  //   dim H_n = dim C_n - rank d_n - rank d_{n+1}.
  std::map<int, std::size_t> homology_dims() const;

 private:
  int lo_;
  int hi_;
  std::map<int, std::size_t> dims_;
  std::map<int, SparseMatrix> diffs_;
};

}  // namespace rephom::linalg
