#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rephom/gc_algebra.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom::block {

// Monomial basis of one (degree, weight) block, with index lookup.
struct Block {
  std::vector<gca::Monomial> basis;
  std::map<gca::Monomial, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
};

Block enumerate_block(const gca::FreeGcAlgebra& alg, int degree,
                      std::optional<gca::Weight> exact_weight = std::nullopt,
                      std::optional<gca::Weight> weight_cap = std::nullopt,
                      std::optional<int> exact_marker = std::nullopt);

// Matrix of a derivation restricted to `source`, written in `target`'s basis
// (columns = source monomials).  A value outside the target block is a
// MathError: blocks must be closed under the operators applied to them.
linalg::SparseMatrix operator_matrix(const gca::FreeGcAlgebra& alg,
                                     const gca::Derivation& op,
                                     const Block& source, const Block& target);

// Column spans of a block, dense columns.
using ColumnSpan = std::vector<std::vector<Rat>>;

ColumnSpan identity_span(std::size_t dim);
linalg::SparseMatrix from_columns(std::size_t n_rows, const ColumnSpan& cols);

// Joint kernel of the operators on a dim-dimensional space, computed by
// iterated restriction: K <- K * ker(op * K).
ColumnSpan joint_kernel(std::size_t dim,
                        const std::vector<linalg::SparseMatrix>& ops);

// The matrix of `op` from span `source` to span `target`, obtained by solving
// target * X = op * source.  Throws MathError when op does not map the source
// span into the target span.
linalg::SparseMatrix restrict_operator(const linalg::SparseMatrix& op,
                                       const ColumnSpan& source,
                                       const ColumnSpan& target,
                                       std::size_t target_ambient_dim);

}  // namespace rephom::block
