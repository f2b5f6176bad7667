#include "rephom/block_complex.hpp"

#include "rephom/errors.hpp"

namespace rephom::block {

Block enumerate_block(const gca::FreeGcAlgebra& alg, int degree,
                      std::optional<gca::Weight> exact_weight,
                      std::optional<gca::Weight> weight_cap,
                      std::optional<int> exact_marker) {
  Block b;
  b.basis =
      alg.monomials_of_degree(degree, exact_weight, weight_cap, exact_marker);
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    b.index.emplace(b.basis[i], i);
  return b;
}

linalg::SparseMatrix operator_matrix(const gca::FreeGcAlgebra& alg,
                                     const gca::Derivation& op,
                                     const Block& source, const Block& target) {
  linalg::SparseMatrix m(target.dim(), source.dim());
  for (std::size_t j = 0; j < source.dim(); ++j) {
    const gca::Element val = alg.apply(op, source.basis[j]);
    for (const auto& [mono, c] : val.terms) {
      auto it = target.index.find(mono);
      if (it == target.index.end())
        throw MathError("operator leaves the enumerated block: " +
                        alg.monomial_str(source.basis[j]) + " -> " +
                        alg.monomial_str(mono));
      m.add(it->second, j, c);
    }
  }
  return m;
}

ColumnSpan identity_span(std::size_t dim) {
  ColumnSpan k(dim, std::vector<Rat>(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) k[i][i] = 1;
  return k;
}

linalg::SparseMatrix from_columns(std::size_t n_rows, const ColumnSpan& cols) {
  return linalg::SparseMatrix::from_columns(n_rows, cols);
}

ColumnSpan joint_kernel(std::size_t dim,
                        const std::vector<linalg::SparseMatrix>& ops) {
  ColumnSpan k = identity_span(dim);
  for (const auto& op : ops) {
    if (k.empty()) return k;
    if (op.is_zero()) continue;
    linalg::SparseMatrix restricted = op * from_columns(dim, k);
    const auto ker = restricted.kernel_basis();
    ColumnSpan next;
    next.reserve(ker.size());
    for (const auto& combo : ker) {
      std::vector<Rat> col(dim, Rat(0));
      for (std::size_t t = 0; t < combo.size(); ++t) {
        if (is_zero(combo[t])) continue;
        for (std::size_t r = 0; r < dim; ++r)
          col[r] += combo[t] * k[t][r];
      }
      next.push_back(std::move(col));
    }
    k = std::move(next);
  }
  return k;
}

linalg::SparseMatrix restrict_operator(const linalg::SparseMatrix& op,
                                       const ColumnSpan& source,
                                       const ColumnSpan& target,
                                       std::size_t target_ambient_dim) {
  std::vector<std::vector<Rat>> rhs;
  rhs.reserve(source.size());
  for (const auto& col : source) rhs.push_back(op.apply(col));
  const linalg::SparseMatrix t = from_columns(target_ambient_dim, target);
  const auto x = t.solve(rhs);
  return linalg::SparseMatrix::from_columns(target.size(), x);
}

}  // namespace rephom::block
