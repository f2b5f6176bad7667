#include "rephom/chain_complex.hpp"

#include <string>

#include "rephom/errors.hpp"

namespace rephom::linalg {

BoundedChainComplex::BoundedChainComplex(int lo, int hi) : lo_(lo), hi_(hi) {
  if (lo > hi) throw InputError("empty degree interval in chain complex");
  for (int n = lo; n <= hi; ++n) dims_[n] = 0;
}

void BoundedChainComplex::set_dimension(int degree, std::size_t dim) {
  if (degree < lo_ || degree > hi_)
    throw InputError("degree outside complex interval");
  dims_[degree] = dim;
}

std::size_t BoundedChainComplex::dimension(int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void BoundedChainComplex::set_differential(int degree, SparseMatrix d) {
  if (degree <= lo_ || degree > hi_)
    throw InputError("differential degree outside complex interval");
  diffs_[degree] = std::move(d);
}

const SparseMatrix& BoundedChainComplex::differential(int degree) const {
  static const SparseMatrix empty;
  auto it = diffs_.find(degree);
  return it == diffs_.end() ? empty : it->second;
}

void BoundedChainComplex::validate() const {
  for (const auto& [n, d] : diffs_) {
    if (d.rows() != dimension(n - 1) || d.cols() != dimension(n))
      throw MathError("differential shape mismatch at degree " +
                      std::to_string(n));
    auto lower = diffs_.find(n - 1);
    if (lower != diffs_.end() && !(lower->second * d).is_zero())
      throw MathError("d∘d != 0 between degrees " + std::to_string(n) +
                      " and " + std::to_string(n - 2));
  }
}

std::map<int, std::size_t> BoundedChainComplex::homology_dims() const {
  std::map<int, std::size_t> ranks;
  for (const auto& [n, d] : diffs_) ranks[n] = d.rank();
  auto rank_at = [&](int n) {
    auto it = ranks.find(n);
    return it == ranks.end() ? std::size_t(0) : it->second;
  };
  std::map<int, std::size_t> h;
  for (int n = lo_; n <= hi_; ++n)
    h[n] = dimension(n) - rank_at(n) - rank_at(n + 1);
  return h;
}

}  // namespace rephom::linalg
