#pragma once

#include <span>
#include <string>
#include <vector>

#include "rephom/lie_algebra.hpp"
#include "rephom/rational.hpp"

namespace rephom::lie {

// A homogeneous ad-invariant polynomial on g, stored as the full symmetric
// tensor evaluated on basis multisets: values_[rank(i_1 <= ... <= i_k)].
//
// The normalization is fixed once and for all as symmetrized power traces in
// the defining representation,
//   T_k(x_1, ..., x_k) = (1/k!) sum_sigma tr(rho(x_sigma(1)) ... rho(x_sigma(k))),
// plus the degree-2 Pfaffian form on so4 and coordinate functionals on tori.
class InvariantPolynomial {
 public:
  InvariantPolynomial(std::string name, int g_dim, int degree);

  static InvariantPolynomial power_trace(const LieAlgebra& g, int k);
  // The i-th coordinate functional xi_i^*; only invariant when g is abelian.
  static InvariantPolynomial coordinate(const LieAlgebra& g, int i);
  // Polarized Pfaffian, defined for so4 (antisymmetric 4x4 defining rep).
  static InvariantPolynomial pfaffian(const LieAlgebra& g);

  // The standard generating set for each builtin: power traces of degrees
  // m_i + 1 over the exponents (with the Pfaffian replacing the redundant
  // degree-2 trace copy on so4, and coordinates on torus factors).
  static std::vector<InvariantPolynomial> standard_generators(
      const LieAlgebra& g);

  const std::string& name() const { return name_; }
  int degree() const { return degree_; }
  int g_dim() const { return g_dim_; }

  // Value on a sorted index multiset.
  const Rat& value_sorted(std::span<const int> sorted) const;
  // Value on an arbitrary tuple (symmetric, so the order is irrelevant).
  Rat value(std::vector<int> tuple) const;
  void set_value_sorted(std::span<const int> sorted, Rat v);

  bool is_zero() const;

  // Exact check of sum_slots P(x_1, ..., [y, x_s], ..., x_k) = 0 over all
  // basis tuples and all basis y.  Throws MathError on failure.
  void check_ad_invariance(const LieAlgebra& g) const;

 private:
  std::size_t multiset_rank(std::span<const int> sorted) const;

  std::string name_;
  int g_dim_;
  int degree_;
  std::vector<Rat> values_;
};

}  // namespace rephom::lie
