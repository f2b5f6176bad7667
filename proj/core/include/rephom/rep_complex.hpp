#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "rephom/block_complex.hpp"
#include "rephom/gc_algebra.hpp"
#include "rephom/lie_algebra.hpp"
#include "rephom/poincare_series.hpp"
#include "rephom/quillen_model.hpp"

namespace rephom::rep {

// Element of Lambda(g* (x) V) (x) g: one algebra coefficient per g basis
// direction.
struct CurrentElement {
  std::vector<gca::Element> components;

  bool is_zero() const;
};

struct LowDegreeRow {
  int degree = 0;
  std::size_t computed = 0;
  std::size_t expected = 0;
  bool ok = false;
};

struct LowDegreeReport {
  bool pass = true;
  std::vector<LowDegreeRow> rows;
};

// The representation complex of a free Lie model: the free graded-commutative
// algebra on generators (xi_i^*, v) of degree |v|, with the differential
// sending a generator to the xi_i-component of the universal representation
// of dv, extended as a degree -1 derivation.  Homology per degree splits by
// model weight when the model is weighted.
class RepComplex {
 public:
  // `convention_scale` multiplies the differential; homology dimensions are
  // invariant under nonzero rescaling (kept adjustable so tests can pin that).
  RepComplex(const model::QuillenModel& m, const lie::LieAlgebra& g,
             Rat convention_scale = Rat(1));

  const gca::FreeGcAlgebra& algebra() const { return alg_; }
  const gca::Derivation& diff() const { return diff_; }
  const lie::LieAlgebra& coefficients() const { return g_; }
  const model::QuillenModel& space_model() const { return m_; }
  bool weighted() const { return weighted_; }

  // Algebra generator id of xi_i^* (x) v.
  int generator_id(int g_index, int model_gen) const;

  // The universal representation x -> sum_i (xi_i^* (x) x) (x) xi_i, extended
  // to brackets by [a (x) xi, b (x) eta] = ab (x) [xi, eta].
  CurrentElement universal_rep(const model::LieExpr& x) const;

  // Action of g basis vector u, as a degree-0 weight-0 derivation.
  gca::Derivation ad_action(int u) const;

  // Checks that the differential squares to zero on every monomial of degree
  // <= max_degree; throws MathError otherwise.
  void verify_d_squared(int max_degree) const;

  std::vector<std::size_t> homology_dims(int max_degree) const;
  PoincareSeries homology_series(int max_degree) const;
  std::vector<std::size_t> invariant_homology_dims(int max_degree) const;
  PoincareSeries invariant_homology_series(int max_degree) const;

  // Compares low-degree homology with H_{i+1}(X) (x) g* for an n-connected
  // space: zero below degree n, dim = h[i+1] * dim g for n <= i <= 2n-1, and
  // a single class in degree 0.
  LowDegreeReport low_degree_check(const std::vector<int>& reduced_h_dims,
                                   int connectivity) const;

 private:
  PoincareSeries dims_to_series(
      const std::map<std::pair<int, gca::Weight>, std::size_t>& dims,
      int max_degree) const;
  std::map<std::pair<int, gca::Weight>, std::size_t> block_homology(
      int max_degree, bool invariant) const;

  // Held by value: the complex must not dangle when the caller's model or
  // algebra goes out of scope first.
  model::QuillenModel m_;
  lie::LieAlgebra g_;
  gca::FreeGcAlgebra alg_;
  gca::Derivation diff_;
  bool weighted_ = false;
  std::vector<std::vector<int>> gen_ids_;  // [g_index][model_gen]
};

}  // namespace rephom::rep
