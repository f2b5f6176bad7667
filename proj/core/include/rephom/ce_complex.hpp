#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rephom/block_complex.hpp"
#include "rephom/gc_algebra.hpp"
#include "rephom/lie_algebra.hpp"
#include "rephom/poincare_series.hpp"
#include "rephom/sullivan_model.hpp"

namespace rephom::ce {

// Chain complex of the current Lie algebra g (x) A-bar, A-bar the augmentation
// ideal of a Sullivan model whose generators all carry positive total weight.
// One letter per (g basis vector, A-bar monomial of total weight <= cutoff),
// of chain degree 1 - |monomial| (negative).  The boundary is the internal
// part (termwise d_A, extended as an odd derivation) plus the pair
// contraction against the current bracket.  Reported degrees are n = -(chain
// degree) >= 0.  With `relative`, blocks are cut to the joint kernel of the
// g-action first, computing the relative pair (g(A), g).
class CeComplex {
 public:
  CeComplex(const lie::LieAlgebra& g, const model::SullivanModel& a,
            int weight_cutoff, bool relative);

  // Smallest total-weight cutoff that makes every homology group of reported
  // degree <= max_degree exact, from the generator degree/weight ratios.
  static int required_cutoff(const model::SullivanModel& a, int max_degree);

  const gca::FreeGcAlgebra& letters() const { return letters_; }
  const lie::LieAlgebra& coefficients() const { return g_; }
  const model::SullivanModel& base() const { return a_; }
  int weight_cutoff() const { return cutoff_; }
  bool relative() const { return relative_; }

  int letter_id(int g_index, const gca::Monomial& a_monomial) const;

  gca::Element boundary(const gca::Monomial& m) const;
  gca::Element boundary(const gca::Element& e) const;

  // Checks boundary^2 = 0 on every monomial of every weight block.
  void verify_boundary_squared() const;

  // Homology series in z (engine degree) and the weight variables; throws
  // InputError naming the required cutoff when the built one is too small.
  PoincareSeries series(int max_degree) const;

  // Euler characteristic per weight block, signed by engine degree; weight
  // zero (the unit block) is excluded.
  std::map<gca::Weight, Int> weight_euler() const;

 private:
  struct LetterInfo {
    int g_index = 0;
    gca::Monomial a_mono;
  };

  linalg::SparseMatrix boundary_matrix(const block::Block& src,
                                       const block::Block& tgt) const;
  gca::Derivation g_action(int u) const;
  // Blocks of one exact weight, keyed by chain degree.
  std::map<int, block::Block> weight_blocks(const gca::Weight& w) const;

  // Held by value: the complex must not dangle when the caller's algebra or
  // model goes out of scope first.
  lie::LieAlgebra g_;
  model::SullivanModel a_;
  int cutoff_;
  bool relative_;
  gca::FreeGcAlgebra letters_;
  std::vector<LetterInfo> info_;
  std::map<std::pair<int, gca::Monomial>, int> letter_of_;
  gca::Derivation internal_;  // termwise d_A part
  std::vector<gca::Weight> weight_list_;  // nonzero weights <= cutoff, sorted
};

}  // namespace rephom::ce
