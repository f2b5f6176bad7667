#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "rephom/gc_algebra.hpp"
#include "rephom/sullivan_model.hpp"

namespace rephom::hodge {

// Kähler forms of a Sullivan model A: the free graded-commutative algebra on
// each A-generator g (homological degree -|g|) and its differential dg
// (degree 1-|g|, marked so that the marker count of a monomial is its form
// degree m).  Carries the de Rham differential d (degree +1) and the internal
// differential induced by A's (degree -1), anticommuting by construction.
//
// The Hodge piece of reduced cyclic homology is the homology of the quotient
// complex Omega^m / d(Omega^{m-1}) under the internal differential, graded by
// (weight, homological degree); reported cyclic degrees carry the [m] shift.
// Loop-space dimensions are the dual regrading n = -(cyclic degree) - 1.
class FormComplex {
 public:
  explicit FormComplex(const model::SullivanModel& a);

  const model::SullivanModel& base() const { return a_; }
  const gca::FreeGcAlgebra& forms() const { return forms_; }
  const gca::Derivation& de_rham() const { return de_rham_; }
  const gca::Derivation& internal() const { return internal_; }

  int plain_gen(int a_generator) const {
    return plain_[static_cast<std::size_t>(a_generator)];
  }
  int diff_gen(int a_generator) const {
    return diffs_[static_cast<std::size_t>(a_generator)];
  }

  // Translates an element of A into the form algebra (no d-letters).
  gca::Element from_base(const gca::Element& a_element) const;

  // d^2 = 0, internal^2 = 0 and d*internal + internal*d = 0, exactly.
  void verify() const;

  // Reduced representative modulo d(Omega^{m-1}), blockwise per (weight,
  // degree); pivots prefer to eliminate monomials free of plain odd letters,
  // so surviving representatives keep them.
  gca::Element reduce_mod_exact(const gca::Element& form, int m) const;

  // dim of the m-th Hodge piece of reduced cyclic homology per (weight,
  // cyclic degree); weights run over 1..weight_cutoff in total.
  std::map<std::pair<gca::Weight, int>, std::size_t> cyclic_dims(
      int m, int weight_cutoff) const;

  // Loop-space dims at degrees 0..max_degree, weights summed out; the weight
  // cutoff needed for exactness is derived from generator data.
  std::map<int, std::size_t> loop_dims(int m, int max_degree) const;

  int cutoff_for_degree(int m, int max_degree) const;

 private:
  struct QuotientBlock {
    std::vector<gca::Monomial> ambient;           // marker-m basis
    std::map<gca::Monomial, std::size_t> index;
    // Gauss-Jordan echelon of d(Omega^{m-1}): pivot row -> dense column.
    std::map<std::size_t, std::vector<Rat>> echelon;
    std::vector<std::size_t> rep_rows;            // non-pivot rows
  };

  QuotientBlock quotient_block(int m, const gca::Weight& w, int degree) const;
  std::vector<Rat> project(const QuotientBlock& q,
                           std::vector<Rat> dense) const;

  // Held by value: the complex must not dangle when the caller's model goes
  // out of scope first.
  model::SullivanModel a_;
  gca::FreeGcAlgebra forms_;
  std::vector<int> plain_;
  std::vector<int> diffs_;
  gca::Derivation de_rham_;
  gca::Derivation internal_;
};

}  // namespace rephom::hodge
