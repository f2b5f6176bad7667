#pragma once

#include <string>
#include <vector>

#include "rephom/hodge.hpp"
#include "rephom/invariant_polynomial.hpp"
#include "rephom/lie_expr.hpp"
#include "rephom/poincare_series.hpp"
#include "rephom/rep_complex.hpp"

namespace rephom::drinfeld {

// Symmetric word x_1 ... x_d of Lie expressions; trace evaluation only uses
// the listed representative order (reorderings change it by a Koszul sign on
// the algebra legs, hence span the same subspace).
struct SymWord {
  std::vector<model::LieExpr> factors;
};

// Trace of an invariant polynomial along a word: sum over index tuples of the
// product of algebra legs of the universal representation, weighted by P on
// the g legs.  Lands in the ad-invariant cycles of the representation
// complex.
gca::Element quillen_trace(const lie::InvariantPolynomial& P,
                           const rep::RepComplex& rep, const SymWord& word);

// Wedge of current elements xi_i (x) a_i (a_i a homogeneous element of the
// base Sullivan algebra), the chain-level input of the form-side trace.
struct CurrentWedge {
  std::vector<std::pair<int, gca::Element>> factors;
};

// The form-side trace: (1/(m+1)!) sum over permutations with Koszul signs on
// suspended factor degrees of a_{s0} da_{s1} ... da_{sm} P(xi_{s0},...),
// reduced modulo d(Omega^m-1).  P must have degree m+1 = wedge length.
gca::Element sullivan_psi(const lie::InvariantPolynomial& P,
                          const hodge::FormComplex& forms,
                          const CurrentWedge& chain);

// All single bracket trees over the model's generators of the given total
// degree (a spanning set of the free Lie algebra there).
std::vector<model::LieExpr> spanning_trees(const model::QuillenModel& m,
                                           int degree);

// Multisets of spanning trees with `factors` entries and the given total
// degree, factors ordered by non-decreasing degree.
std::vector<SymWord> trace_words(const model::QuillenModel& m, int factors,
                                 int degree);

struct FreenessRow {
  std::string item;
  bool ok = false;
  std::string detail;
};

struct FreenessReport {
  bool pass = true;
  std::string space;
  std::string group;
  std::vector<int> generator_degrees;  // ascending, with multiplicity
  std::string free_series;
  std::string invariant_series;
  std::vector<FreenessRow> checks;
};

// Builds the free graded-commutative series on the loop-space Hodge degrees
// (one batch per exponent of g) and compares it with the invariant homology
// series of the space; for spaces with a Lie model, additionally certifies
// that trace images of lowest-degree words are nonzero ad-invariant cycles
// with nonzero homology class.
FreenessReport drinfeld_freeness_check(const std::string& space,
                                       const lie::LieAlgebra& g,
                                       int max_degree);

}  // namespace rephom::drinfeld
