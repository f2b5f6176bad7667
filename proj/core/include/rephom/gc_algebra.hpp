#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rephom/rational.hpp"

namespace rephom::gca {

// Multi-weight attached to generators/monomials; at most two components are
// active (rank 0, 1 or 2), the rest stay zero.
using Weight = std::array<int, 2>;

inline Weight weight_zero() { return {0, 0}; }
inline Weight weight_add(const Weight& a, const Weight& b) {
  return {a[0] + b[0], a[1] + b[1]};
}
inline bool weight_le(const Weight& a, const Weight& b) {
  return a[0] <= b[0] && a[1] <= b[1];
}
inline int weight_total(const Weight& w) { return w[0] + w[1]; }

// A generator of a free graded-commutative algebra.  Parity (exterior vs.
// polynomial) is the parity of `degree`; `marker` is a caller-defined counter
// that adds up over monomials (used for Kähler form degree).
struct GcGenerator {
  std::string label;
  int degree = 0;
  Weight weight = weight_zero();
  int marker = 0;
};

// Exponent vector, sorted by generator id, exponents >= 1.
struct Monomial {
  std::vector<std::pair<int, int>> powers;  // (generator id, exponent)

  bool operator==(const Monomial& o) const { return powers == o.powers; }
  bool operator<(const Monomial& o) const { return powers < o.powers; }
  bool is_unit() const { return powers.empty(); }
};

// Finite rational linear combination of monomials.
struct Element {
  std::map<Monomial, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rat& c);
  bool operator==(const Element& o) const { return terms == o.terms; }
};

// A degree-homogeneous derivation, given by its value on each generator.
// `degree_shift` is the homological degree added; odd shifts obey the signed
// Leibniz rule D(xy) = D(x) y + (-1)^{|x|} x D(y).
struct Derivation {
  int degree_shift = 0;
  std::vector<Element> values;  // indexed by generator id
};

// Free graded-commutative algebra on a finite generator list.  Odd-degree
// generators square to zero; products reorder into sorted generator order with
// Koszul signs.  Degrees of all generators must share one sign (all >= 1 or
// all <= -1) so that degree-bounded monomial enumeration terminates.
class FreeGcAlgebra {
 public:
  int add_generator(std::string label, int degree, Weight weight = weight_zero(),
                    int marker = 0);
  std::size_t generator_count() const { return gens_.size(); }
  const GcGenerator& generator(int id) const { return gens_[id]; }

  int degree(const Monomial& m) const;
  Weight weight(const Monomial& m) const;
  int marker(const Monomial& m) const;
  bool is_odd(int gen_id) const { return gens_[gen_id].degree & 1; }

  Element unit() const;
  Element gen_element(int id) const;
  static Element zero() { return Element{}; }
  Element scale(const Element& e, const Rat& c) const;

  // Product of monomials with the Koszul sign; zero on a repeated odd
  // generator.  Returns the coefficient alongside the merged monomial.
  std::optional<std::pair<Monomial, int>> mul_monomials(const Monomial& a,
                                                        const Monomial& b) const;
  Element mul(const Element& a, const Element& b) const;

  Element apply(const Derivation& d, const Element& e) const;
  Element apply(const Derivation& d, const Monomial& m) const;

  // All monomials of exact homological degree `degree`; optional exact weight,
  // componentwise weight cap, and exact marker total.  Deterministic order.
  std::vector<Monomial> monomials_of_degree(
      int degree, std::optional<Weight> exact_weight = std::nullopt,
      std::optional<Weight> weight_cap = std::nullopt,
      std::optional<int> exact_marker = std::nullopt) const;

  // All monomials of exact weight (for weight-graded bases, e.g. algebra
  // monomial bases of a Sullivan model); requires every generator to carry
  // positive total weight.
  std::vector<Monomial> monomials_of_weight(const Weight& w) const;

  std::string monomial_str(const Monomial& m) const;
  std::string element_str(const Element& e) const;

 private:
  std::vector<GcGenerator> gens_;
};

}  // namespace rephom::gca
