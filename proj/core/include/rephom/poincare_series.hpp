#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "rephom/gc_algebra.hpp"
#include "rephom/rational.hpp"

namespace rephom {

// Truncated series in z (homological degree) with up to two auxiliary weight
// variables q and t.  Terms of z-degree > max_degree are discarded; weight
// exponents are kept exactly.  Coefficients are exact rationals.
class PoincareSeries {
 public:
  // Key: (z-degree, q-exponent, t-exponent).
  using Key = std::array<int, 3>;

  explicit PoincareSeries(int max_degree, int weight_rank = 0);

  static PoincareSeries one(int max_degree, int weight_rank = 0);

  int max_degree() const { return max_degree_; }
  int weight_rank() const { return weight_rank_; }

  void add_term(int degree, const Rat& coeff,
                gca::Weight weight = gca::weight_zero());
  Rat coefficient(int degree, gca::Weight weight = gca::weight_zero()) const;
  // Coefficient of z^degree with all weights summed out.
  Rat z_coefficient(int degree) const;

  PoincareSeries operator+(const PoincareSeries& o) const;
  PoincareSeries operator-(const PoincareSeries& o) const;
  PoincareSeries operator*(const PoincareSeries& o) const;
  bool operator==(const PoincareSeries& o) const;

  // Drops weight variables, collapsing onto z.
  PoincareSeries forget_weights() const;

  // Series of the free graded-commutative algebra on the given generators:
  // each odd generator contributes (1 + z^d q^w), each even generator the
  // truncated geometric factor 1/(1 - z^d q^w).  Degrees must be >= 1.
  static PoincareSeries free_commutative(
      const std::vector<std::pair<int, gca::Weight>>& odd_gens,
      const std::vector<std::pair<int, gca::Weight>>& even_gens,
      int max_degree, int weight_rank = 0);

  // First mismatching key between two series compared as polynomials in z up
  // to min(max degrees); empty string when equal on that range.
  std::string first_mismatch(const PoincareSeries& o) const;

  // Deterministic display: "1 + 3*z + q^2*z^5 + ..." ordered by key.
  std::string str() const;

  const std::map<Key, Rat>& terms() const { return terms_; }

 private:
  int max_degree_;
  int weight_rank_;
  std::map<Key, Rat> terms_;
};

}  // namespace rephom
