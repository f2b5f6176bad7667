#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace rephom::macd {

// Vector in the root lattice, coordinates over the simple-root basis.
using LatticeVector = std::vector<int>;
// Weyl group element as an integer matrix on those coordinates.
using WeylMatrix = std::vector<std::vector<int>>;

LatticeVector apply_weyl(const WeylMatrix& w, const LatticeVector& v);

// Finite root system data for the builtin types A1, A2, A3, B2, G2, B3.
// Simple reflections act by s_i(e_j) = e_j - cartan[i][j] e_i; the full Weyl
// group is generated from them on construction.
struct RootSystem {
  std::string type_rank;
  int rank = 0;
  std::vector<std::vector<int>> cartan;
  std::vector<LatticeVector> positive_roots;
  std::vector<int> exponents;
  std::vector<WeylMatrix> weyl;  // every element, in a deterministic order

  static RootSystem builtin(const std::string& type_rank);
  static std::vector<std::string> builtin_names();

  std::size_t weyl_order() const { return weyl.size(); }

  // Positive roots followed by their negatives.
  std::vector<LatticeVector> roots() const;

  WeylMatrix simple_reflection(int i) const;

  // Root closure under the simple reflections, Weyl order vs. the exponent
  // product, positive-root count vs. the exponent sum, Cartan sign pattern.
  void validate() const;
};

}  // namespace rephom::macd
