#pragma once

#include <string>
#include <vector>

#include "rephom/rational.hpp"
#include "rephom/sparse_matrix.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rephom::lie {

using Coords = std::vector<std::pair<int, Rat>>;  // sparse vector, sorted

// Finite-dimensional Lie algebra over Q presented by structure constants on a
// fixed ordered basis, together with its exponent list and a faithful
// defining representation (used for trace-form invariant polynomials).
//
// Builtins: sl2, sl3, sl4, so4, sp4, gl2, torus:n.  All builtins are
// reductive; exponent 0 entries correspond to central directions.
class LieAlgebra {
 public:
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<int> exponents;  // ascending, one per reductive rank
  // defining_rep[i] is a rep_dim x rep_dim exact matrix for basis[i].
  std::vector<std::vector<std::vector<Rat>>> defining_rep;

  static LieAlgebra builtin(const std::string& name);
  static std::vector<std::string> builtin_names();

  // Builds structure constants from the defining representation: brackets of
  // basis matrices are re-expanded in the basis (must close).
  static LieAlgebra from_matrices(
      std::string name, std::vector<std::string> labels,
      std::vector<std::vector<std::vector<Rat>>> matrices,
      std::vector<int> exponents);

  static LieAlgebra from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  const Coords& bracket(int i, int j) const;
  bool abelian() const;
  int rank() const { return static_cast<int>(exponents.size()); }

  // Adjoint action matrix of basis[i] acting on g.
  linalg::SparseMatrix ad_matrix(int i) const;

  // Full Sweedler expansion of the cobracket of the dual basis vector k:
  // delta(xi^k) = sum_{i<j} c^k_{ij} (xi^i (x) xi^j - xi^j (x) xi^i),
  // returned as a sparse list of ((i, j), coefficient) over ordered pairs.
  std::vector<std::tuple<int, int, Rat>> cobracket(int k) const;

  // Antisymmetry, Jacobi on all triples, the defining representation being a
  // homomorphism, and sum(2 m_i + 1) == dim.  Throws MathError.
  void validate() const;

  void set_bracket(int i, int j, Coords coords);

 private:
  // Full table: brackets_[i][j] holds [basis_i, basis_j]; set_bracket keeps
  // the table antisymmetric.
  std::vector<std::vector<Coords>> brackets_;
};

}  // namespace rephom::lie
