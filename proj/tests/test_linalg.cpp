#include <doctest.h>

#include <random>
#include <tuple>
#include <vector>

#include "rephom/chain_complex.hpp"
#include "rephom/errors.hpp"
#include "rephom/sparse_matrix.hpp"

using rephom::InputError;
using rephom::MathError;
using rephom::Rat;
using rephom::linalg::BoundedChainComplex;
using rephom::linalg::SparseMatrix;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows,
                           std::size_t cols) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> fill(0, 9);
  SparseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (fill(rng) < 4) {
        const int n = num(rng);
        if (n != 0) m.add(r, c, Rat(n) / Rat(den(rng)));
      }
  return m;
}

std::vector<Rat> random_vector(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-3, 3);
  std::vector<Rat> v(n);
  for (auto& x : v) x = Rat(num(rng));
  return v;
}

}  // namespace

TEST_CASE("rank of hand matrices") {
  CHECK(SparseMatrix(0, 0).rank() == 0);
  CHECK(SparseMatrix(3, 5).rank() == 0);
  CHECK(SparseMatrix::identity(4).rank() == 4);

  // Rows 0 and 2 are proportional.
  const SparseMatrix m = SparseMatrix::from_triplets(
      3, 3,
      {{0, 0, Rat(1)}, {0, 1, Rat(2)}, {1, 1, Rat(1)}, {1, 2, Rat(-1)},
       {2, 0, Rat(2)}, {2, 1, Rat(4)}});
  CHECK(m.rank() == 2);

  // Fractional entries: [[1/2, 1/3], [1/4, 1/6]] is singular.
  const SparseMatrix s = SparseMatrix::from_triplets(
      2, 2,
      {{0, 0, Rat(1) / Rat(2)}, {0, 1, Rat(1) / Rat(3)},
       {1, 0, Rat(1) / Rat(4)}, {1, 1, Rat(1) / Rat(6)}});
  CHECK(s.rank() == 1);
}

TEST_CASE("rank agrees with the transpose") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const SparseMatrix m = random_matrix(rng, 7, 5);
    CHECK(m.rank() == m.transpose().rank());
  }
}

TEST_CASE("rank is invariant under row scaling") {
  std::mt19937 rng(99);
  const SparseMatrix m = random_matrix(rng, 6, 6);
  SparseMatrix scaled(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (const auto& [c, v] : m.row(r)) scaled.add(r, c, v * Rat(7) / Rat(3));
  CHECK(m.rank() == scaled.rank());
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix m = random_matrix(rng, 5, 8);
    const auto kernel = m.kernel_basis();
    CHECK(kernel.size() == m.cols() - m.rank());
    for (const auto& k : kernel) {
      REQUIRE(k.size() == m.cols());
      for (const Rat& y : m.apply(k)) CHECK(rephom::is_zero(y));
    }
    // The kernel vectors are linearly independent.
    if (!kernel.empty()) {
      const SparseMatrix kmat = SparseMatrix::from_columns(m.cols(), kernel);
      CHECK(kmat.rank() == kernel.size());
    }
  }
}

TEST_CASE("solve returns exact preimages") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseMatrix m = random_matrix(rng, 6, 5);
    const std::vector<Rat> x = random_vector(rng, 5);
    const std::vector<Rat> b = m.apply(x);
    const auto sol = m.solve({b});
    REQUIRE(sol.size() == 1);
    const std::vector<Rat> back = m.apply(sol[0]);
    for (std::size_t i = 0; i < b.size(); ++i) CHECK(back[i] == b[i]);
  }
}

TEST_CASE("solve rejects inconsistent systems") {
  // x = 0 and x = 1 cannot both hold.
  const SparseMatrix m =
      SparseMatrix::from_triplets(2, 1, {{0, 0, Rat(1)}, {1, 0, Rat(1)}});
  CHECK_THROWS_AS(m.solve({{Rat(0), Rat(1)}}), MathError);
}

TEST_CASE("matrix product and dense round trip") {
  std::mt19937 rng(5);
  const SparseMatrix a = random_matrix(rng, 4, 6);
  const SparseMatrix b = random_matrix(rng, 6, 3);
  const SparseMatrix ab = a * b;
  REQUIRE(ab.rows() == 4);
  REQUIRE(ab.cols() == 3);
  const auto cols = b.to_columns();
  for (std::size_t c = 0; c < 3; ++c) {
    const auto expect = a.apply(cols[c]);
    for (std::size_t r = 0; r < 4; ++r) CHECK(ab.at(r, c) == expect[r]);
  }
  CHECK(SparseMatrix::from_columns(6, cols) == b);
}

TEST_CASE("chain complex homology of a hand example") {
  // 0 -> Q --0--> Q^2 --(1,1)--> Q -> 0 in degrees 2,1,0:
  // H_0 = 0, H_1 = Q, H_2 = Q.
  BoundedChainComplex c(0, 2);
  c.set_dimension(0, 1);
  c.set_dimension(1, 2);
  c.set_dimension(2, 1);
  c.set_differential(
      1, SparseMatrix::from_triplets(1, 2, {{0, 0, Rat(1)}, {0, 1, Rat(1)}}));
  c.set_differential(2, SparseMatrix(2, 1));
  c.validate();
  const auto h = c.homology_dims();
  CHECK(h.at(0) == 0);
  CHECK(h.at(1) == 1);
  CHECK(h.at(2) == 1);
}

TEST_CASE("chain complex validation rejects d squared nonzero") {
  BoundedChainComplex c(0, 2);
  c.set_dimension(0, 1);
  c.set_dimension(1, 1);
  c.set_dimension(2, 1);
  c.set_differential(1, SparseMatrix::identity(1));
  c.set_differential(2, SparseMatrix::identity(1));
  CHECK_THROWS_AS(c.validate(), MathError);
}
