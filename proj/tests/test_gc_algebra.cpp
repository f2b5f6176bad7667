#include <doctest.h>

#include <random>
#include <vector>

#include "rephom/gc_algebra.hpp"

using namespace rephom;
using gca::Element;
using gca::FreeGcAlgebra;
using gca::Monomial;

namespace {

// Mixed-parity playground: two odd letters, two even letters.
FreeGcAlgebra sample_algebra() {
  FreeGcAlgebra a;
  a.add_generator("x", 1, {1, 0});
  a.add_generator("y", 3, {2, 0});
  a.add_generator("u", 2, {1, 0});
  a.add_generator("v", 4, {3, 0});
  return a;
}

Element random_element(const FreeGcAlgebra& a, std::mt19937& rng,
                       int max_factors) {
  std::uniform_int_distribution<int> gen(0, static_cast<int>(a.generator_count()) - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> len(1, max_factors);
  Element out;
  for (int term = 0; term < 3; ++term) {
    Element prod = a.unit();
    const int n = len(rng);
    for (int f = 0; f < n; ++f) prod = a.mul(prod, a.gen_element(gen(rng)));
    out += a.scale(prod, Rat(coeff(rng)));
  }
  return out;
}

}  // namespace

TEST_CASE("odd generators square to zero, even ones do not") {
  FreeGcAlgebra a = sample_algebra();
  const Element x = a.gen_element(0);
  const Element u = a.gen_element(2);
  CHECK(a.mul(x, x).is_zero());
  CHECK(!a.mul(u, u).is_zero());
}

TEST_CASE("Koszul sign under transposition") {
  FreeGcAlgebra a = sample_algebra();
  const Element x = a.gen_element(0);
  const Element y = a.gen_element(1);
  const Element u = a.gen_element(2);

  // odd * odd anticommutes.
  Element anti = a.mul(x, y);
  anti += a.mul(y, x);
  CHECK(anti.is_zero());

  // odd * even commutes.
  Element comm = a.mul(x, u);
  comm -= a.mul(u, x);
  CHECK(comm.is_zero());
}

TEST_CASE("product is associative and graded-commutative") {
  FreeGcAlgebra a = sample_algebra();
  std::mt19937 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Element p = random_element(a, rng, 3);
    const Element q = random_element(a, rng, 3);
    const Element r = random_element(a, rng, 2);
    Element assoc = a.mul(a.mul(p, q), r);
    assoc -= a.mul(p, a.mul(q, r));
    CHECK(assoc.is_zero());
  }
}

TEST_CASE("degrees, weights and markers add over products") {
  FreeGcAlgebra a = sample_algebra();
  const auto prod = a.mul_monomials(Monomial{{{1, 1}, {2, 2}}}, Monomial{{{0, 1}}});
  REQUIRE(prod.has_value());
  CHECK(a.degree(prod->first) == 3 + 2 * 2 + 1);
  CHECK(a.weight(prod->first) == gca::Weight{2 + 2 * 1 + 1, 0});
}

TEST_CASE("derivations obey the signed Leibniz rule") {
  FreeGcAlgebra a = sample_algebra();
  // d(x) = u, d(y) = v, d(u) = 0, d(v) = 0: a degree +1 derivation.
  gca::Derivation d;
  d.degree_shift = 1;
  d.values = {a.gen_element(2), a.gen_element(3), a.zero(), a.zero()};

  std::mt19937 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    // Homogeneous left factor, so the Koszul sign is a single power of -1.
    std::uniform_int_distribution<int> gen(0, 3);
    Element left = a.gen_element(gen(rng));
    if (trial % 2) left = a.mul(left, a.gen_element(gen(rng)));
    if (left.is_zero()) continue;
    const int left_degree = a.degree(left.terms.begin()->first);
    const Element right = random_element(a, rng, 2);

    Element lhs = a.apply(d, a.mul(left, right));
    Element rhs = a.mul(a.apply(d, left), right);
    Element mixed = a.mul(left, a.apply(d, right));
    if (left_degree % 2 != 0) mixed *= Rat(-1);
    rhs += mixed;
    lhs -= rhs;
    CHECK(lhs.is_zero());
  }
}

TEST_CASE("monomial enumeration counts match binomials") {
  // Pure exterior algebra on three odd degree-1 letters: dim of degree k
  // is C(3, k).
  FreeGcAlgebra ext;
  ext.add_generator("a", 1);
  ext.add_generator("b", 1);
  ext.add_generator("c", 1);
  CHECK(ext.monomials_of_degree(0).size() == 1);
  CHECK(ext.monomials_of_degree(1).size() == 3);
  CHECK(ext.monomials_of_degree(2).size() == 3);
  CHECK(ext.monomials_of_degree(3).size() == 1);
  CHECK(ext.monomials_of_degree(4).empty());

  // Polynomial algebra on one even letter: exactly one monomial per even
  // degree.
  FreeGcAlgebra poly;
  poly.add_generator("z", 2);
  CHECK(poly.monomials_of_degree(6).size() == 1);
  CHECK(poly.monomials_of_degree(7).empty());
}

TEST_CASE("weight filters select sub-blocks") {
  FreeGcAlgebra a = sample_algebra();
  // Degree 4 in x(1;w1), y(3;w2), u(2;w1), v(4;w3): monomials are
  // x*y (w3), u^2 (w2), v (w3).
  const auto all = a.monomials_of_degree(4);
  CHECK(all.size() == 3);
  const auto w2 = a.monomials_of_degree(4, gca::Weight{2, 0});
  REQUIRE(w2.size() == 1);
  CHECK(a.monomial_str(w2[0]) == "u^2");
  const auto capped = a.monomials_of_degree(4, std::nullopt, gca::Weight{2, 0});
  CHECK(capped.size() == 1);
}

TEST_CASE("monomials_of_weight enumerates the weight block") {
  FreeGcAlgebra a;
  a.add_generator("z", 2, {1, 0});
  a.add_generator("s", 5, {3, 0});
  // Weight 3: z^3 and s.
  CHECK(a.monomials_of_weight({3, 0}).size() == 2);
  // Weight 4: z^4 and z*s.
  CHECK(a.monomials_of_weight({4, 0}).size() == 2);
}

TEST_CASE("element printing is deterministic") {
  FreeGcAlgebra a = sample_algebra();
  Element e = a.mul(a.gen_element(0), a.gen_element(1));
  e += a.scale(a.gen_element(3), Rat(-2));
  CHECK(a.element_str(e) == "x*y - 2*v");
  CHECK(a.element_str(a.zero()) == "0");
}
