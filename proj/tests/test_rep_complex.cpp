#include <doctest.h>

#include <vector>

#include "rephom/catalog.hpp"
#include "rephom/lie_algebra.hpp"
#include "rephom/poincare_series.hpp"
#include "rephom/rep_complex.hpp"

using namespace rephom;
using lie::LieAlgebra;
using rep::RepComplex;

namespace {

int basis_index(const LieAlgebra& g, const std::string& label) {
  for (int i = 0; i < g.dim; ++i)
    if (g.basis[i] == label) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("2-sphere with sl2: full and invariant homology") {
  const auto models = model::catalog("sphere:2", 10);
  const RepComplex rc(*models.quillen, LieAlgebra::builtin("sl2"));
  rc.verify_d_squared(10);

  const auto dims = rc.homology_dims(6);
  REQUIRE(dims.size() == 7);
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 3);
  CHECK(dims[2] == 3);
  CHECK(dims[3] == 1);
  CHECK(dims[4] == 0);
  CHECK(dims[5] == 0);
  CHECK(dims[6] == 0);

  const auto inv = rc.invariant_homology_dims(6);
  CHECK(inv[0] == 1);
  CHECK(inv[1] == 0);
  CHECK(inv[2] == 0);
  CHECK(inv[3] == 1);
  CHECK(inv[4] == 0);
}

TEST_CASE("differential of the length-2 truncation by hand") {
  const auto models = model::catalog("cp:2", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const RepComplex rc(*models.quillen, g);
  const int e = basis_index(g, "e");
  const int h = basis_index(g, "h");
  const int f = basis_index(g, "f");
  const auto& alg = rc.algebra();

  // d(h (x) v2) = (1/2) [e,f]-component of rho([v1, v1]) = (e v1)(f v1).
  const int h_v2 = rc.generator_id(h, 1);
  auto expected = alg.mul(alg.gen_element(rc.generator_id(e, 0)),
                          alg.gen_element(rc.generator_id(f, 0)));
  CHECK(rc.diff().values[static_cast<std::size_t>(h_v2)] == expected);

  // d(e (x) v2) = -2 (e v1)(h v1); the [h,e] = 2e term, antisymmetrized.
  const int e_v2 = rc.generator_id(e, 1);
  auto expected_e = alg.mul(alg.gen_element(rc.generator_id(e, 0)),
                            alg.gen_element(rc.generator_id(h, 0)));
  expected_e *= Rat(-2);
  CHECK(rc.diff().values[static_cast<std::size_t>(e_v2)] == expected_e);

  // d(v1 letters) = 0.
  CHECK(rc.diff().values[static_cast<std::size_t>(rc.generator_id(e, 0))]
            .is_zero());
}

TEST_CASE("universal representation of a bracket") {
  const auto models = model::catalog("cp:2", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const RepComplex rc(*models.quillen, g);
  const int e = basis_index(g, "e");
  const int h = basis_index(g, "h");
  const int f = basis_index(g, "f");
  const auto& alg = rc.algebra();

  const auto rho = rc.universal_rep(
      model::LieExpr::bracket(model::LieExpr::generator(0),
                              model::LieExpr::generator(0)));
  REQUIRE(rho.components.size() == static_cast<std::size_t>(g.dim));
  // The h-component of rho([v1, v1]) is 2 (e v1)(f v1).
  auto expect_h = alg.mul(alg.gen_element(rc.generator_id(e, 0)),
                          alg.gen_element(rc.generator_id(f, 0)));
  expect_h *= Rat(2);
  CHECK(rho.components[static_cast<std::size_t>(h)] == expect_h);
}

TEST_CASE("homology dims are invariant under differential rescaling") {
  const auto models = model::catalog("cp:2", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const RepComplex plain(*models.quillen, g);
  const RepComplex scaled(*models.quillen, g, Rat(-7) / Rat(3));
  scaled.verify_d_squared(9);
  CHECK(plain.homology_dims(9) == scaled.homology_dims(9));
  CHECK(plain.invariant_homology_dims(9) == scaled.invariant_homology_dims(9));
}

TEST_CASE("d squared vanishes across the catalog") {
  for (const auto& spec : model::catalog_samples()) {
    const auto models = model::catalog(spec, 8);
    if (!models.quillen) continue;
    CAPTURE(spec);
    for (const auto& group : {"sl2", "torus:2"}) {
      const RepComplex rc(*models.quillen, LieAlgebra::builtin(group));
      rc.verify_d_squared(8);
    }
  }
}

TEST_CASE("low-degree window equals H_{i+1}(X) tensor g*") {
  struct Case {
    const char* spec;
    int connectivity;
  };
  for (const Case c : {Case{"sphere:4", 3}, Case{"sphere:5", 4}}) {
    for (const auto& group : {"sl2", "sl3"}) {
      CAPTURE(c.spec);
      CAPTURE(group);
      const auto models = model::catalog(c.spec, 12);
      const RepComplex rc(*models.quillen, LieAlgebra::builtin(group));
      const auto reduced = model::reduced_homology_dims(c.spec, 2 * c.connectivity);
      const auto report = rc.low_degree_check(reduced, c.connectivity);
      CHECK(report.pass);
      bool some_nonzero = false;
      for (const auto& row : report.rows) {
        CHECK(row.computed == row.expected);
        if (row.expected > 0) some_nonzero = true;
      }
      CHECK(some_nonzero);
      CHECK(report.rows.size() >= static_cast<std::size_t>(c.connectivity));
    }
  }
}

TEST_CASE("abelian coefficients give the exterior algebra on homology") {
  // HR(X, torus:l) = Lambda[H_{*+1}(X)^{(+)l}]; homology shifts down by one.
  struct Case {
    const char* spec;
    std::vector<int> odd;   // degrees of odd generators, per copy
    std::vector<int> even;  // degrees of even generators, per copy
  };
  const std::vector<Case> cases = {
      {"sphere:2", {1}, {}},
      {"sphere:3", {}, {2}},
      {"cp:2", {1, 3}, {}},
      {"cp:3", {1, 3, 5}, {}},
  };
  for (int l = 1; l <= 2; ++l) {
    const LieAlgebra g = LieAlgebra::builtin("torus:" + std::to_string(l));
    for (const auto& c : cases) {
      CAPTURE(c.spec);
      CAPTURE(l);
      const auto models = model::catalog(c.spec, 10);
      const RepComplex rc(*models.quillen, g);
      std::vector<std::pair<int, gca::Weight>> odd, even;
      for (int copy = 0; copy < l; ++copy) {
        for (int d : c.odd) odd.emplace_back(d, gca::weight_zero());
        for (int d : c.even) even.emplace_back(d, gca::weight_zero());
      }
      const auto expected =
          PoincareSeries::free_commutative(odd, even, 10);
      const auto full = rc.homology_series(10).forget_weights();
      CHECK(full.first_mismatch(expected).empty());
      // The adjoint action is trivial, so invariants agree with the whole.
      const auto inv = rc.invariant_homology_series(10).forget_weights();
      CHECK(inv.first_mismatch(expected).empty());
    }
  }
}

TEST_CASE("weighted and plain series agree after forgetting weights") {
  const auto models = model::catalog("cp:2", 12);
  const RepComplex rc(*models.quillen, LieAlgebra::builtin("sl2"));
  CHECK(rc.weighted());
  const auto series = rc.homology_series(8);
  const auto dims = rc.homology_dims(8);
  for (int n = 0; n <= 8; ++n)
    CHECK(series.forget_weights().z_coefficient(n) ==
          Rat(static_cast<long>(dims[static_cast<std::size_t>(n)])));
}
