#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "rephom/catalog.hpp"
#include "rephom/drinfeld.hpp"
#include "rephom/errors.hpp"
#include "rephom/hodge.hpp"
#include "rephom/invariant_polynomial.hpp"
#include "rephom/lie_algebra.hpp"
#include "rephom/rep_complex.hpp"

using namespace rephom;
using drinfeld::CurrentWedge;
using drinfeld::SymWord;
using lie::InvariantPolynomial;
using lie::LieAlgebra;

namespace {

int basis_index(const LieAlgebra& g, const std::string& label) {
  for (int i = 0; i < g.dim; ++i)
    if (g.basis[i] == label) return i;
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("spanning trees enumerate bracket shapes by degree") {
  const auto models = model::catalog("cp:2", 12);
  CHECK(drinfeld::spanning_trees(*models.quillen, 1).size() == 1);  // v1
  CHECK(drinfeld::spanning_trees(*models.quillen, 2).size() == 1);  // [v1,v1]
  // Degree 3: v2 and [v1, [v1, v1]].
  CHECK(drinfeld::spanning_trees(*models.quillen, 3).size() == 2);
}

TEST_CASE("trace words are degree-sorted multisets") {
  const auto models = model::catalog("cp:2", 12);
  CHECK(drinfeld::trace_words(*models.quillen, 2, 2).size() == 1);
  // Degree 4 in two factors: 1+3 gives two words, 2+2 one more.
  CHECK(drinfeld::trace_words(*models.quillen, 2, 4).size() == 3);
  for (const auto& w : drinfeld::trace_words(*models.quillen, 2, 5)) {
    REQUIRE(w.factors.size() == 2);
    const auto degrees = models.quillen->degrees();
    const int d0 = model::tree_degree(*w.factors[0].terms().front().second,
                                      degrees);
    const int d1 = model::tree_degree(*w.factors[1].terms().front().second,
                                      degrees);
    CHECK(d0 <= d1);
    CHECK(d0 + d1 == 5);
  }
}

TEST_CASE("quillen trace of the quadratic form on the odd sphere") {
  const auto models = model::catalog("sphere:3", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const rep::RepComplex rc(*models.quillen, g);
  const auto tr2 = InvariantPolynomial::power_trace(g, 2);

  SymWord word;
  word.factors.push_back(model::LieExpr::generator(0));
  word.factors.push_back(model::LieExpr::generator(0));
  const gca::Element image = drinfeld::quillen_trace(tr2, rc, word);

  const int e = basis_index(g, "e");
  const int h = basis_index(g, "h");
  const int f = basis_index(g, "f");
  const auto& alg = rc.algebra();
  // sum_{i,j} tr(x_i x_j) (x_i* u)(x_j* u) = 2 (e u)(f u) + 2 (h u)^2.
  gca::Element expected = alg.mul(alg.gen_element(rc.generator_id(e, 0)),
                                  alg.gen_element(rc.generator_id(f, 0)));
  expected *= Rat(2);
  gca::Element hh = alg.mul(alg.gen_element(rc.generator_id(h, 0)),
                            alg.gen_element(rc.generator_id(h, 0)));
  hh *= Rat(2);
  expected += hh;
  CHECK(image == expected);

  // The image is a cycle and ad-invariant.
  CHECK(alg.apply(rc.diff(), image).is_zero());
  for (int u = 0; u < g.dim; ++u)
    CHECK(alg.apply(rc.ad_action(u), image).is_zero());
}

TEST_CASE("trace images are ad-invariant, and cycles where promised") {
  // Ad-invariance of the image is pure invariant theory of the polynomial and
  // holds for every word.  The cycle property is only guaranteed for cycle
  // words: all words over a model with zero differential, and the words at
  // the lowest generator degree used by the freeness certification.
  struct Case {
    const char* spec;
    int generator_degree;
    bool zero_differential;
  };
  for (const Case c : {Case{"sphere:3", 4, true}, Case{"cp:2", 5, false},
                       Case{"cp:3", 7, false}}) {
    CAPTURE(c.spec);
    const auto models = model::catalog(c.spec, 12);
    const LieAlgebra g = LieAlgebra::builtin("sl2");
    const rep::RepComplex rc(*models.quillen, g);
    const auto tr2 = InvariantPolynomial::power_trace(g, 2);
    const auto& alg = rc.algebra();
    for (int degree = 2; degree <= 6; ++degree) {
      for (const auto& word :
           drinfeld::trace_words(*models.quillen, 2, degree)) {
        const gca::Element image = drinfeld::quillen_trace(tr2, rc, word);
        for (int u = 0; u < g.dim; ++u)
          CHECK(alg.apply(rc.ad_action(u), image).is_zero());
        if (c.zero_differential)
          CHECK(alg.apply(rc.diff(), image).is_zero());
      }
    }
    std::size_t nonzero_cycles = 0;
    for (const auto& word :
         drinfeld::trace_words(*models.quillen, 2, c.generator_degree)) {
      const gca::Element image = drinfeld::quillen_trace(tr2, rc, word);
      if (image.is_zero()) continue;
      CHECK(alg.apply(rc.diff(), image).is_zero());
      ++nonzero_cycles;
    }
    CHECK(nonzero_cycles > 0);
  }
}

TEST_CASE("form-side trace on the odd sphere") {
  const auto models = model::catalog("sphere:3", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const hodge::FormComplex fc(*models.sullivan);
  const auto tr2 = InvariantPolynomial::power_trace(g, 2);
  const int e = basis_index(g, "e");
  const int f = basis_index(g, "f");
  const int z = models.sullivan->generator_id("z");
  const gca::Element z_base = models.sullivan->algebra().gen_element(z);

  CurrentWedge ef;
  ef.factors = {{e, z_base}, {f, z_base}};
  const gca::Element psi = drinfeld::sullivan_psi(tr2, fc, ef);
  // tr(ef) = 1, both suspended degrees even: psi = class of z dz.
  const auto& F = fc.forms();
  gca::Element zdz = F.mul(F.gen_element(fc.plain_gen(z)),
                           F.gen_element(fc.diff_gen(z)));
  const gca::Element expected = fc.reduce_mod_exact(zdz, 1);
  CHECK(!expected.is_zero());
  CHECK(psi == expected);

  // tr(e e) = 0 kills the wedge.
  CurrentWedge ee;
  ee.factors = {{e, z_base}, {e, z_base}};
  CHECK(drinfeld::sullivan_psi(tr2, fc, ee).is_zero());
}

TEST_CASE("freeness verdicts for the catalog cases") {
  const LieAlgebra sl2 = LieAlgebra::builtin("sl2");
  for (const auto& spec : {"sphere:3", "cp:2"}) {
    CAPTURE(spec);
    const auto report = drinfeld::drinfeld_freeness_check(spec, sl2, 10);
    CHECK(report.pass);
    CHECK(!report.generator_degrees.empty());
    CHECK(std::is_sorted(report.generator_degrees.begin(),
                         report.generator_degrees.end()));
    bool series_row = false;
    for (const auto& row : report.checks) {
      CHECK(row.ok);
      if (row.item == "series") series_row = true;
    }
    CHECK(series_row);
  }
  // Sullivan-only truncation goes through the current-algebra route.
  const auto case2 = drinfeld::drinfeld_freeness_check("kzxs:2:3", sl2, 6);
  CHECK(case2.pass);
}

TEST_CASE("trace rejects mismatched shapes") {
  const auto models = model::catalog("sphere:3", 12);
  const LieAlgebra g = LieAlgebra::builtin("sl2");
  const rep::RepComplex rc(*models.quillen, g);
  const auto tr3 = InvariantPolynomial::power_trace(g, 3);
  SymWord word;
  word.factors.push_back(model::LieExpr::generator(0));
  word.factors.push_back(model::LieExpr::generator(0));
  CHECK_THROWS_AS(drinfeld::quillen_trace(tr3, rc, word), InputError);
}
