#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include "rephom/catalog.hpp"
#include "rephom/errors.hpp"
#include "rephom/quillen_model.hpp"
#include "rephom/sullivan_model.hpp"

using namespace rephom;
using model::QuillenModel;
using model::SpaceModels;
using model::SullivanModel;

TEST_CASE("catalog samples validate") {
  for (const auto& spec : model::catalog_samples()) {
    CAPTURE(spec);
    const SpaceModels m = model::catalog(spec, 10);
    if (m.quillen) m.quillen->validate();
    if (m.sullivan) m.sullivan->validate();
    CHECK((m.quillen || m.sullivan));
  }
}

TEST_CASE("sphere models have the expected generators") {
  const SpaceModels odd = model::catalog("sphere:3", 10);
  REQUIRE(odd.quillen);
  CHECK(odd.quillen->generator_count() == 1);
  CHECK(odd.quillen->degree(0) == 2);
  CHECK(odd.quillen->differential(0).empty());
  CHECK(!odd.quillen_validity);
  REQUIRE(odd.sullivan);
  CHECK(odd.sullivan->generator_count() == 1);
  CHECK(odd.sullivan->algebra().generator(0).degree == 3);

  // An even sphere is a length-1 truncation: one odd generator, differential
  // zero (the Whitehead square lives in the free Lie algebra, not the model).
  const SpaceModels even = model::catalog("sphere:4", 10);
  REQUIRE(even.quillen);
  CHECK(even.quillen->generator_count() == 1);
  CHECK(even.quillen->degree(0) == 3);
  CHECK(even.quillen->differential(0).empty());
  REQUIRE(even.sullivan);
  CHECK(even.sullivan->generator_count() == 2);

  // dv2 = [v1, v1]/2 on the length-2 truncation has normal form v1 v1.
  const SpaceModels cp2 = model::catalog("cp:2", 10);
  const auto nf = model::tensor_normal_form(cp2.quillen->differential(1),
                                            cp2.quillen->degrees());
  REQUIRE(nf.size() == 1);
  CHECK(nf.begin()->first == std::vector<int>{0, 0});
  CHECK(nf.begin()->second == Rat(1));
}

TEST_CASE("projective space models follow the bracket pattern") {
  const SpaceModels cp3 = model::catalog("cp:3", 20);
  REQUIRE(cp3.quillen);
  const QuillenModel& q = *cp3.quillen;
  REQUIRE(q.generator_count() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(q.degree(i) == 2 * (i + 1) - 1);
    CHECK(q.weight(i) == i + 1);
  }
  q.validate();
  // dv3 = [v1, v2]: normal form v1 v2 - sign v2 v1 with degrees 1, 3.
  const auto nf = model::tensor_normal_form(q.differential(2), q.degrees());
  CHECK(nf.size() == 2);
  CHECK(nf.at({0, 1}) == Rat(1));
  // [v1,v2] = v1 v2 - (-1)^{1*3} v2 v1 = v1 v2 + v2 v1.
  CHECK(nf.at({1, 0}) == Rat(1));

  const SpaceModels hp2 = model::catalog("hp:2", 20);
  REQUIRE(hp2.quillen);
  CHECK(hp2.quillen->degree(0) == 3);
  CHECK(hp2.quillen->degree(1) == 7);
  const SpaceModels op2 = model::catalog("op2", 20);
  REQUIRE(op2.quillen);
  CHECK(op2.quillen->degree(0) == 7);
  CHECK(op2.quillen->degree(1) == 15);
}

TEST_CASE("sullivan models carry the declared weights") {
  // ds = z^3 for the length-2 truncated polynomial algebra; weights 1 and 3.
  const SpaceModels cp2 = model::catalog("cp:2", 20);
  REQUIRE(cp2.sullivan);
  const SullivanModel& a = *cp2.sullivan;
  REQUIRE(a.generator_count() == 2);
  const int z = a.generator_id("z");
  const int s = a.generator_id("s");
  CHECK(a.algebra().generator(z).degree == 2);
  CHECK(a.algebra().generator(s).degree == 5);
  CHECK(a.algebra().generator(z).weight == gca::Weight{1, 0});
  CHECK(a.algebra().generator(s).weight == gca::Weight{3, 0});
  // ds = z^3.
  const gca::Element ds = a.diff().values[static_cast<std::size_t>(s)];
  REQUIRE(ds.terms.size() == 1);
  CHECK(a.algebra().monomial_str(ds.terms.begin()->first) == "z^3");
  CHECK(a.algebra().element_str(a.diff().values[static_cast<std::size_t>(z)]) ==
        "0");
  a.validate();
}

TEST_CASE("product spaces use rank-2 weights") {
  const SpaceModels kx = model::catalog("kzxs:2:3", 12);
  CHECK(!kx.quillen);
  REQUIRE(kx.sullivan);
  const SullivanModel& a = *kx.sullivan;
  REQUIRE(a.generator_count() == 2);
  CHECK(a.weight_rank() == 2);
  const int z = a.generator_id("z");
  const int s = a.generator_id("s");
  CHECK(a.algebra().generator(z).degree == 2);
  CHECK(a.algebra().generator(s).degree == 3);
  CHECK(a.algebra().generator(z).weight == gca::Weight{1, 0});
  CHECK(a.algebra().generator(s).weight == gca::Weight{0, 1});
  CHECK(a.algebra().element_str(a.diff().values[0]) == "0");
  CHECK(a.algebra().element_str(a.diff().values[1]) == "0");
}

TEST_CASE("truncated models advertise their validity cap") {
  const SpaceModels kz4 = model::catalog("kz:4", 9);
  REQUIRE(kz4.quillen);
  REQUIRE(kz4.quillen_validity);
  CHECK(*kz4.quillen_validity >= 9);
  kz4.quillen->validate();
  // The odd case needs no truncation.
  const SpaceModels kz3 = model::catalog("kz:3", 9);
  REQUIRE(kz3.quillen);
  CHECK(!kz3.quillen_validity);
}

TEST_CASE("catalog rejects malformed specs") {
  CHECK_THROWS_AS(model::catalog("sphere:1", 10), InputError);
  CHECK_THROWS_AS(model::catalog("cp:0", 10), InputError);
  CHECK_THROWS_AS(model::catalog("line", 10), InputError);
  CHECK_THROWS_AS(model::catalog("kzxs:3:3", 10), InputError);
  CHECK_THROWS_AS(model::catalog("kzxs:2:4", 10), InputError);
}

TEST_CASE("quillen JSON round trip") {
  const SpaceModels cp3 = model::catalog("cp:3", 20);
  const QuillenModel& q = *cp3.quillen;
  const QuillenModel back = QuillenModel::from_json(q.to_json());
  back.validate();
  REQUIRE(back.generator_count() == q.generator_count());
  for (int i = 0; i < q.generator_count(); ++i) {
    CHECK(back.label(i) == q.label(i));
    CHECK(back.degree(i) == q.degree(i));
    const auto a = model::tensor_normal_form(back.differential(i), back.degrees());
    const auto b = model::tensor_normal_form(q.differential(i), q.degrees());
    CHECK(a == b);
  }
}

TEST_CASE("sullivan JSON round trip") {
  const SpaceModels cp2 = model::catalog("cp:2", 20);
  const SullivanModel back = SullivanModel::from_json(cp2.sullivan->to_json());
  back.validate();
  CHECK(back.generator_count() == 2);
  const int s = back.generator_id("s");
  CHECK(back.algebra().element_str(
            back.diff().values[static_cast<std::size_t>(s)]) == "z^3");
}

TEST_CASE("validation pinpoints a broken differential") {
  QuillenModel bad("bad");
  const int a = bad.add_generator("a", 1);
  const int b = bad.add_generator("b", 3);
  (void)a;
  // db = a has degree 1, but a degree -1 differential needs degree 2 there.
  bad.set_differential(b, model::LieExpr::generator(0));
  CHECK_THROWS_WITH_AS(bad.validate(),
                       doctest::Contains("b"), MathError);

  // Degree-correct but d^2 != 0: db = [a, a] forces d[a, a] = 0, so make
  // da = c with dc chosen inconsistently.
  QuillenModel sq("square");
  sq.add_generator("u", 2);
  sq.add_generator("v", 3);
  sq.set_differential("v", model::LieExpr::generator(sq.generator_id("u")));
  sq.add_generator("w", 4);
  sq.set_differential("w", model::LieExpr::generator(sq.generator_id("v")));
  CHECK_THROWS_WITH_AS(sq.validate(), doctest::Contains("w"), MathError);
}

TEST_CASE("unknown generator in a model file is named") {
  nlohmann::json j = model::catalog("cp:2", 10).quillen->to_json();
  j["diff"]["v2"][0]["term"] = nlohmann::json::array({"b", "v1", "ghost"});
  try {
    (void)QuillenModel::from_json(j);
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("ghost") != std::string::npos);
  }
}
