#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "rephom/errors.hpp"
#include "rephom/lattice_series.hpp"
#include "rephom/macdonald.hpp"
#include "rephom/root_system.hpp"

using namespace rephom;
using macd::LatticeSeries;
using macd::LatticeVector;
using macd::QtSeries;
using macd::RootSystem;

namespace {

QtSeries random_qt(std::mt19937& rng, int oq, int ot) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> qe(0, oq - 1);
  std::uniform_int_distribution<int> te(0, ot - 1);
  QtSeries out(oq, ot);
  for (int k = 0; k < 4; ++k) out.add_term(qe(rng), te(rng), Rat(coeff(rng)));
  return out;
}

LatticeSeries random_lattice(std::mt19937& rng, int rank, int oq) {
  std::uniform_int_distribution<int> entry(-1, 1);
  LatticeSeries out(rank, oq, 1);
  for (int k = 0; k < 3; ++k) {
    LatticeVector v(rank);
    for (auto& x : v) x = entry(rng);
    out.add(v, random_qt(rng, oq, 1));
  }
  return out;
}

// Dense independent expansion of prod_{j=0..r} (1-q^j e^a)(1-q^j e^-a) for
// A1, as a map (lattice exponent, q exponent) -> coefficient.
std::map<std::pair<int, int>, long> a1_brute_force(int r) {
  std::map<std::pair<int, int>, long> acc{{{0, 0}, 1}};
  for (int j = 0; j <= r; ++j)
    for (int dir : {1, -1}) {
      std::map<std::pair<int, int>, long> next;
      for (const auto& [key, c] : acc) {
        next[key] += c;
        next[{key.first + dir, key.second + j}] -= c;
      }
      acc = std::move(next);
    }
  return acc;
}

}  // namespace

TEST_CASE("builtin root systems validate") {
  for (const auto& name : RootSystem::builtin_names()) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::builtin(name);
    rs.validate();
    CHECK(rs.roots().size() == 2 * rs.positive_roots.size());
  }
  CHECK(RootSystem::builtin("A1").weyl_order() == 2);
  CHECK(RootSystem::builtin("A2").weyl_order() == 6);
  CHECK(RootSystem::builtin("A3").weyl_order() == 24);
  CHECK(RootSystem::builtin("B2").weyl_order() == 8);
  CHECK(RootSystem::builtin("B3").weyl_order() == 48);
  CHECK(RootSystem::builtin("G2").weyl_order() == 12);
  CHECK_THROWS_AS(RootSystem::builtin("F4"), InputError);
}

TEST_CASE("simple reflections permute the roots") {
  for (const auto& name : {"A2", "B2", "G2"}) {
    const RootSystem rs = RootSystem::builtin(name);
    const auto all = rs.roots();
    for (int i = 0; i < rs.rank; ++i) {
      const auto s = rs.simple_reflection(i);
      for (const auto& alpha : all) {
        const auto image = macd::apply_weyl(s, alpha);
        CHECK(std::find(all.begin(), all.end(), image) != all.end());
      }
      // s_i is an involution.
      for (const auto& alpha : all)
        CHECK(macd::apply_weyl(s, macd::apply_weyl(s, alpha)) == alpha);
    }
  }
}

TEST_CASE("qt series ring axioms") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const QtSeries a = random_qt(rng, 6, 4);
    const QtSeries b = random_qt(rng, 6, 4);
    const QtSeries c = random_qt(rng, 6, 4);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("geometric series inverts its factor") {
  QtSeries x(8, 5);
  x.add_term(1, 0, Rat(1));
  x.add_term(0, 1, Rat(-2));
  const QtSeries g = QtSeries::geometric(x);
  QtSeries one_minus = QtSeries::one(8, 5);
  one_minus -= x;
  CHECK(one_minus * g == QtSeries::one(8, 5));
  // A factor with a constant term has no truncated expansion.
  CHECK_THROWS_AS(QtSeries::geometric(QtSeries::one(3, 3)), InputError);
}

TEST_CASE("truncation drops high powers on entry") {
  QtSeries s(3, 2);
  s.add_term(5, 0, Rat(1));
  s.add_term(0, 7, Rat(1));
  CHECK(s.is_zero());
  s.add_term(2, 1, Rat(4));
  CHECK(s.coefficient(2, 1) == Rat(4));
}

TEST_CASE("lattice series multiplication is a commutative ring") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const LatticeSeries a = random_lattice(rng, 2, 5);
    const LatticeSeries b = random_lattice(rng, 2, 5);
    const LatticeSeries c = random_lattice(rng, 2, 5);
    const LatticeSeries ab = a * b;
    const LatticeSeries ba = b * a;
    CHECK(ab.terms() == ba.terms());
    CHECK(((a * b) * c).terms() == (a * (b * c)).terms());
  }
}

TEST_CASE("weyl image is a ring map") {
  const RootSystem rs = RootSystem::builtin("A2");
  std::mt19937 rng(37);
  const auto w = rs.weyl[3 % rs.weyl.size()];
  const LatticeSeries a = random_lattice(rng, 2, 4);
  const LatticeSeries b = random_lattice(rng, 2, 4);
  CHECK((a.weyl_image(w) * b.weyl_image(w)).terms() ==
        (a * b).weyl_image(w).terms());
}

TEST_CASE("constant terms of tiny products by hand") {
  // (1 - e^a)(1 - e^-a) = 2 - e^a - e^-a: constant term 2.
  LatticeSeries f = LatticeSeries::one(1, 2, 1);
  f.add({1}, QtSeries::monomial(2, 1, 0, 0, Rat(-1)));
  LatticeSeries g = LatticeSeries::one(1, 2, 1);
  g.add({-1}, QtSeries::monomial(2, 1, 0, 0, Rat(-1)));
  const QtSeries ct = (f * g).constant_term();
  CHECK(ct.coefficient(0, 0) == Rat(2));

  // A pure exponential has no constant term.
  LatticeSeries h(1, 2, 1);
  h.add({1}, QtSeries::one(2, 1));
  CHECK(h.constant_term().is_zero());
}

TEST_CASE("raw constant term matches a dense expansion for A1") {
  for (int r = 1; r <= 3; ++r) {
    CAPTURE(r);
    const RootSystem rs = RootSystem::builtin("A1");
    const QtSeries ct = macd::raw_ct_q(rs, r);
    const auto dense = a1_brute_force(r);
    // Compare every q coefficient of the lattice-zero slice.
    for (int qe = 0; qe < ct.order_q(); ++qe) {
      const auto it = dense.find({0, qe});
      const long expect = it == dense.end() ? 0 : it->second;
      CHECK(ct.coefficient(qe, 0) == Rat(expect));
    }
  }
}

TEST_CASE("the full product is Weyl invariant") {
  const RootSystem rs = RootSystem::builtin("A2");
  const int r = 1;
  const int order = 7;
  std::vector<LatticeSeries> factors;
  for (int j = 0; j <= r; ++j)
    for (const auto& alpha : rs.roots()) {
      LatticeSeries f = LatticeSeries::one(rs.rank, order, 1);
      f.add(alpha, QtSeries::monomial(order, 1, j, 0, Rat(-1)));
      factors.push_back(std::move(f));
    }
  const LatticeSeries prod = macd::product(std::move(factors));
  for (int i = 0; i < rs.rank; ++i) {
    const auto image = prod.weyl_image(rs.simple_reflection(i));
    CHECK(image.terms() == prod.terms());
  }
}

TEST_CASE("euler product polynomials for small cases") {
  CHECK(macd::chi_ct_q(RootSystem::builtin("A1"), 1).str() == "1 - q^3");
  CHECK(macd::chi_product_q(RootSystem::builtin("A1"), 1).str() == "1 - q^3");
  // (1-q^4)(1-q^5) and (1-q^3)(1-q^5).
  CHECK(macd::chi_ct_q(RootSystem::builtin("A1"), 2).str() ==
        "1 - q^4 - q^5 + q^9");
  CHECK(macd::chi_ct_q(RootSystem::builtin("A2"), 1).str() ==
        "1 - q^3 - q^5 + q^8");
  // r = 0: empty products on both sides.
  for (const auto& name : {"A1", "A2", "B2", "G2"}) {
    CAPTURE(name);
    const RootSystem rs = RootSystem::builtin(name);
    CHECK(macd::chi_ct_q(rs, 0).str() == "1");
    CHECK(macd::chi_product_q(rs, 0).str() == "1");
  }
}

TEST_CASE("q identity verdicts across the builtin range") {
  struct Case {
    const char* type;
    int r;
  };
  for (const Case c : {Case{"A1", 1}, Case{"A1", 2}, Case{"A1", 3},
                       Case{"A2", 1}, Case{"A2", 2}, Case{"B2", 1},
                       Case{"G2", 1}}) {
    CAPTURE(c.type);
    CAPTURE(c.r);
    const auto report =
        macd::verify_q_identity(RootSystem::builtin(c.type), c.r);
    CHECK(report.pass);
    CHECK(report.first_mismatch.empty());
  }
}

TEST_CASE("qt identity holds to the stated truncation") {
  const auto a1 = macd::verify_qt_identity(RootSystem::builtin("A1"), 5, 5);
  CHECK(a1.pass);
  const auto a2 = macd::verify_qt_identity(RootSystem::builtin("A2"), 4, 4);
  CHECK(a2.pass);
  CHECK_THROWS_AS(macd::verify_qt_identity(RootSystem::builtin("A1"), 1, 5),
                  InputError);
}

TEST_CASE("mismatch reporting names the first differing key") {
  QtSeries a = QtSeries::one(4, 2);
  QtSeries b = QtSeries::one(4, 2);
  b.add_term(2, 1, Rat(5));
  const auto keys = a.mismatches(b);
  REQUIRE(keys.size() == 1);
  CHECK(keys[0] == std::pair<int, int>{2, 1});
  CHECK(a.mismatches(a).empty());
}
