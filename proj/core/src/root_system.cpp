#include "rephom/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "rephom/errors.hpp"

namespace rephom::macd {

LatticeVector apply_weyl(const WeylMatrix& w, const LatticeVector& v) {
  const std::size_t n = v.size();
  LatticeVector out(n, 0);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col)
      out[row] += w[row][col] * v[col];
  return out;
}

namespace {

WeylMatrix mat_mul(const WeylMatrix& a, const WeylMatrix& b) {
  const std::size_t n = a.size();
  WeylMatrix out(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

std::vector<WeylMatrix> generate_weyl(const std::vector<WeylMatrix>& gens,
                                      int rank) {
  WeylMatrix id(static_cast<std::size_t>(rank),
                std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int i = 0; i < rank; ++i)
    id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  std::set<WeylMatrix> seen{id};
  std::vector<WeylMatrix> frontier{id};
  while (!frontier.empty()) {
    std::vector<WeylMatrix> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        WeylMatrix ws = mat_mul(w, s);
        if (seen.insert(ws).second) next.push_back(std::move(ws));
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

RootSystem build(std::string type_rank, std::vector<std::vector<int>> cartan,
                 std::vector<LatticeVector> positive,
                 std::vector<int> exponents) {
  RootSystem rs;
  rs.type_rank = std::move(type_rank);
  rs.rank = static_cast<int>(cartan.size());
  rs.cartan = std::move(cartan);
  rs.positive_roots = std::move(positive);
  rs.exponents = std::move(exponents);
  std::vector<WeylMatrix> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(rs.simple_reflection(i));
  rs.weyl = generate_weyl(gens, rs.rank);
  rs.validate();
  return rs;
}

}  // namespace

WeylMatrix RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank) throw InputError("simple reflection index out of range");
  WeylMatrix m(static_cast<std::size_t>(rank),
               std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (int j = 0; j < rank; ++j)
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
  for (int j = 0; j < rank; ++j)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
        cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

std::vector<LatticeVector> RootSystem::roots() const {
  std::vector<LatticeVector> all = positive_roots;
  for (const auto& r : positive_roots) {
    LatticeVector neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), std::negate<int>());
    all.push_back(std::move(neg));
  }
  return all;
}

void RootSystem::validate() const {
  if (rank <= 0 || cartan.size() != static_cast<std::size_t>(rank))
    throw MathError("root system " + type_rank + ": bad rank");
  for (int i = 0; i < rank; ++i) {
    if (cartan[static_cast<std::size_t>(i)].size() !=
        static_cast<std::size_t>(rank))
      throw MathError("root system " + type_rank + ": Cartan matrix not square");
    for (int j = 0; j < rank; ++j) {
      const int a = cartan[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (i == j ? a != 2 : a > 0)
        throw MathError("root system " + type_rank + ": Cartan sign pattern");
    }
  }
  const std::vector<LatticeVector> all = roots();
  const std::set<LatticeVector> root_set(all.begin(), all.end());
  if (root_set.size() != all.size())
    throw MathError("root system " + type_rank + ": duplicate roots");
  for (int i = 0; i < rank; ++i) {
    const WeylMatrix s = simple_reflection(i);
    for (const auto& r : all)
      if (root_set.count(apply_weyl(s, r)) == 0)
        throw MathError("root system " + type_rank +
                        ": roots are not reflection-closed");
  }
  if (exponents.size() != static_cast<std::size_t>(rank))
    throw MathError("root system " + type_rank + ": exponent count != rank");
  const long expected_order = std::accumulate(
      exponents.begin(), exponents.end(), 1L,
      [](long acc, int m) { return acc * (m + 1); });
  if (static_cast<long>(weyl.size()) != expected_order)
    throw MathError("root system " + type_rank + ": Weyl order " +
                    std::to_string(weyl.size()) + " != product of (m_i + 1)");
  const int exponent_sum =
      std::accumulate(exponents.begin(), exponents.end(), 0);
  if (positive_roots.size() != static_cast<std::size_t>(exponent_sum))
    throw MathError("root system " + type_rank +
                    ": positive root count != exponent sum");
}

RootSystem RootSystem::builtin(const std::string& type_rank) {
  if (type_rank == "A1")
    return build("A1", {{2}}, {{1}}, {1});
  if (type_rank == "A2")
    return build("A2", {{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}, {1, 1}}, {1, 2});
  if (type_rank == "A3")
    return build("A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}},
                 {{1, 0, 0},
                  {0, 1, 0},
                  {0, 0, 1},
                  {1, 1, 0},
                  {0, 1, 1},
                  {1, 1, 1}},
                 {1, 2, 3});
  if (type_rank == "B2")
    return build("B2", {{2, -1}, {-2, 2}}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
                 {1, 3});
  if (type_rank == "G2")
    return build("G2", {{2, -3}, {-1, 2}},
                 {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}}, {1, 5});
  if (type_rank == "B3")
    return build("B3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}},
                 {{1, 0, 0},
                  {0, 1, 0},
                  {0, 0, 1},
                  {1, 1, 0},
                  {0, 1, 1},
                  {1, 1, 1},
                  {0, 1, 2},
                  {1, 1, 2},
                  {1, 2, 2}},
                 {1, 3, 5});
  throw InputError("unknown root system type: " + type_rank +
                   " (expected one of A1, A2, A3, B2, G2, B3)");
}

std::vector<std::string> RootSystem::builtin_names() {
  return {"A1", "A2", "A3", "B2", "G2", "B3"};
}

}  // namespace rephom::macd
