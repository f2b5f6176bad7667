#include "rephom/invariant_polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "rephom/errors.hpp"

namespace rephom::lie {

namespace {

std::size_t comb(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
  return out;
}

using Matrix = std::vector<std::vector<Rat>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(b[k][j])) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

Rat mat_trace(const Matrix& m) {
  Rat t(0);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

// Iterates sorted index tuples of length k over [0, n).
bool next_sorted_tuple(std::vector<int>& t, int n) {
  const int k = static_cast<int>(t.size());
  for (int p = k - 1; p >= 0; --p) {
    if (t[p] + 1 < n) {
      const int v = t[p] + 1;
      for (int q = p; q < k; ++q) t[q] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

InvariantPolynomial::InvariantPolynomial(std::string name, int g_dim,
                                         int degree)
    : name_(std::move(name)), g_dim_(g_dim), degree_(degree) {
  if (degree < 1) throw InputError("invariant polynomial degree must be >= 1");
  values_.assign(comb(static_cast<std::size_t>(g_dim + degree - 1),
                      static_cast<std::size_t>(degree)),
                 Rat(0));
}

std::size_t InvariantPolynomial::multiset_rank(
    std::span<const int> sorted) const {
  // Lexicographic rank over sorted tuples: count completions skipped when the
  // entry at position p rises from `prev` to sorted[p].
  const std::size_t k = sorted.size();
  std::size_t rank = 0;
  int prev = 0;
  for (std::size_t p = 0; p < k; ++p) {
    for (int c = prev; c < sorted[p]; ++c)
      rank += comb(static_cast<std::size_t>(g_dim_ - c) + k - p - 2, k - p - 1);
    prev = sorted[p];
  }
  return rank;
}

const Rat& InvariantPolynomial::value_sorted(std::span<const int> sorted) const {
  return values_[multiset_rank(sorted)];
}

Rat InvariantPolynomial::value(std::vector<int> tuple) const {
  std::sort(tuple.begin(), tuple.end());
  return values_[multiset_rank(tuple)];
}

void InvariantPolynomial::set_value_sorted(std::span<const int> sorted, Rat v) {
  values_[multiset_rank(sorted)] = std::move(v);
}

bool InvariantPolynomial::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](const Rat& v) { return rephom::is_zero(v); });
}

InvariantPolynomial InvariantPolynomial::power_trace(const LieAlgebra& g,
                                                     int k) {
  InvariantPolynomial p("tr^" + std::to_string(k), g.dim, k);
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  do {
    // Average over all k! position permutations; repeated indices then carry
    // the correct multiplicity automatically.
    std::vector<int> pos(static_cast<std::size_t>(k));
    std::iota(pos.begin(), pos.end(), 0);
    Rat total(0);
    do {
      Matrix prod = g.defining_rep[static_cast<std::size_t>(tuple[pos[0]])];
      for (std::size_t i = 1; i < pos.size(); ++i)
        prod = mat_mul(prod, g.defining_rep[static_cast<std::size_t>(
                                 tuple[pos[i]])]);
      total += mat_trace(prod);
    } while (std::next_permutation(pos.begin(), pos.end()));
    Rat fact(1);
    for (int i = 2; i <= k; ++i) fact *= i;
    p.set_value_sorted(tuple, total / fact);
  } while (next_sorted_tuple(tuple, g.dim));
  return p;
}

InvariantPolynomial InvariantPolynomial::coordinate(const LieAlgebra& g,
                                                    int i) {
  if (!g.abelian())
    throw InputError("coordinate functionals are invariant only on tori");
  InvariantPolynomial p(g.basis[static_cast<std::size_t>(i)] + "^*", g.dim, 1);
  const int idx[1] = {i};
  p.set_value_sorted(idx, Rat(1));
  return p;
}

InvariantPolynomial InvariantPolynomial::pfaffian(const LieAlgebra& g) {
  if (g.name != "so4") throw InputError("pfaffian is provided for so4 only");
  // Basis order L12, L13, L14, L23, L24, L34; the polarization of
  // Pf(x) = x12 x34 - x13 x24 + x14 x23.
  InvariantPolynomial p("pf", g.dim, 2);
  auto set_pair = [&p](int a, int b, int num) {
    const int idx[2] = {a, b};
    p.set_value_sorted(idx, Rat(num) / 2);
  };
  set_pair(0, 5, 1);
  set_pair(1, 4, -1);
  set_pair(2, 3, 1);
  return p;
}

std::vector<InvariantPolynomial> InvariantPolynomial::standard_generators(
    const LieAlgebra& g) {
  std::vector<InvariantPolynomial> out;
  if (g.abelian()) {
    for (int i = 0; i < g.dim; ++i) out.push_back(coordinate(g, i));
    return out;
  }
  int degree2_seen = 0;
  for (int m : g.exponents) {
    const int k = m + 1;
    if (k == 2) ++degree2_seen;
    if (k == 2 && degree2_seen == 2 && g.name == "so4")
      out.push_back(pfaffian(g));
    else
      out.push_back(power_trace(g, k));
  }
  return out;
}

void InvariantPolynomial::check_ad_invariance(const LieAlgebra& g) const {
  const int k = degree_;
  std::vector<int> tuple(static_cast<std::size_t>(k), 0);
  do {
    for (int y = 0; y < g.dim; ++y) {
      Rat total(0);
      for (int s = 0; s < k; ++s)
        for (const auto& [l, c] : g.bracket(y, tuple[static_cast<std::size_t>(s)])) {
          std::vector<int> modified = tuple;
          modified[static_cast<std::size_t>(s)] = l;
          total += c * value(std::move(modified));
        }
      if (!rephom::is_zero(total))
        throw MathError("invariant polynomial " + name_ +
                        " is not ad-invariant");
    }
  } while (next_sorted_tuple(tuple, g.dim));
}

}  // namespace rephom::lie
