#include "rephom/gc_algebra.hpp"

#include <algorithm>
#include <limits>

#include "rephom/errors.hpp"

namespace rephom::gca {

Element& Element::operator+=(const Element& o) {
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, c);
    } else {
      it->second += c;
      if (rephom::is_zero(it->second)) terms.erase(it);
    }
  }
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [m, c] : o.terms) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms.emplace(m, -c);
    } else {
      it->second -= c;
      if (rephom::is_zero(it->second)) terms.erase(it);
    }
  }
  return *this;
}

Element& Element::operator*=(const Rat& c) {
  if (rephom::is_zero(c)) {
    terms.clear();
    return *this;
  }
  for (auto& [m, v] : terms) v *= c;
  return *this;
}

int FreeGcAlgebra::add_generator(std::string label, int degree, Weight weight,
                                 int marker) {
  if (degree == 0)
    throw InputError("degree-0 generator not supported: " + label);
  if (!gens_.empty() && (gens_.front().degree > 0) != (degree > 0))
    throw InputError("mixed degree signs in one algebra: " + label);
  gens_.push_back(GcGenerator{std::move(label), degree, weight, marker});
  return static_cast<int>(gens_.size()) - 1;
}

int FreeGcAlgebra::degree(const Monomial& m) const {
  int d = 0;
  for (const auto& [g, e] : m.powers) d += gens_[g].degree * e;
  return d;
}

Weight FreeGcAlgebra::weight(const Monomial& m) const {
  Weight w = weight_zero();
  for (const auto& [g, e] : m.powers) {
    w[0] += gens_[g].weight[0] * e;
    w[1] += gens_[g].weight[1] * e;
  }
  return w;
}

int FreeGcAlgebra::marker(const Monomial& m) const {
  int total = 0;
  for (const auto& [g, e] : m.powers) total += gens_[g].marker * e;
  return total;
}

Element FreeGcAlgebra::unit() const {
  Element e;
  e.terms.emplace(Monomial{}, Rat(1));
  return e;
}

Element FreeGcAlgebra::gen_element(int id) const {
  Element e;
  Monomial m;
  m.powers.emplace_back(id, 1);
  e.terms.emplace(std::move(m), Rat(1));
  return e;
}

Element FreeGcAlgebra::scale(const Element& e, const Rat& c) const {
  Element out = e;
  out *= c;
  return out;
}

std::optional<std::pair<Monomial, int>> FreeGcAlgebra::mul_monomials(
    const Monomial& a, const Monomial& b) const {
  // Koszul sign: each odd letter of b passes the odd letters of a that carry a
  // strictly larger generator id.  A repeated odd generator kills the product.
  std::vector<int> odd_a;
  for (const auto& [g, e] : a.powers)
    if (is_odd(g)) odd_a.push_back(g);

  int inversions = 0;
  for (const auto& [g, e] : b.powers) {
    if (!is_odd(g)) continue;
    if (std::binary_search(odd_a.begin(), odd_a.end(), g)) return std::nullopt;
    inversions += static_cast<int>(
        odd_a.end() -
        std::upper_bound(odd_a.begin(), odd_a.end(), g));
  }

  Monomial out;
  out.powers.reserve(a.powers.size() + b.powers.size());
  std::size_t i = 0, j = 0;
  while (i < a.powers.size() || j < b.powers.size()) {
    if (j >= b.powers.size() ||
        (i < a.powers.size() && a.powers[i].first < b.powers[j].first)) {
      out.powers.push_back(a.powers[i++]);
    } else if (i >= a.powers.size() ||
               b.powers[j].first < a.powers[i].first) {
      out.powers.push_back(b.powers[j++]);
    } else {
      out.powers.emplace_back(a.powers[i].first,
                              a.powers[i].second + b.powers[j].second);
      ++i;
      ++j;
    }
  }
  return std::make_pair(std::move(out), (inversions & 1) ? -1 : 1);
}

Element FreeGcAlgebra::mul(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto prod = mul_monomials(ma, mb);
      if (!prod) continue;
      Rat coeff = ca * cb;
      if (prod->second < 0) coeff = -coeff;
      auto it = out.terms.find(prod->first);
      if (it == out.terms.end()) {
        out.terms.emplace(std::move(prod->first), coeff);
      } else {
        it->second += coeff;
        if (is_zero(it->second)) out.terms.erase(it);
      }
    }
  return out;
}

Element FreeGcAlgebra::apply(const Derivation& d, const Monomial& m) const {
  const int parity = d.degree_shift & 1;
  Element out;
  int prefix = 0;  // degree sum of letters before the current generator
  const int total = degree(m);
  for (std::size_t i = 0; i < m.powers.size(); ++i) {
    const auto [g, e] = m.powers[i];
    const Element& value = d.values[g];
    const int block = gens_[g].degree * e;
    if (!value.is_zero()) {
      const int suffix = total - prefix - block;
      // D(x1..xk): the value of D on one copy of g is moved to the right end
      // past the suffix; even generators contribute the exponent as a factor.
      int sign_exp = parity * prefix + (gens_[g].degree + parity) * suffix;
      Monomial rest = m;
      if (rest.powers[i].second == 1)
        rest.powers.erase(rest.powers.begin() + static_cast<long>(i));
      else
        rest.powers[i].second -= 1;
      Element rest_el;
      rest_el.terms.emplace(std::move(rest), Rat(e));
      Element term = mul(rest_el, value);
      if (sign_exp & 1) term *= Rat(-1);
      out += term;
    }
    prefix += block;
  }
  return out;
}

Element FreeGcAlgebra::apply(const Derivation& d, const Element& e) const {
  Element out;
  for (const auto& [m, c] : e.terms) {
    Element t = apply(d, m);
    t *= c;
    out += t;
  }
  return out;
}

namespace {

struct DegreeEnumState {
  const FreeGcAlgebra* alg;
  int budget_sign;  // +1 for positive-degree algebras, -1 for negative
  std::optional<Weight> exact_weight;
  std::optional<Weight> weight_cap;
  std::optional<int> exact_marker;
  bool prune_weight;  // all generator weights componentwise >= 0
  std::vector<Monomial>* out;
  Monomial current;
};

void enumerate_degree(DegreeEnumState& st, std::size_t idx, int budget,
                      Weight w, int marker) {
  if (budget == 0 || idx == st.alg->generator_count()) {
    if (budget != 0) return;
    if (st.exact_weight && w != *st.exact_weight) return;
    if (st.exact_marker && marker != *st.exact_marker) return;
    st.out->push_back(st.current);
    return;
  }
  const auto& g = st.alg->generator(static_cast<int>(idx));
  const int step = g.degree * st.budget_sign;  // positive
  int max_exp = budget / step;
  if (st.alg->is_odd(static_cast<int>(idx))) max_exp = std::min(max_exp, 1);
  for (int e = 0; e <= max_exp; ++e) {
    Weight nw = {w[0] + g.weight[0] * e, w[1] + g.weight[1] * e};
    if (st.prune_weight) {
      if (st.weight_cap && !weight_le(nw, *st.weight_cap)) break;
      if (st.exact_weight && !weight_le(nw, *st.exact_weight)) break;
    }
    const int nmarker = marker + g.marker * e;
    if (st.exact_marker && g.marker > 0 && nmarker > *st.exact_marker) break;
    if (e > 0) st.current.powers.emplace_back(static_cast<int>(idx), e);
    enumerate_degree(st, idx + 1, budget - step * e, nw, nmarker);
    if (e > 0) st.current.powers.pop_back();
  }
}

}  // namespace

std::vector<Monomial> FreeGcAlgebra::monomials_of_degree(
    int degree, std::optional<Weight> exact_weight,
    std::optional<Weight> weight_cap, std::optional<int> exact_marker) const {
  std::vector<Monomial> out;
  if (degree == 0) {
    bool ok = true;
    if (exact_weight && *exact_weight != weight_zero()) ok = false;
    if (exact_marker && *exact_marker != 0) ok = false;
    if (ok) out.push_back(Monomial{});
    return out;
  }
  if (gens_.empty()) return out;
  const int sign = gens_.front().degree > 0 ? 1 : -1;
  if (degree * sign < 0) return out;

  bool prune_weight = true;
  for (const auto& g : gens_)
    if (g.weight[0] < 0 || g.weight[1] < 0) prune_weight = false;

  DegreeEnumState st{this,          sign,       exact_weight, weight_cap,
                     exact_marker,  prune_weight, &out,       Monomial{}};
  enumerate_degree(st, 0, degree * sign, weight_zero(), 0);
  return out;
}

namespace {

void enumerate_weight(const FreeGcAlgebra& alg, std::size_t idx,
                      const Weight& remaining, Monomial& current,
                      std::vector<Monomial>& out) {
  if (remaining == weight_zero()) {
    out.push_back(current);
    if (idx == alg.generator_count()) return;
    // fall through: later generators could still carry zero weight, but
    // positive-weight generators cannot, so only the empty extension counts.
    return;
  }
  if (idx == alg.generator_count()) return;
  const auto& g = alg.generator(static_cast<int>(idx));
  int max_exp = std::numeric_limits<int>::max();
  for (int k = 0; k < 2; ++k) {
    if (g.weight[k] > 0)
      max_exp = std::min(max_exp, remaining[k] / g.weight[k]);
    else if (remaining[k] < 0)
      return;
  }
  if (alg.is_odd(static_cast<int>(idx))) max_exp = std::min(max_exp, 1);
  for (int e = 0; e <= max_exp; ++e) {
    Weight rem = {remaining[0] - g.weight[0] * e,
                  remaining[1] - g.weight[1] * e};
    if (rem[0] < 0 || rem[1] < 0) break;
    if (e > 0) current.powers.emplace_back(static_cast<int>(idx), e);
    enumerate_weight(alg, idx + 1, rem, current, out);
    if (e > 0) current.powers.pop_back();
  }
}

}  // namespace

std::vector<Monomial> FreeGcAlgebra::monomials_of_weight(
    const Weight& w) const {
  for (const auto& g : gens_)
    if (weight_total(g.weight) <= 0 || g.weight[0] < 0 || g.weight[1] < 0)
      throw InputError("weight enumeration needs positive generator weights");
  std::vector<Monomial> out;
  if (w == weight_zero()) {
    out.push_back(Monomial{});
    return out;
  }
  Monomial current;
  enumerate_weight(*this, 0, w, current, out);
  return out;
}

std::string FreeGcAlgebra::monomial_str(const Monomial& m) const {
  if (m.is_unit()) return "1";
  std::string s;
  for (const auto& [g, e] : m.powers) {
    if (!s.empty()) s += "*";
    s += gens_[g].label;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string FreeGcAlgebra::element_str(const Element& e) const {
  if (e.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : e.terms) {
    std::string cs = rat_to_string(c);
    if (s.empty()) {
      s = (cs == "1" && !m.is_unit()) ? ""
          : (cs == "-1" && !m.is_unit()) ? "-"
                                         : cs + (m.is_unit() ? "" : "*");
    } else {
      if (sgn(c) >= 0) {
        s += " + ";
        s += (cs == "1" && !m.is_unit()) ? "" : cs + (m.is_unit() ? "" : "*");
      } else {
        s += " - ";
        std::string abs = rat_to_string(-c);
        s += (abs == "1" && !m.is_unit()) ? "" : abs + (m.is_unit() ? "" : "*");
      }
    }
    if (!m.is_unit()) s += monomial_str(m);
  }
  return s;
}

}  // namespace rephom::gca
