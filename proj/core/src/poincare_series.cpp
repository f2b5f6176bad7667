#include "rephom/poincare_series.hpp"

#include <algorithm>

#include "rephom/errors.hpp"

namespace rephom {

PoincareSeries::PoincareSeries(int max_degree, int weight_rank)
    : max_degree_(max_degree), weight_rank_(weight_rank) {
  if (max_degree < 0) throw InputError("negative series truncation");
  if (weight_rank < 0 || weight_rank > 2)
    throw InputError("weight rank must be 0, 1 or 2");
}

PoincareSeries PoincareSeries::one(int max_degree, int weight_rank) {
  PoincareSeries s(max_degree, weight_rank);
  s.add_term(0, Rat(1));
  return s;
}

void PoincareSeries::add_term(int degree, const Rat& coeff,
                              gca::Weight weight) {
  if (degree < 0 || degree > max_degree_ || is_zero(coeff)) return;
  const Key key = {degree, weight[0], weight[1]};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (is_zero(it->second)) terms_.erase(it);
  }
}

Rat PoincareSeries::coefficient(int degree, gca::Weight weight) const {
  auto it = terms_.find(Key{degree, weight[0], weight[1]});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat PoincareSeries::z_coefficient(int degree) const {
  Rat total(0);
  for (const auto& [k, c] : terms_)
    if (k[0] == degree) total += c;
  return total;
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
  PoincareSeries out(std::min(max_degree_, o.max_degree_),
                     std::max(weight_rank_, o.weight_rank_));
  for (const auto& [k, c] : terms_) out.add_term(k[0], c, {k[1], k[2]});
  for (const auto& [k, c] : o.terms_) out.add_term(k[0], c, {k[1], k[2]});
  return out;
}

PoincareSeries PoincareSeries::operator-(const PoincareSeries& o) const {
  PoincareSeries out(std::min(max_degree_, o.max_degree_),
                     std::max(weight_rank_, o.weight_rank_));
  for (const auto& [k, c] : terms_) out.add_term(k[0], c, {k[1], k[2]});
  for (const auto& [k, c] : o.terms_) out.add_term(k[0], -c, {k[1], k[2]});
  return out;
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
  PoincareSeries out(std::min(max_degree_, o.max_degree_),
                     std::max(weight_rank_, o.weight_rank_));
  for (const auto& [ka, ca] : terms_) {
    if (ka[0] > out.max_degree()) continue;
    for (const auto& [kb, cb] : o.terms_) {
      const int deg = ka[0] + kb[0];
      if (deg > out.max_degree()) continue;
      out.add_term(deg, ca * cb, {ka[1] + kb[1], ka[2] + kb[2]});
    }
  }
  return out;
}

bool PoincareSeries::operator==(const PoincareSeries& o) const {
  return first_mismatch(o).empty();
}

PoincareSeries PoincareSeries::forget_weights() const {
  PoincareSeries out(max_degree_, 0);
  for (const auto& [k, c] : terms_) out.add_term(k[0], c);
  return out;
}

PoincareSeries PoincareSeries::free_commutative(
    const std::vector<std::pair<int, gca::Weight>>& odd_gens,
    const std::vector<std::pair<int, gca::Weight>>& even_gens, int max_degree,
    int weight_rank) {
  PoincareSeries out = one(max_degree, weight_rank);
  for (const auto& [d, w] : odd_gens) {
    if (d < 1) throw InputError("free series generator degree must be >= 1");
    PoincareSeries factor = one(max_degree, weight_rank);
    factor.add_term(d, Rat(1), w);
    out = out * factor;
  }
  for (const auto& [d, w] : even_gens) {
    if (d < 1) throw InputError("free series generator degree must be >= 1");
    PoincareSeries factor(max_degree, weight_rank);
    for (int k = 0; d * k <= max_degree; ++k)
      factor.add_term(d * k, Rat(1), {w[0] * k, w[1] * k});
    out = out * factor;
  }
  return out;
}

std::string PoincareSeries::first_mismatch(const PoincareSeries& o) const {
  const int bound = std::min(max_degree_, o.max_degree_);
  std::map<Key, Rat> merged;
  for (const auto& [k, c] : terms_)
    if (k[0] <= bound) merged[k] += c;
  for (const auto& [k, c] : o.terms_)
    if (k[0] <= bound) merged[k] -= c;
  for (const auto& [k, c] : merged) {
    if (is_zero(c)) continue;
    return "z^" + std::to_string(k[0]) + " q^" + std::to_string(k[1]) +
           " t^" + std::to_string(k[2]) + ": " +
           rat_to_string(coefficient(k[0], {k[1], k[2]})) + " vs " +
           rat_to_string(o.coefficient(k[0], {k[1], k[2]}));
  }
  return "";
}

namespace {

void append_power(std::string& s, const std::string& var, int exp) {
  if (exp == 0) return;
  if (!s.empty()) s += "*";
  s += var;
  if (exp != 1) s += "^" + std::to_string(exp);
}

}  // namespace

std::string PoincareSeries::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    std::string mono;
    append_power(mono, "q", k[1]);
    append_power(mono, "t", k[2]);
    append_power(mono, "z", k[0]);
    std::string cs = rat_to_string(c);
    std::string piece;
    if (mono.empty())
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else if (cs == "-1")
      piece = "-" + mono;
    else
      piece = cs + "*" + mono;
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace rephom
