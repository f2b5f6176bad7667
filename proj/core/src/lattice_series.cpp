#include "rephom/lattice_series.hpp"

#include <algorithm>
#include <sstream>

#include "rephom/errors.hpp"
#include "rephom/parallel.hpp"

namespace rephom::macd {

QtSeries::QtSeries(int order_q, int order_t)
    : order_q_(order_q), order_t_(order_t) {
  if (order_q < 1 || order_t < 1)
    throw InputError("truncation orders must be at least 1");
}

QtSeries QtSeries::one(int order_q, int order_t) {
  QtSeries s(order_q, order_t);
  s.add_term(0, 0, Rat(1));
  return s;
}

QtSeries QtSeries::monomial(int order_q, int order_t, int q_exp, int t_exp,
                            const Rat& coeff) {
  QtSeries s(order_q, order_t);
  s.add_term(q_exp, t_exp, coeff);
  return s;
}

void QtSeries::add_term(int q_exp, int t_exp, const Rat& coeff) {
  if (q_exp < 0 || t_exp < 0)
    throw InputError("negative exponent in (q,t)-series");
  if (q_exp >= order_q_ || t_exp >= order_t_ || rephom::is_zero(coeff)) return;
  const auto key = std::make_pair(q_exp, t_exp);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, coeff);
    return;
  }
  it->second += coeff;
  if (rephom::is_zero(it->second)) terms_.erase(it);
}

Rat QtSeries::coefficient(int q_exp, int t_exp) const {
  auto it = terms_.find(std::make_pair(q_exp, t_exp));
  return it == terms_.end() ? Rat(0) : it->second;
}

QtSeries& QtSeries::operator+=(const QtSeries& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

QtSeries& QtSeries::operator-=(const QtSeries& o) {
  for (const auto& [key, c] : o.terms_)
    add_term(key.first, key.second, Rat(-c));
  return *this;
}

QtSeries QtSeries::operator+(const QtSeries& o) const {
  QtSeries out = *this;
  out += o;
  return out;
}

QtSeries QtSeries::operator-(const QtSeries& o) const {
  QtSeries out = *this;
  out -= o;
  return out;
}

QtSeries QtSeries::operator*(const QtSeries& o) const {
  QtSeries out(order_q_, order_t_);
  for (const auto& [ka, ca] : terms_) {
    if (ka.first >= order_q_ || ka.second >= order_t_) continue;
    for (const auto& [kb, cb] : o.terms_) {
      const int qe = ka.first + kb.first;
      const int te = ka.second + kb.second;
      if (qe >= order_q_ || te >= order_t_) continue;
      out.add_term(qe, te, Rat(ca * cb));
    }
  }
  return out;
}

QtSeries QtSeries::scale(const Rat& c) const {
  QtSeries out(order_q_, order_t_);
  if (rephom::is_zero(c)) return out;
  for (const auto& [key, v] : terms_) out.terms_.emplace(key, Rat(v * c));
  return out;
}

QtSeries QtSeries::geometric(const QtSeries& x) {
  if (!rephom::is_zero(x.coefficient(0, 0)))
    throw InputError("geometric series needs a zero constant term");
  QtSeries out = QtSeries::one(x.order_q(), x.order_t());
  QtSeries power = out;
  // x^k vanishes once k exceeds both truncation orders.
  for (int k = 1; k < x.order_q() + x.order_t(); ++k) {
    power = power * x;
    if (power.is_zero()) break;
    out += power;
  }
  return out;
}

std::vector<std::pair<int, int>> QtSeries::mismatches(const QtSeries& o) const {
  std::vector<std::pair<int, int>> out;
  for (const auto& [key, c] : terms_)
    if (o.coefficient(key.first, key.second) != c) out.push_back(key);
  for (const auto& [key, c] : o.terms_)
    if (terms_.find(key) == terms_.end()) out.push_back(key);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string QtSeries::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    std::string body;
    if (key.first > 0)
      body += "q" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) {
      if (!body.empty()) body += "*";
      body += "t" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    Rat coeff = c;
    if (!first) {
      os << (coeff < 0 ? " - " : " + ");
      if (coeff < 0) coeff = -coeff;
    }
    first = false;
    if (body.empty())
      os << rat_to_string(coeff);
    else if (coeff == 1)
      os << body;
    else if (coeff == -1)
      os << "-" << body;
    else
      os << rat_to_string(coeff) << "*" << body;
  }
  return os.str();
}

LatticeSeries::LatticeSeries(int rank, int order_q, int order_t)
    : rank_(rank), order_q_(order_q), order_t_(order_t) {
  if (rank < 1) throw InputError("lattice rank must be at least 1");
  if (order_q < 1 || order_t < 1)
    throw InputError("truncation orders must be at least 1");
}

LatticeSeries LatticeSeries::one(int rank, int order_q, int order_t) {
  LatticeSeries s(rank, order_q, order_t);
  s.add(LatticeVector(static_cast<std::size_t>(rank), 0),
        QtSeries::one(order_q, order_t));
  return s;
}

void LatticeSeries::add(const LatticeVector& v, const QtSeries& coeff) {
  if (v.size() != static_cast<std::size_t>(rank_))
    throw InputError("lattice vector has the wrong rank");
  if (coeff.is_zero()) return;
  auto it = terms_.find(v);
  if (it == terms_.end()) {
    terms_.emplace(v, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

QtSeries LatticeSeries::coefficient(const LatticeVector& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? QtSeries(order_q_, order_t_) : it->second;
}

QtSeries LatticeSeries::constant_term() const {
  return coefficient(LatticeVector(static_cast<std::size_t>(rank_), 0));
}

LatticeSeries LatticeSeries::operator+(const LatticeSeries& o) const {
  LatticeSeries out = *this;
  for (const auto& [v, c] : o.terms_) out.add(v, c);
  return out;
}

LatticeSeries LatticeSeries::operator*(const LatticeSeries& o) const {
  LatticeSeries out(rank_, order_q_, order_t_);
  for (const auto& [va, ca] : terms_)
    for (const auto& [vb, cb] : o.terms_) {
      const QtSeries prod = ca * cb;
      if (prod.is_zero()) continue;
      LatticeVector v(va.size());
      for (std::size_t i = 0; i < v.size(); ++i) v[i] = va[i] + vb[i];
      out.add(v, prod);
    }
  return out;
}

LatticeSeries LatticeSeries::weyl_image(const WeylMatrix& w) const {
  LatticeSeries out(rank_, order_q_, order_t_);
  for (const auto& [v, c] : terms_) out.add(apply_weyl(w, v), c);
  return out;
}

LatticeSeries product(std::vector<LatticeSeries> factors) {
  if (factors.empty()) throw InputError("empty lattice-series product");
  while (factors.size() > 1) {
    const std::size_t pairs = factors.size() / 2;
    std::vector<LatticeSeries> next(factors.begin() + 2 * pairs,
                                    factors.end());
    next.reserve(pairs + next.size());
    std::vector<LatticeSeries> merged(pairs,
                                      LatticeSeries(factors[0].rank(),
                                                    factors[0].order_q(),
                                                    factors[0].order_t()));
    parallel_for(pairs, [&](std::size_t i) {
      merged[i] = factors[2 * i] * factors[2 * i + 1];
    });
    next.insert(next.begin(), merged.begin(), merged.end());
    factors = std::move(next);
  }
  return factors[0];
}

}  // namespace rephom::macd
