#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rephom/rational.hpp"
#include "rephom/root_system.hpp"

namespace rephom::macd {

// Polynomial in q and t truncated to exponents q^a t^b with a < order_q and
// b < order_t; terms at or beyond either order are dropped on entry.
class QtSeries {
 public:
  QtSeries(int order_q, int order_t);

  static QtSeries one(int order_q, int order_t);
  static QtSeries monomial(int order_q, int order_t, int q_exp, int t_exp,
                           const Rat& coeff = Rat(1));
  // 1/(1 - x) as a truncated geometric series; x must have zero constant
  // term, so the expansion terminates within the truncation orders.
  static QtSeries geometric(const QtSeries& x);

  int order_q() const { return order_q_; }
  int order_t() const { return order_t_; }

  void add_term(int q_exp, int t_exp, const Rat& coeff);
  Rat coefficient(int q_exp, int t_exp) const;
  bool is_zero() const { return terms_.empty(); }

  QtSeries& operator+=(const QtSeries& o);
  QtSeries& operator-=(const QtSeries& o);
  QtSeries operator+(const QtSeries& o) const;
  QtSeries operator-(const QtSeries& o) const;
  QtSeries operator*(const QtSeries& o) const;
  bool operator==(const QtSeries& o) const { return terms_ == o.terms_; }

  QtSeries scale(const Rat& c) const;
  // Keys of terms where the two series differ, in lexicographic order.
  std::vector<std::pair<int, int>> mismatches(const QtSeries& o) const;
  std::string str() const;

  const std::map<std::pair<int, int>, Rat>& terms() const { return terms_; }

 private:
  int order_q_;
  int order_t_;
  std::map<std::pair<int, int>, Rat> terms_;
};

// Element of the group ring of the root lattice with truncated (q,t)
// coefficients: a finite sum of formal exponentials e^v, v a lattice vector.
class LatticeSeries {
 public:
  LatticeSeries(int rank, int order_q, int order_t);

  static LatticeSeries one(int rank, int order_q, int order_t);

  int rank() const { return rank_; }
  int order_q() const { return order_q_; }
  int order_t() const { return order_t_; }
  std::size_t support_size() const { return terms_.size(); }

  void add(const LatticeVector& v, const QtSeries& coeff);
  QtSeries coefficient(const LatticeVector& v) const;
  // Coefficient of the zero lattice vector.
  QtSeries constant_term() const;

  LatticeSeries operator+(const LatticeSeries& o) const;
  LatticeSeries operator*(const LatticeSeries& o) const;

  // Pushforward along a Weyl group element: e^v -> e^{w v}.
  LatticeSeries weyl_image(const WeylMatrix& w) const;

  const std::map<LatticeVector, QtSeries>& terms() const { return terms_; }

 private:
  int rank_;
  int order_q_;
  int order_t_;
  std::map<LatticeVector, QtSeries> terms_;
};

// Product of all factors, combined pairwise in parallel rounds; the result is
// independent of the combination order.
LatticeSeries product(std::vector<LatticeSeries> factors);

}  // namespace rephom::macd
