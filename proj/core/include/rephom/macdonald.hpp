#pragma once

#include <string>

#include "rephom/lattice_series.hpp"
#include "rephom/root_system.hpp"

namespace rephom::macd {

// chi as a closed-form polynomial in q:
//   prod_{i=1..l} prod_{j=1..r} (1 - q^{j + m_i (r+1)}),
// computed exactly (the truncation order is chosen past the top degree).
QtSeries chi_product_q(const RootSystem& rs, int r);

// Raw constant term CT{ prod_{j=0..r} prod_{alpha in R} (1 - q^j e^alpha) },
// exact.
QtSeries raw_ct_q(const RootSystem& rs, int r);

// The constant-term route to chi:
//   (1/|W|) prod_{j=1..r} (1 - q^j)^l * raw_ct_q(rs, r),
// exact; equals chi_product_q on every builtin system.
QtSeries chi_ct_q(const RootSystem& rs, int r);

struct QIdentityReport {
  std::string type_rank;
  int r = 0;
  bool pass = false;
  std::string ct;              // raw constant term
  std::string product_side;    // |W| * prod (1-q^{j+m_i(r+1)})/(1-q^j)
  std::string chi_ct;          // chi via the constant term
  std::string chi_product;     // chi in closed form
  std::string normalization;   // note on the |W| factor between the two
  std::string first_mismatch;  // empty when pass
};

// Checks raw CT = |W| * prod (1-q^{j+m_i(r+1)})/(1-q^j) and the underlying
// chi equality, both exactly.
QIdentityReport verify_q_identity(const RootSystem& rs, int r);

struct QtIdentityReport {
  std::string type_rank;
  int order_q = 0;
  int order_t = 0;
  bool pass = false;
  std::string lhs;  // (1/|W|) CT{ prod_j prod_alpha (1-q^{j-1}e^a)/(1-q^{j-1}t e^a) }
  std::string rhs;  // prod_i prod_j (1-q^{j-1}t)(1-q^j t^{m_i}) / ((1-q^j)(1-q^{j-1}t^{m_i+1}))
  std::string normalization;
  std::string first_mismatch;  // empty when pass
};

// Both sides of the (q,t)-constant-term identity mod (q^order_q, t^order_t);
// the infinite products truncate to j <= order_q, which is exact at these
// orders.
QtIdentityReport verify_qt_identity(const RootSystem& rs, int order_q,
                                    int order_t);

}  // namespace rephom::macd
