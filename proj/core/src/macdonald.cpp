#include "rephom/macdonald.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rephom/errors.hpp"

namespace rephom::macd {

namespace {

void check_r(int r) {
  if (r < 0) throw InputError("truncation level r must be nonnegative");
}

// Degree bound for the raw constant term: every q comes from a (1 - q^j e^a)
// factor, j summed over 0..r and alpha over all roots.
int raw_ct_order(const RootSystem& rs, int r) {
  return static_cast<int>(rs.positive_roots.size()) * r * (r + 1) + 1;
}

std::string describe_mismatch(const QtSeries& a, const QtSeries& b) {
  const auto keys = a.mismatches(b);
  if (keys.empty()) return {};
  const auto& [qe, te] = keys.front();
  std::ostringstream os;
  os << "q^" << qe;
  if (te > 0) os << "*t^" << te;
  os << ": " << rat_to_string(a.coefficient(qe, te)) << " vs "
     << rat_to_string(b.coefficient(qe, te));
  return os.str();
}

std::string weyl_note(const RootSystem& rs) {
  return "raw constant term equals |W| = " + std::to_string(rs.weyl_order()) +
         " times the displayed product side; the chi comparison carries the "
         "1/|W| prefactor and is exact";
}

}  // namespace

QtSeries chi_product_q(const RootSystem& rs, int r) {
  check_r(r);
  int top = 0;
  for (int m : rs.exponents)
    for (int j = 1; j <= r; ++j) top += j + m * (r + 1);
  QtSeries out = QtSeries::one(top + 1, 1);
  for (int m : rs.exponents)
    for (int j = 1; j <= r; ++j) {
      QtSeries factor = QtSeries::one(top + 1, 1);
      factor.add_term(j + m * (r + 1), 0, Rat(-1));
      out = out * factor;
    }
  return out;
}

QtSeries raw_ct_q(const RootSystem& rs, int r) {
  check_r(r);
  const int order = raw_ct_order(rs, r);
  std::vector<LatticeSeries> factors;
  for (int j = 0; j <= r; ++j)
    for (const auto& alpha : rs.roots()) {
      LatticeSeries f = LatticeSeries::one(rs.rank, order, 1);
      f.add(alpha, QtSeries::monomial(order, 1, j, 0, Rat(-1)));
      factors.push_back(std::move(f));
    }
  return product(std::move(factors)).constant_term();
}

QtSeries chi_ct_q(const RootSystem& rs, int r) {
  check_r(r);
  // The raw constant term is a polynomial of degree at most |R+| r(r+1), but
  // multiplying by the prod (1 - q^j)^l prefactor raises the degree up to the
  // chi bound, so the product has to be formed at that wider order.
  int top = 0;
  for (int m : rs.exponents)
    for (int j = 1; j <= r; ++j) top += j + m * (r + 1);
  const QtSeries raw = raw_ct_q(rs, r);
  QtSeries out(std::max(top + 1, raw.order_q()), 1);
  for (const auto& [key, coeff] : raw.terms())
    out.add_term(key.first, key.second, coeff);
  for (int j = 1; j <= r; ++j)
    for (int i = 0; i < rs.rank; ++i) {
      QtSeries factor = QtSeries::one(out.order_q(), 1);
      factor.add_term(j, 0, Rat(-1));
      out = out * factor;
    }
  return out.scale(Rat(1) / Rat(static_cast<long>(rs.weyl_order())));
}

QIdentityReport verify_q_identity(const RootSystem& rs, int r) {
  check_r(r);
  QIdentityReport report;
  report.type_rank = rs.type_rank;
  report.r = r;
  report.normalization = weyl_note(rs);

  const QtSeries ct = raw_ct_q(rs, r);
  const int order = ct.order_q();

  // |W| * prod (1 - q^{j+m_i(r+1)}) / (1 - q^j), as a series past both
  // degrees, hence an exact polynomial comparison.
  QtSeries product_side = QtSeries::one(order, 1).scale(
      Rat(static_cast<long>(rs.weyl_order())));
  for (int m : rs.exponents)
    for (int j = 1; j <= r; ++j) {
      QtSeries num = QtSeries::one(order, 1);
      num.add_term(j + m * (r + 1), 0, Rat(-1));
      product_side = product_side * num *
                     QtSeries::geometric(QtSeries::monomial(order, 1, j, 0));
    }

  const QtSeries chi_ct = chi_ct_q(rs, r);
  const QtSeries chi_prod = chi_product_q(rs, r);

  report.ct = ct.str();
  report.product_side = product_side.str();
  report.chi_ct = chi_ct.str();
  report.chi_product = chi_prod.str();
  const std::string ct_mismatch = describe_mismatch(ct, product_side);
  const std::string chi_mismatch = describe_mismatch(chi_ct, chi_prod);
  report.pass = ct_mismatch.empty() && chi_mismatch.empty();
  report.first_mismatch = !ct_mismatch.empty() ? ct_mismatch : chi_mismatch;
  return report;
}

QtIdentityReport verify_qt_identity(const RootSystem& rs, int order_q,
                                    int order_t) {
  if (order_q < 2 || order_t < 2)
    throw InputError("truncation orders must be at least 2");
  QtIdentityReport report;
  report.type_rank = rs.type_rank;
  report.order_q = order_q;
  report.order_t = order_t;
  report.normalization =
      "both sides truncated mod (q^" + std::to_string(order_q) + ", t^" +
      std::to_string(order_t) + "); the 1/|W| factor sits on the CT side";

  // CT side: factors (1 - q^{j-1} e^a) / (1 - q^{j-1} t e^a); the factors
  // with j - 1 >= order_q are 1 modulo the truncation.
  std::vector<LatticeSeries> factors;
  for (int j = 1; j <= order_q; ++j)
    for (const auto& alpha : rs.roots()) {
      LatticeSeries geom(rs.rank, order_q, order_t);
      LatticeVector v(alpha.size(), 0);
      for (int k = 0; k * (j - 1) < order_q && k < order_t; ++k) {
        geom.add(v, QtSeries::monomial(order_q, order_t, k * (j - 1), k));
        for (std::size_t c = 0; c < v.size(); ++c) v[c] += alpha[c];
      }
      LatticeSeries num = LatticeSeries::one(rs.rank, order_q, order_t);
      num.add(alpha, QtSeries::monomial(order_q, order_t, j - 1, 0, Rat(-1)));
      factors.push_back(num * geom);
    }
  const QtSeries lhs = product(std::move(factors))
                           .constant_term()
                           .scale(Rat(1) / Rat(static_cast<long>(rs.weyl_order())));

  // Product side: prod_i prod_j of
  //   (1 - q^{j-1} t)(1 - q^j t^{m_i}) / ((1 - q^j)(1 - q^{j-1} t^{m_i+1})).
  QtSeries rhs = QtSeries::one(order_q, order_t);
  for (int m : rs.exponents)
    for (int j = 1; j <= order_q; ++j) {
      QtSeries a = QtSeries::one(order_q, order_t);
      a.add_term(j - 1, 1, Rat(-1));
      QtSeries b = QtSeries::one(order_q, order_t);
      b.add_term(j, m, Rat(-1));
      rhs = rhs * a * b *
            QtSeries::geometric(QtSeries::monomial(order_q, order_t, j, 0)) *
            QtSeries::geometric(
                QtSeries::monomial(order_q, order_t, j - 1, m + 1));
    }

  report.lhs = lhs.str();
  report.rhs = rhs.str();
  report.first_mismatch = describe_mismatch(lhs, rhs);
  report.pass = report.first_mismatch.empty();
  return report;
}

}  // namespace rephom::macd
