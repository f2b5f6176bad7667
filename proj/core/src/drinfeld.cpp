#include "rephom/drinfeld.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "rephom/catalog.hpp"
#include "rephom/ce_complex.hpp"
#include "rephom/errors.hpp"

namespace rephom::drinfeld {

namespace {

void trace_recurse(const lie::InvariantPolynomial& P,
                   const rep::RepComplex& rep,
                   const std::vector<rep::CurrentElement>& rho,
                   std::size_t slot, std::vector<int>& tuple,
                   const gca::Element& partial, gca::Element& out) {
  const auto& alg = rep.algebra();
  if (slot == rho.size()) {
    const Rat v = P.value(tuple);
    if (!is_zero(v)) out += alg.scale(partial, v);
    return;
  }
  for (int i = 0; i < rep.coefficients().dim; ++i) {
    const gca::Element& leg =
        rho[slot].components[static_cast<std::size_t>(i)];
    if (leg.is_zero()) continue;
    const gca::Element next = alg.mul(partial, leg);
    if (next.is_zero()) continue;
    tuple.push_back(i);
    trace_recurse(P, rep, rho, slot + 1, tuple, next, out);
    tuple.pop_back();
  }
}

}  // namespace

gca::Element quillen_trace(const lie::InvariantPolynomial& P,
                           const rep::RepComplex& rep, const SymWord& word) {
  if (P.g_dim() != rep.coefficients().dim)
    throw InputError("invariant polynomial is over a different algebra");
  if (static_cast<std::size_t>(P.degree()) != word.factors.size())
    throw InputError("word length " + std::to_string(word.factors.size()) +
                     " does not match polynomial degree " +
                     std::to_string(P.degree()));
  std::vector<rep::CurrentElement> rho;
  rho.reserve(word.factors.size());
  for (const auto& x : word.factors) rho.push_back(rep.universal_rep(x));
  gca::Element out;
  std::vector<int> tuple;
  trace_recurse(P, rep, rho, 0, tuple, rep.algebra().unit(), out);
  return out;
}

gca::Element sullivan_psi(const lie::InvariantPolynomial& P,
                          const hodge::FormComplex& forms,
                          const CurrentWedge& chain) {
  const model::SullivanModel& a = forms.base();
  if (P.g_dim() <= 0) throw InputError("empty coefficient algebra");
  const std::size_t len = chain.factors.size();
  if (static_cast<std::size_t>(P.degree()) != len)
    throw InputError("wedge length " + std::to_string(len) +
                     " does not match polynomial degree " +
                     std::to_string(P.degree()));
  const int m = P.degree() - 1;

  // Suspended parities of the factors; each a_i must be degree-homogeneous.
  std::vector<int> parity(len, 0);
  std::vector<gca::Element> base_forms(len);
  for (std::size_t t = 0; t < len; ++t) {
    if (chain.factors[t].first < 0 || chain.factors[t].first >= P.g_dim())
      throw InputError("algebra index out of range in wedge factor");
    const gca::Element& at = chain.factors[t].second;
    if (at.is_zero()) return gca::Element{};
    const int deg = a.algebra().degree(at.terms.begin()->first);
    for (const auto& [mono, c] : at.terms)
      if (a.algebra().degree(mono) != deg)
        throw InputError("wedge factor is not degree-homogeneous");
    parity[t] = (1 - deg) & 1;
    base_forms[t] = forms.from_base(at);
  }

  std::vector<std::size_t> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  gca::Element total;
  do {
    // Koszul sign of reordering the suspended factors into perm order.
    int sign_exp = 0;
    for (std::size_t t = 0; t < len; ++t)
      for (std::size_t u = t + 1; u < len; ++u)
        if (perm[t] > perm[u]) sign_exp += parity[perm[t]] * parity[perm[u]];

    std::vector<int> tuple;
    tuple.reserve(len);
    for (std::size_t t = 0; t < len; ++t)
      tuple.push_back(chain.factors[perm[t]].first);
    const Rat pv = P.value(std::move(tuple));
    if (is_zero(pv)) continue;

    gca::Element term = base_forms[perm[0]];
    for (std::size_t t = 1; t < len; ++t)
      term = forms.forms().mul(
          term, forms.forms().apply(forms.de_rham(), base_forms[perm[t]]));
    if (term.is_zero()) continue;
    term *= (sign_exp % 2 != 0) ? Rat(-pv) : pv;
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));

  Rat fact(1);
  for (std::size_t t = 2; t <= len; ++t) fact *= static_cast<long>(t);
  total *= Rat(1) / fact;
  if (total.is_zero()) return total;
  return forms.reduce_mod_exact(total, m);
}

std::vector<model::LieExpr> spanning_trees(const model::QuillenModel& m,
                                           int degree) {
  // trees[d] = spanning trees of degree d, each a single-term expression.
  std::vector<std::vector<model::TreePtr>> trees(
      static_cast<std::size_t>(degree) + 1);
  for (int d = 1; d <= degree; ++d) {
    for (int v = 0; v < m.generator_count(); ++v)
      if (m.degree(v) == d)
        trees[static_cast<std::size_t>(d)].push_back(model::make_leaf(v));
    for (int d1 = 1; 2 * d1 <= d; ++d1) {
      const int d2 = d - d1;
      const auto& left = trees[static_cast<std::size_t>(d1)];
      const auto& right = trees[static_cast<std::size_t>(d2)];
      for (std::size_t i = 0; i < left.size(); ++i) {
        const std::size_t j0 = (d1 == d2) ? i : 0;
        for (std::size_t j = j0; j < right.size(); ++j)
          trees[static_cast<std::size_t>(d)].push_back(
              model::make_bracket(left[i], right[j]));
      }
    }
  }
  std::vector<model::LieExpr> out;
  for (const auto& t : trees[static_cast<std::size_t>(degree)]) {
    model::LieExpr e;
    e.add_term(Rat(1), t);
    out.push_back(std::move(e));
  }
  return out;
}

namespace {

// Multisets of spanning trees with the given factor count and total degree.
void words_recurse(const model::QuillenModel& m,
                   const std::vector<std::vector<model::LieExpr>>& by_degree,
                   int factors_left, int degree_left, int min_degree,
                   SymWord& current, std::vector<SymWord>& out) {
  if (factors_left == 0) {
    if (degree_left == 0) out.push_back(current);
    return;
  }
  for (int d = min_degree; d * factors_left <= degree_left; ++d) {
    for (const auto& e : by_degree[static_cast<std::size_t>(d)]) {
      current.factors.push_back(e);
      words_recurse(m, by_degree, factors_left - 1, degree_left - d, d,
                    current, out);
      current.factors.pop_back();
    }
  }
}

}  // namespace

std::vector<SymWord> trace_words(const model::QuillenModel& m, int factors,
                                 int degree) {
  std::vector<std::vector<model::LieExpr>> by_degree(
      static_cast<std::size_t>(degree) + 1);
  for (int d = 1; d <= degree; ++d)
    by_degree[static_cast<std::size_t>(d)] = spanning_trees(m, d);
  std::vector<SymWord> out;
  SymWord current;
  words_recurse(m, by_degree, factors, degree, 1, current, out);
  return out;
}

FreenessReport drinfeld_freeness_check(const std::string& space,
                                       const lie::LieAlgebra& g,
                                       int max_degree) {
  FreenessReport report;
  report.space = space;
  report.group = g.name;
  if (g.exponents.empty())
    throw InputError("freeness check requires a reductive coefficient algebra");

  const model::SpaceModels models = model::catalog(space, max_degree);
  if (!models.sullivan)
    throw InputError("space " + space + " has no Sullivan model");
  const hodge::FormComplex forms(*models.sullivan);

  // One generator batch per exponent, from the loop-space Hodge dimensions.
  std::vector<std::pair<int, gca::Weight>> odd_gens, even_gens;
  std::vector<std::map<int, std::size_t>> loop_by_exponent;
  for (int mi : g.exponents) {
    const auto dims = forms.loop_dims(mi, max_degree);
    loop_by_exponent.push_back(dims);
    for (const auto& [deg, count] : dims)
      for (std::size_t c = 0; c < count; ++c) {
        report.generator_degrees.push_back(deg);
        if (deg % 2 != 0)
          odd_gens.emplace_back(deg, gca::weight_zero());
        else
          even_gens.emplace_back(deg, gca::weight_zero());
      }
  }
  std::sort(report.generator_degrees.begin(), report.generator_degrees.end());

  const PoincareSeries free_series =
      PoincareSeries::free_commutative(odd_gens, even_gens, max_degree);
  report.free_series = free_series.str();

  PoincareSeries invariant = [&] {
    if (models.quillen &&
        (!models.quillen_validity || *models.quillen_validity >= max_degree)) {
      const rep::RepComplex rc(*models.quillen, g);
      return rc.invariant_homology_series(max_degree).forget_weights();
    }
    const int cutoff =
        ce::CeComplex::required_cutoff(*models.sullivan, max_degree);
    const ce::CeComplex cc(g, *models.sullivan, cutoff, true);
    return cc.series(max_degree).forget_weights();
  }();
  report.invariant_series = invariant.str();

  {
    FreenessRow row;
    row.item = "series";
    const std::string mismatch = free_series.first_mismatch(invariant);
    row.ok = mismatch.empty();
    row.detail = row.ok ? "free series matches invariant series to degree " +
                              std::to_string(max_degree)
                        : "first mismatch at " + mismatch;
    if (!row.ok) report.pass = false;
    report.checks.push_back(std::move(row));
  }

  if (models.quillen) {
    const rep::RepComplex rc(*models.quillen, g);
    const auto polys = lie::InvariantPolynomial::standard_generators(g);
    for (std::size_t pi = 0; pi < polys.size(); ++pi) {
      const auto& dims = loop_by_exponent[pi];
      FreenessRow row;
      row.item = "trace " + polys[pi].name();
      if (dims.empty()) {
        row.ok = true;
        row.detail = "no generators below degree cap";
        report.checks.push_back(std::move(row));
        continue;
      }
      const int n0 = dims.begin()->first;
      if (models.quillen_validity && *models.quillen_validity < n0) {
        row.ok = true;
        row.detail = "lowest generator above the truncation bound";
        report.checks.push_back(std::move(row));
        continue;
      }

      const auto words = trace_words(*models.quillen, polys[pi].degree(), n0);
      std::vector<gca::Element> images;
      bool all_cycles = true, all_invariant = true;
      for (const auto& w : words) {
        gca::Element img = quillen_trace(polys[pi], rc, w);
        if (img.is_zero()) continue;
        if (!rc.algebra().apply(rc.diff(), img).is_zero()) all_cycles = false;
        for (int u = 0; u < g.dim && all_invariant; ++u)
          if (!rc.algebra().apply(rc.ad_action(u), img).is_zero())
            all_invariant = false;
        images.push_back(std::move(img));
      }

      bool class_nonzero = false;
      if (!images.empty() && all_cycles) {
        // Boundaries into degree n0, then test the span modulo them.
        const auto basis = rc.algebra().monomials_of_degree(n0);
        std::map<gca::Monomial, std::size_t> index;
        for (std::size_t i = 0; i < basis.size(); ++i)
          index.emplace(basis[i], i);
        std::vector<std::vector<Rat>> cols;
        for (const auto& src : rc.algebra().monomials_of_degree(n0 + 1)) {
          const gca::Element b = rc.algebra().apply(rc.diff(), src);
          if (b.is_zero()) continue;
          std::vector<Rat> col(basis.size(), Rat(0));
          for (const auto& [mono, c] : b.terms) col[index.at(mono)] = c;
          cols.push_back(std::move(col));
        }
        const std::size_t boundary_rank =
            linalg::SparseMatrix::from_columns(basis.size(), cols).rank();
        for (const auto& img : images) {
          std::vector<Rat> col(basis.size(), Rat(0));
          for (const auto& [mono, c] : img.terms) col[index.at(mono)] = c;
          cols.push_back(std::move(col));
        }
        class_nonzero =
            linalg::SparseMatrix::from_columns(basis.size(), cols).rank() >
            boundary_rank;
      }

      row.ok = !images.empty() && all_cycles && all_invariant && class_nonzero;
      std::ostringstream detail;
      detail << images.size() << " nonzero images at degree " << n0
             << (all_cycles ? ", cycles" : ", NOT cycles")
             << (all_invariant ? ", ad-invariant" : ", NOT ad-invariant")
             << (class_nonzero ? ", class nonzero" : ", class zero");
      row.detail = detail.str();
      if (!row.ok) report.pass = false;
      report.checks.push_back(std::move(row));
    }
  }

  return report;
}

}  // namespace rephom::drinfeld
