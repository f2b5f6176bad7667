#include "rephom/hodge.hpp"

#include <algorithm>

#include "rephom/errors.hpp"
#include "rephom/parallel.hpp"
#include "rephom/sparse_matrix.hpp"

namespace rephom::hodge {

FormComplex::FormComplex(const model::SullivanModel& a) : a_(a) {
  a.validate();
  for (int g = 0; g < a.generator_count(); ++g) {
    const auto& gen = a.algebra().generator(g);
    plain_.push_back(
        forms_.add_generator(gen.label, -gen.degree, gen.weight, 0));
    diffs_.push_back(
        forms_.add_generator("d" + gen.label, 1 - gen.degree, gen.weight, 1));
  }

  de_rham_.degree_shift = 1;
  de_rham_.values.resize(forms_.generator_count());
  for (int g = 0; g < a.generator_count(); ++g)
    de_rham_.values[static_cast<std::size_t>(plain_gen(g))] =
        forms_.gen_element(diff_gen(g));

  internal_.degree_shift = -1;
  internal_.values.resize(forms_.generator_count());
  for (int g = 0; g < a.generator_count(); ++g)
    internal_.values[static_cast<std::size_t>(plain_gen(g))] =
        from_base(a.diff().values[static_cast<std::size_t>(g)]);
  for (int g = 0; g < a.generator_count(); ++g) {
    gca::Element v = forms_.apply(
        de_rham_, internal_.values[static_cast<std::size_t>(plain_gen(g))]);
    v *= Rat(-1);
    internal_.values[static_cast<std::size_t>(diff_gen(g))] = std::move(v);
  }
}

gca::Element FormComplex::from_base(const gca::Element& a_element) const {
  gca::Element out;
  for (const auto& [mono, c] : a_element.terms) {
    gca::Monomial translated;
    for (const auto& [id, exp] : mono.powers)
      translated.powers.emplace_back(plain_gen(id), exp);
    std::sort(translated.powers.begin(), translated.powers.end());
    gca::Element term;
    term.terms.emplace(std::move(translated), c);
    out += term;
  }
  return out;
}

void FormComplex::verify() const {
  for (std::size_t id = 0; id < forms_.generator_count(); ++id) {
    const gca::Element g = forms_.gen_element(static_cast<int>(id));
    if (!forms_.apply(de_rham_, forms_.apply(de_rham_, g)).is_zero())
      throw MathError("de Rham differential does not square to zero");
    if (!forms_.apply(internal_, forms_.apply(internal_, g)).is_zero())
      throw MathError("internal differential does not square to zero");
    gca::Element mixed = forms_.apply(de_rham_, forms_.apply(internal_, g));
    mixed += forms_.apply(internal_, forms_.apply(de_rham_, g));
    if (!mixed.is_zero())
      throw MathError("differentials do not anticommute on " +
                      forms_.element_str(g));
  }
}

namespace {

// Pivot priority: eliminate monomials with no plain odd letters first, so
// quotient representatives keep a plain odd letter whenever possible.
std::vector<std::size_t> pivot_order(const gca::FreeGcAlgebra& alg,
                                     const std::vector<gca::Monomial>& basis) {
  std::vector<std::pair<int, std::size_t>> keyed;
  keyed.reserve(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    int plain_odd = 0;
    for (const auto& [id, exp] : basis[i].powers)
      if (alg.generator(id).marker == 0 && alg.is_odd(id)) plain_odd += exp;
    keyed.emplace_back(plain_odd, i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::size_t> order;
  order.reserve(keyed.size());
  for (const auto& [key, i] : keyed) order.push_back(i);
  return order;
}

}  // namespace

FormComplex::QuotientBlock FormComplex::quotient_block(
    int m, const gca::Weight& w, int degree) const {
  QuotientBlock q;
  q.ambient = forms_.monomials_of_degree(degree, w, std::nullopt, m);
  for (std::size_t i = 0; i < q.ambient.size(); ++i)
    q.index.emplace(q.ambient[i], i);

  const auto order = pivot_order(forms_, q.ambient);
  std::vector<bool> is_pivot(q.ambient.size(), false);

  if (m >= 1) {
    const auto lower =
        forms_.monomials_of_degree(degree - 1, w, std::nullopt, m - 1);
    for (const auto& src : lower) {
      const gca::Element image = forms_.apply(de_rham_, src);
      std::vector<Rat> col(q.ambient.size(), Rat(0));
      for (const auto& [mono, c] : image.terms) {
        auto it = q.index.find(mono);
        if (it == q.index.end())
          throw MathError("de Rham image leaves the block on " +
                          forms_.monomial_str(src));
        col[it->second] = c;
      }
      // Reduce against the echelon, then install with a new pivot.
      for (const auto& [p, vec] : q.echelon) {
        if (is_zero(col[p])) continue;
        const Rat f = col[p];
        for (std::size_t r = 0; r < col.size(); ++r) col[r] -= f * vec[r];
      }
      std::size_t pivot = q.ambient.size();
      for (std::size_t cand : order)
        if (!is_zero(col[cand])) {
          pivot = cand;
          break;
        }
      if (pivot == q.ambient.size()) continue;  // dependent image
      const Rat inv = Rat(1) / col[pivot];
      for (auto& v : col) v *= inv;
      for (auto& [p, vec] : q.echelon) {
        if (is_zero(vec[pivot])) continue;
        const Rat f = vec[pivot];
        for (std::size_t r = 0; r < vec.size(); ++r) vec[r] -= f * col[r];
      }
      is_pivot[pivot] = true;
      q.echelon.emplace(pivot, std::move(col));
    }
  }

  for (std::size_t i = 0; i < q.ambient.size(); ++i)
    if (!is_pivot[i]) q.rep_rows.push_back(i);
  return q;
}

std::vector<Rat> FormComplex::project(const QuotientBlock& q,
                                      std::vector<Rat> dense) const {
  for (const auto& [p, vec] : q.echelon) {
    if (is_zero(dense[p])) continue;
    const Rat f = dense[p];
    for (std::size_t r = 0; r < dense.size(); ++r) dense[r] -= f * vec[r];
  }
  return dense;
}

gca::Element FormComplex::reduce_mod_exact(const gca::Element& form,
                                           int m) const {
  // Split into (weight, degree) components and project each.
  std::map<std::pair<gca::Weight, int>, gca::Element> pieces;
  for (const auto& [mono, c] : form.terms) {
    if (forms_.marker(mono) != m)
      throw InputError("form degree mismatch in reduction");
    gca::Element term;
    term.terms.emplace(mono, c);
    pieces[{forms_.weight(mono), forms_.degree(mono)}] += term;
  }
  gca::Element out;
  for (const auto& [key, piece] : pieces) {
    const QuotientBlock q = quotient_block(m, key.first, key.second);
    std::vector<Rat> dense(q.ambient.size(), Rat(0));
    for (const auto& [mono, c] : piece.terms)
      dense[q.index.at(mono)] = c;
    dense = project(q, dense);
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (!is_zero(dense[i])) {
        gca::Element term;
        term.terms.emplace(q.ambient[i], dense[i]);
        out += term;
      }
  }
  return out;
}

std::map<std::pair<gca::Weight, int>, std::size_t> FormComplex::cyclic_dims(
    int m, int weight_cutoff) const {
  if (m < 0) throw InputError("form degree must be >= 0");
  if (weight_cutoff < 1) throw InputError("weight cutoff must be >= 1");

  std::vector<gca::Weight> weights;
  if (a_.weight_rank() == 2) {
    for (int total = 1; total <= weight_cutoff; ++total)
      for (int w0 = total; w0 >= 0; --w0)
        weights.push_back({w0, total - w0});
  } else {
    for (int w = 1; w <= weight_cutoff; ++w) weights.push_back({w, 0});
  }

  std::vector<std::map<int, std::size_t>> slots(weights.size());
  parallel_for(weights.size(), [&](std::size_t wi) {
    const gca::Weight& w = weights[wi];

    // Degrees present at weight w in marker m: bucket the weight block.
    std::map<int, QuotientBlock> blocks;
    for (const auto& mono : forms_.monomials_of_weight(w))
      if (forms_.marker(mono) == m) {
        const int n = forms_.degree(mono);
        if (!blocks.count(n)) blocks.emplace(n, quotient_block(m, w, n));
      }

    std::map<int, std::size_t> rank_of;
    for (const auto& [n, q] : blocks) {
      auto lower = blocks.find(n - 1);
      QuotientBlock lower_local;
      const QuotientBlock* tq = nullptr;
      if (lower != blocks.end()) {
        tq = &lower->second;
      } else {
        lower_local = quotient_block(m, w, n - 1);
        tq = &lower_local;
      }
      std::vector<std::vector<Rat>> cols;
      cols.reserve(q.rep_rows.size());
      for (std::size_t rep : q.rep_rows) {
        const gca::Element image =
            forms_.apply(internal_, q.ambient[rep]);
        std::vector<Rat> dense(tq->ambient.size(), Rat(0));
        for (const auto& [mono, c] : image.terms) {
          auto it = tq->index.find(mono);
          if (it == tq->index.end())
            throw MathError("internal differential leaves the block");
          dense[it->second] = c;
        }
        dense = project(*tq, dense);
        std::vector<Rat> coords;
        coords.reserve(tq->rep_rows.size());
        for (std::size_t r : tq->rep_rows) coords.push_back(dense[r]);
        cols.push_back(std::move(coords));
      }
      rank_of[n] =
          linalg::SparseMatrix::from_columns(tq->rep_rows.size(), cols).rank();
    }

    for (const auto& [n, q] : blocks) {
      auto rank_at = [&](int deg) -> std::size_t {
        auto it = rank_of.find(deg);
        return it == rank_of.end() ? 0 : it->second;
      };
      const std::size_t h =
          q.rep_rows.size() - rank_at(n) - rank_at(n + 1);
      if (h > 0) slots[wi][n + m] = h;  // the [m] shift
    }
  });

  std::map<std::pair<gca::Weight, int>, std::size_t> out;
  for (std::size_t wi = 0; wi < weights.size(); ++wi)
    for (const auto& [deg, h] : slots[wi]) out[{weights[wi], deg}] = h;
  return out;
}

int FormComplex::cutoff_for_degree(int m, int max_degree) const {
  // Loop degree n corresponds to form degree -(n + 1); every block down to
  // form degree -(max_degree + 2) must be complete.  A weight-w form monomial
  // has |degree| >= mu * w with mu the minimal |degree|/weight over form
  // generators.
  Rat mu(0);
  bool first = true;
  for (std::size_t id = 0; id < forms_.generator_count(); ++id) {
    const auto& g = forms_.generator(static_cast<int>(id));
    const Rat ratio(-g.degree, gca::weight_total(g.weight));
    if (first || ratio < mu) {
      mu = ratio;
      first = false;
    }
  }
  if (first || mu <= 0) throw InputError("form weights are not positive");
  (void)m;
  const Rat bound = Rat(max_degree + 2) / mu;
  Int floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return std::max(1, static_cast<int>(floor_q.get_si()));
}

std::map<int, std::size_t> FormComplex::loop_dims(int m,
                                                  int max_degree) const {
  const int cutoff = cutoff_for_degree(m, max_degree);
  std::map<int, std::size_t> out;
  for (const auto& [key, h] : cyclic_dims(m, cutoff)) {
    // Cyclic degree c carries the [m] shift off the form grading; the loop
    // regrading undoes it and dualizes: n = m - 1 - c = -(form degree) - 1.
    const int n = m - 1 - key.second;
    if (n >= 0 && n <= max_degree) out[n] += h;
  }
  return out;
}

}  // namespace rephom::hodge
