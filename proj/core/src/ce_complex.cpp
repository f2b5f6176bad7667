#include "rephom/ce_complex.hpp"

#include <algorithm>

#include "rephom/errors.hpp"
#include "rephom/parallel.hpp"

namespace rephom::ce {

namespace {

std::vector<gca::Weight> enumerate_weights(int rank, int cutoff) {
  std::vector<gca::Weight> out;
  if (rank <= 1) {
    for (int w = 1; w <= cutoff; ++w) out.push_back({w, 0});
  } else {
    for (int total = 1; total <= cutoff; ++total)
      for (int w0 = total; w0 >= 0; --w0) out.push_back({w0, total - w0});
  }
  return out;
}

}  // namespace

CeComplex::CeComplex(const lie::LieAlgebra& g, const model::SullivanModel& a,
                     int weight_cutoff, bool relative)
    : g_(g), a_(a), cutoff_(weight_cutoff), relative_(relative) {
  if (weight_cutoff < 1) throw InputError("weight cutoff must be >= 1");
  for (int i = 0; i < a.generator_count(); ++i)
    if (gca::weight_total(a.algebra().generator(i).weight) <= 0)
      throw InputError(
          "weight blocks of the augmentation ideal are unbounded: generator " +
          a.algebra().generator(i).label + " has non-positive total weight");

  weight_list_ = enumerate_weights(a.weight_rank(), cutoff_);

  for (const auto& w : weight_list_)
    for (const auto& e : a.algebra().monomials_of_weight(w))
      for (int i = 0; i < g.dim; ++i) {
        const int chain_degree = 1 - a.algebra().degree(e);
        const int id = letters_.add_generator(
            g.basis[static_cast<std::size_t>(i)] + "@" +
                a.algebra().monomial_str(e),
            chain_degree, w);
        info_.push_back({i, e});
        letter_of_.emplace(std::make_pair(i, e), id);
      }

  internal_.degree_shift = -1;
  internal_.values.resize(letters_.generator_count());
  for (std::size_t id = 0; id < info_.size(); ++id) {
    const auto& [i, e] = info_[id];
    const gca::Element de = a.algebra().apply(a.diff(), e);
    gca::Element value;
    for (const auto& [mono, c] : de.terms) {
      gca::Element term = letters_.gen_element(letter_id(i, mono));
      value += letters_.scale(term, c);
    }
    internal_.values[id] = std::move(value);
  }
}

int CeComplex::required_cutoff(const model::SullivanModel& a, int max_degree) {
  if (a.generator_count() == 0) return 1;
  Rat mu(0);
  bool first = true;
  for (int i = 0; i < a.generator_count(); ++i) {
    const auto& gen = a.algebra().generator(i);
    const Rat ratio(gen.degree - 1, gca::weight_total(gen.weight));
    if (first || ratio < mu) {
      mu = ratio;
      first = false;
    }
  }
  const Rat bound = Rat(max_degree + 1) / mu;
  Int floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), bound.get_num().get_mpz_t(),
             bound.get_den().get_mpz_t());
  return std::max(1, static_cast<int>(floor_q.get_si()));
}

int CeComplex::letter_id(int g_index, const gca::Monomial& a_monomial) const {
  auto it = letter_of_.find(std::make_pair(g_index, a_monomial));
  if (it == letter_of_.end())
    throw MathError("letter outside the weight cutoff: index " +
                    std::to_string(g_index) + ", monomial " +
                    a_.algebra().monomial_str(a_monomial));
  return it->second;
}

gca::Element CeComplex::boundary(const gca::Monomial& m) const {
  gca::Element out = letters_.apply(internal_, m);

  // Pair contraction: occurrences in canonical order; extract the pair to the
  // front with the Koszul sign, twist by the first letter's degree, bracket
  // the g legs and multiply the A legs.
  std::vector<int> occ;
  for (const auto& [id, exp] : m.powers)
    for (int t = 0; t < exp; ++t) occ.push_back(id);
  std::vector<int> parity(occ.size());
  for (std::size_t p = 0; p < occ.size(); ++p)
    parity[p] = letters_.generator(occ[p]).degree & 1;

  for (std::size_t k = 0; k < occ.size(); ++k)
    for (std::size_t l = k + 1; l < occ.size(); ++l) {
      const auto& lk = info_[static_cast<std::size_t>(occ[k])];
      const auto& ll = info_[static_cast<std::size_t>(occ[l])];
      const auto& coords = g_.bracket(lk.g_index, ll.g_index);
      if (coords.empty()) continue;
      const auto prod = a_.algebra().mul_monomials(lk.a_mono, ll.a_mono);
      if (!prod) continue;

      int sign_exp = 0;
      for (std::size_t p = 0; p < k; ++p) sign_exp += parity[k] * parity[p];
      for (std::size_t p = 0; p < l; ++p)
        if (p != k) sign_exp += parity[l] * parity[p];
      sign_exp += parity[k];  // the pair-contraction twist
      int sign = (sign_exp % 2 != 0) ? -1 : 1;
      sign *= prod->second;

      gca::Monomial rest = m;
      for (int id : {occ[k], occ[l]}) {
        auto it = std::find_if(rest.powers.begin(), rest.powers.end(),
                               [id](const auto& p) { return p.first == id; });
        if (--it->second == 0) rest.powers.erase(it);
      }
      gca::Element rest_elem;
      rest_elem.terms.emplace(std::move(rest), Rat(sign));

      for (const auto& [gk, c] : coords) {
        const gca::Element letter =
            letters_.gen_element(letter_id(gk, prod->first));
        gca::Element term = letters_.mul(letter, rest_elem);
        out += letters_.scale(term, c);
      }
    }
  return out;
}

gca::Element CeComplex::boundary(const gca::Element& e) const {
  gca::Element out;
  for (const auto& [m, c] : e.terms) out += letters_.scale(boundary(m), c);
  return out;
}

gca::Derivation CeComplex::g_action(int u) const {
  gca::Derivation d;
  d.degree_shift = 0;
  d.values.resize(letters_.generator_count());
  for (std::size_t id = 0; id < info_.size(); ++id) {
    const auto& [i, e] = info_[id];
    gca::Element value;
    for (const auto& [k, c] : g_.bracket(u, i)) {
      gca::Element term = letters_.gen_element(letter_id(k, e));
      value += letters_.scale(term, c);
    }
    d.values[id] = std::move(value);
  }
  return d;
}

std::map<int, block::Block> CeComplex::weight_blocks(
    const gca::Weight& w) const {
  std::map<int, block::Block> out;
  for (const auto& mono : letters_.monomials_of_weight(w)) {
    block::Block& b = out[letters_.degree(mono)];
    b.index.emplace(mono, b.basis.size());
    b.basis.push_back(mono);
  }
  return out;
}

linalg::SparseMatrix CeComplex::boundary_matrix(const block::Block& src,
                                                const block::Block& tgt) const {
  linalg::SparseMatrix m(tgt.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const gca::Element val = boundary(src.basis[j]);
    for (const auto& [mono, c] : val.terms) {
      auto it = tgt.index.find(mono);
      if (it == tgt.index.end())
        throw MathError("boundary leaves the weight block on " +
                        letters_.monomial_str(src.basis[j]));
      m.add(it->second, j, c);
    }
  }
  return m;
}

void CeComplex::verify_boundary_squared() const {
  parallel_for(weight_list_.size(), [&](std::size_t wi) {
    for (const auto& mono : letters_.monomials_of_weight(weight_list_[wi])) {
      const gca::Element twice = boundary(boundary(mono));
      if (!twice.is_zero())
        throw MathError("boundary does not square to zero on " +
                        letters_.monomial_str(mono));
    }
  });
}

PoincareSeries CeComplex::series(int max_degree) const {
  if (max_degree < 0) throw InputError("max degree must be >= 0");
  const int required = required_cutoff(a_, max_degree);
  if (cutoff_ < required)
    throw InputError("weight cutoff " + std::to_string(cutoff_) +
                     " cannot certify degrees <= " +
                     std::to_string(max_degree) + "; need >= " +
                     std::to_string(required));
  if (relative_ && g_.exponents.empty())
    throw InputError("relative complex requires a reductive coefficient algebra");

  std::vector<std::map<std::pair<int, gca::Weight>, std::size_t>> slots(
      weight_list_.size());
  std::vector<gca::Derivation> actions;
  if (relative_) {
    actions.reserve(static_cast<std::size_t>(g_.dim));
    for (int u = 0; u < g_.dim; ++u) actions.push_back(g_action(u));
  }

  parallel_for(weight_list_.size(), [&](std::size_t wi) {
    const gca::Weight& w = weight_list_[wi];
    const auto blocks = weight_blocks(w);
    const block::Block empty;
    auto block_at = [&](int c) -> const block::Block& {
      auto it = blocks.find(c);
      return it == blocks.end() ? empty : it->second;
    };

    std::map<int, std::size_t> rank_of;
    std::map<int, std::size_t> dim_of;
    if (!relative_) {
      for (const auto& [c, b] : blocks) {
        dim_of[c] = b.dim();
        rank_of[c] = boundary_matrix(b, block_at(c - 1)).rank();
      }
    } else {
      std::map<int, block::ColumnSpan> kernels;
      for (const auto& [c, b] : blocks) {
        std::vector<linalg::SparseMatrix> ops;
        ops.reserve(actions.size());
        for (const auto& op : actions)
          ops.push_back(block::operator_matrix(letters_, op, b, b));
        kernels.emplace(c, block::joint_kernel(b.dim(), ops));
      }
      const block::ColumnSpan empty_span;
      auto span_at = [&](int c) -> const block::ColumnSpan& {
        auto it = kernels.find(c);
        return it == kernels.end() ? empty_span : it->second;
      };
      for (const auto& [c, b] : blocks) {
        dim_of[c] = span_at(c).size();
        const auto m = boundary_matrix(b, block_at(c - 1));
        const auto restricted = block::restrict_operator(
            m, span_at(c), span_at(c - 1), block_at(c - 1).dim());
        rank_of[c] = restricted.rank();
      }
    }

    for (const auto& [c, dim] : dim_of) {
      auto rank_at = [&](int deg) -> std::size_t {
        auto it = rank_of.find(deg);
        return it == rank_of.end() ? 0 : it->second;
      };
      const std::size_t h = dim - rank_at(c) - rank_at(c + 1);
      const int n = -c;
      if (h > 0 && n >= 0 && n <= max_degree) slots[wi][{n, w}] = h;
    }
  });

  PoincareSeries out(max_degree, a_.weight_rank() == 2 ? 2 : 1);
  out.add_term(0, Rat(1));  // the unit block at weight zero
  for (const auto& slot : slots)
    for (const auto& [key, h] : slot)
      out.add_term(key.first, Rat(static_cast<long>(h)), key.second);
  return out;
}

std::map<gca::Weight, Int> CeComplex::weight_euler() const {
  std::vector<Int> chis(weight_list_.size());
  std::vector<gca::Derivation> actions;
  if (relative_) {
    actions.reserve(static_cast<std::size_t>(g_.dim));
    for (int u = 0; u < g_.dim; ++u) actions.push_back(g_action(u));
  }
  parallel_for(weight_list_.size(), [&](std::size_t wi) {
    Int chi = 0;
    for (const auto& [c, b] : weight_blocks(weight_list_[wi])) {
      std::size_t dim = b.dim();
      if (relative_) {
        std::vector<linalg::SparseMatrix> ops;
        ops.reserve(actions.size());
        for (const auto& op : actions)
          ops.push_back(block::operator_matrix(letters_, op, b, b));
        dim = block::joint_kernel(b.dim(), ops).size();
      }
      const Int signed_dim = static_cast<long>(dim);
      chi += (c % 2 != 0) ? -signed_dim : signed_dim;
    }
    chis[wi] = chi;
  });
  std::map<gca::Weight, Int> out;
  for (std::size_t wi = 0; wi < weight_list_.size(); ++wi)
    out.emplace(weight_list_[wi], chis[wi]);
  return out;
}

}  // namespace rephom::ce
