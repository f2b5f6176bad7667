#include "rephom/rep_complex.hpp"

#include <algorithm>
#include <tuple>

#include "rephom/errors.hpp"
#include "rephom/parallel.hpp"

namespace rephom::rep {

bool CurrentElement::is_zero() const {
  return std::all_of(components.begin(), components.end(),
                     [](const gca::Element& e) { return e.is_zero(); });
}

RepComplex::RepComplex(const model::QuillenModel& m, const lie::LieAlgebra& g,
                       Rat convention_scale)
    : m_(m), g_(g), weighted_(m.has_weights()) {
  if (is_zero(convention_scale))
    throw InputError("convention scale must be nonzero");
  m.validate();

  // Generators (xi_i^*, v) ordered by (degree, g basis index, label).
  std::vector<std::tuple<int, int, std::string, int>> order;
  for (int v = 0; v < m.generator_count(); ++v)
    for (int i = 0; i < g.dim; ++i)
      order.emplace_back(m.degree(v), i, m.label(v), v);
  std::sort(order.begin(), order.end());

  gen_ids_.assign(static_cast<std::size_t>(g.dim),
                  std::vector<int>(static_cast<std::size_t>(m.generator_count()),
                                   -1));
  for (const auto& [deg, i, label, v] : order) {
    gca::Weight w = gca::weight_zero();
    if (weighted_) w[0] = m.weight(v);
    const int id = alg_.add_generator(g.basis[static_cast<std::size_t>(i)] +
                                          "*" + label,
                                      deg, w);
    gen_ids_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] = id;
  }

  diff_.degree_shift = -1;
  diff_.values.resize(alg_.generator_count());
  for (int v = 0; v < m.generator_count(); ++v) {
    const CurrentElement rho = universal_rep(m.differential(v));
    for (int i = 0; i < g.dim; ++i)
      diff_.values[static_cast<std::size_t>(generator_id(i, v))] =
          alg_.scale(rho.components[static_cast<std::size_t>(i)],
                     convention_scale);
  }
}

int RepComplex::generator_id(int g_index, int model_gen) const {
  return gen_ids_[static_cast<std::size_t>(g_index)]
                 [static_cast<std::size_t>(model_gen)];
}

namespace {

CurrentElement eval_tree(const RepComplex& c, const lie::LieAlgebra& g,
                         const gca::FreeGcAlgebra& alg,
                         const model::LieTree& t) {
  CurrentElement out;
  out.components.resize(static_cast<std::size_t>(g.dim));
  if (t.leaf >= 0) {
    for (int i = 0; i < g.dim; ++i)
      out.components[static_cast<std::size_t>(i)] =
          alg.gen_element(c.generator_id(i, t.leaf));
    return out;
  }
  const CurrentElement a = eval_tree(c, g, alg, *t.left);
  const CurrentElement b = eval_tree(c, g, alg, *t.right);
  for (int i = 0; i < g.dim; ++i) {
    if (a.components[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < g.dim; ++j) {
      if (b.components[static_cast<std::size_t>(j)].is_zero()) continue;
      const gca::Element prod =
          alg.mul(a.components[static_cast<std::size_t>(i)],
                  b.components[static_cast<std::size_t>(j)]);
      if (prod.is_zero()) continue;
      for (const auto& [k, coeff] : g.bracket(i, j))
        out.components[static_cast<std::size_t>(k)] +=
            alg.scale(prod, coeff);
    }
  }
  return out;
}

}  // namespace

CurrentElement RepComplex::universal_rep(const model::LieExpr& x) const {
  CurrentElement out;
  out.components.resize(static_cast<std::size_t>(g_.dim));
  for (const auto& [coeff, tree] : x.terms()) {
    const CurrentElement piece = eval_tree(*this, g_, alg_, *tree);
    for (int i = 0; i < g_.dim; ++i)
      out.components[static_cast<std::size_t>(i)] +=
          alg_.scale(piece.components[static_cast<std::size_t>(i)], coeff);
  }
  return out;
}

gca::Derivation RepComplex::ad_action(int u) const {
  gca::Derivation d;
  d.degree_shift = 0;
  d.values.resize(alg_.generator_count());
  for (int v = 0; v < m_.generator_count(); ++v)
    for (int i = 0; i < g_.dim; ++i) {
      // The coadjoint action on the xi_i^* leg:
      // u . (xi_i^* (x) v) = -sum_k c^i_{uk} (xi_k^* (x) v).
      gca::Element value;
      for (int k = 0; k < g_.dim; ++k)
        for (const auto& [idx, c] : g_.bracket(u, k))
          if (idx == i) {
            gca::Element term = alg_.gen_element(generator_id(k, v));
            value -= alg_.scale(term, c);
          }
      d.values[static_cast<std::size_t>(generator_id(i, v))] =
          std::move(value);
    }
  return d;
}

void RepComplex::verify_d_squared(int max_degree) const {
  parallel_for(static_cast<std::size_t>(max_degree) + 1, [&](std::size_t n) {
    for (const auto& mono :
         alg_.monomials_of_degree(static_cast<int>(n))) {
      const gca::Element once = alg_.apply(diff_, mono);
      const gca::Element twice = alg_.apply(diff_, once);
      if (!twice.is_zero())
        throw MathError("differential does not square to zero on " +
                        alg_.monomial_str(mono));
    }
  });
}

std::map<std::pair<int, gca::Weight>, std::size_t> RepComplex::block_homology(
    int max_degree, bool invariant) const {
  if (max_degree < 0) throw InputError("max degree must be >= 0");
  if (invariant && g_.exponents.empty())
    throw InputError("invariants require a reductive coefficient algebra");

  using Key = std::pair<int, gca::Weight>;
  const int top = max_degree + 1;

  std::vector<std::map<gca::Weight, block::Block>> blocks(
      static_cast<std::size_t>(top) + 1);
  for (int n = 0; n <= top; ++n)
    for (const auto& mono : alg_.monomials_of_degree(n)) {
      const gca::Weight w =
          weighted_ ? alg_.weight(mono) : gca::weight_zero();
      block::Block& b = blocks[static_cast<std::size_t>(n)][w];
      b.index.emplace(mono, b.basis.size());
      b.basis.push_back(mono);
    }

  std::vector<Key> keys;
  for (int n = 0; n <= top; ++n)
    for (const auto& [w, b] : blocks[static_cast<std::size_t>(n)])
      keys.push_back({n, w});

  const block::Block empty_block;
  auto block_at = [&](int n, const gca::Weight& w) -> const block::Block& {
    if (n < 0) return empty_block;
    const auto& layer = blocks[static_cast<std::size_t>(n)];
    auto it = layer.find(w);
    return it == layer.end() ? empty_block : it->second;
  };

  std::map<Key, std::size_t> cycles_dim;  // block dim, or invariant dim
  std::map<Key, std::size_t> boundary_rank;

  if (!invariant) {
    std::vector<std::size_t> ranks(keys.size(), 0);
    parallel_for(keys.size(), [&](std::size_t i) {
      const auto& [n, w] = keys[i];
      if (n == 0) return;
      const auto m = block::operator_matrix(alg_, diff_, block_at(n, w),
                                            block_at(n - 1, w));
      ranks[i] = m.rank();
    });
    for (std::size_t i = 0; i < keys.size(); ++i) {
      const auto& [n, w] = keys[i];
      cycles_dim[keys[i]] = block_at(n, w).dim();
      boundary_rank[keys[i]] = ranks[i];
    }
  } else {
    std::vector<gca::Derivation> ad_ops;
    ad_ops.reserve(static_cast<std::size_t>(g_.dim));
    for (int u = 0; u < g_.dim; ++u) ad_ops.push_back(ad_action(u));

    std::vector<block::ColumnSpan> kernels(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
      const auto& [n, w] = keys[i];
      const block::Block& b = block_at(n, w);
      std::vector<linalg::SparseMatrix> ops;
      ops.reserve(ad_ops.size());
      for (const auto& op : ad_ops)
        ops.push_back(block::operator_matrix(alg_, op, b, b));
      kernels[i] = block::joint_kernel(b.dim(), ops);
    });
    std::map<Key, const block::ColumnSpan*> kernel_of;
    for (std::size_t i = 0; i < keys.size(); ++i)
      kernel_of[keys[i]] = &kernels[i];
    const block::ColumnSpan empty_span;
    auto span_at = [&](int n, const gca::Weight& w) -> const block::ColumnSpan& {
      auto it = kernel_of.find({n, w});
      return it == kernel_of.end() ? empty_span : *it->second;
    };

    std::vector<std::size_t> ranks(keys.size(), 0);
    parallel_for(keys.size(), [&](std::size_t i) {
      const auto& [n, w] = keys[i];
      if (n == 0) return;
      const block::Block& src = block_at(n, w);
      const block::Block& tgt = block_at(n - 1, w);
      const auto m = block::operator_matrix(alg_, diff_, src, tgt);
      const auto restricted = block::restrict_operator(
          m, span_at(n, w), span_at(n - 1, w), tgt.dim());
      ranks[i] = restricted.rank();
    });
    for (std::size_t i = 0; i < keys.size(); ++i) {
      cycles_dim[keys[i]] = kernels[i].size();
      boundary_rank[keys[i]] = ranks[i];
    }
  }

  std::map<Key, std::size_t> h;
  for (const auto& [key, dim] : cycles_dim) {
    const auto& [n, w] = key;
    if (n > max_degree) continue;
    auto rank_at = [&](int deg) -> std::size_t {
      auto it = boundary_rank.find({deg, w});
      return it == boundary_rank.end() ? 0 : it->second;
    };
    const std::size_t hn = dim - rank_at(n) - rank_at(n + 1);
    if (hn > 0) h[key] = hn;
  }
  return h;
}

PoincareSeries RepComplex::dims_to_series(
    const std::map<std::pair<int, gca::Weight>, std::size_t>& dims,
    int max_degree) const {
  PoincareSeries s(max_degree, weighted_ ? 1 : 0);
  for (const auto& [key, dim] : dims)
    s.add_term(key.first, Rat(static_cast<long>(dim)), key.second);
  return s;
}

std::vector<std::size_t> RepComplex::homology_dims(int max_degree) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [key, dim] : block_homology(max_degree, false))
    out[static_cast<std::size_t>(key.first)] += dim;
  return out;
}

PoincareSeries RepComplex::homology_series(int max_degree) const {
  return dims_to_series(block_homology(max_degree, false), max_degree);
}

std::vector<std::size_t> RepComplex::invariant_homology_dims(
    int max_degree) const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_degree) + 1, 0);
  for (const auto& [key, dim] : block_homology(max_degree, true))
    out[static_cast<std::size_t>(key.first)] += dim;
  return out;
}

PoincareSeries RepComplex::invariant_homology_series(int max_degree) const {
  return dims_to_series(block_homology(max_degree, true), max_degree);
}

LowDegreeReport RepComplex::low_degree_check(
    const std::vector<int>& reduced_h_dims, int connectivity) const {
  if (connectivity < 1) throw InputError("connectivity must be >= 1");
  const int top = 2 * connectivity - 1;
  const auto dims = homology_dims(top);
  LowDegreeReport report;
  for (int i = 0; i <= top; ++i) {
    LowDegreeRow row;
    row.degree = i;
    row.computed = dims[static_cast<std::size_t>(i)];
    if (i == 0) {
      row.expected = 1;
    } else if (i < connectivity) {
      row.expected = 0;
    } else {
      const std::size_t h =
          static_cast<std::size_t>(i) + 1 < reduced_h_dims.size()
              ? static_cast<std::size_t>(
                    reduced_h_dims[static_cast<std::size_t>(i) + 1])
              : 0;
      row.expected = h * static_cast<std::size_t>(g_.dim);
    }
    row.ok = row.computed == row.expected;
    if (!row.ok) report.pass = false;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace rephom::rep
