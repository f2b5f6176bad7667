#include "rephom/sparse_matrix.hpp"

#include <algorithm>
#include <map>

#include "rephom/errors.hpp"

namespace rephom::linalg {

namespace {

using Entry = SparseMatrix::Entry;
using RatRow = std::vector<std::pair<std::size_t, Rat>>;
using IntRow = std::vector<std::pair<std::size_t, Int>>;

// Scales a rational row to coprime integers (content is irrelevant for rank).
IntRow to_int_row(const std::vector<Entry>& row) {
  Int scale(1);
  for (const auto& [c, v] : row)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den().get_mpz_t());
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row)
    out.emplace_back(c, Int(v.get_num() * (scale / v.get_den())));
  return out;
}

const Int* find_col(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

const Rat* find_col(const RatRow& row, std::size_t col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

// Fraction-free update: target := (pv*target - tv*pivot) / prev, all
// divisions exact by the Sylvester identity.
IntRow bareiss_update(const IntRow& target, const IntRow& pivot, const Int& pv,
                      const Int& tv, const Int& prev) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  const bool divide = prev != 1;
  Int value;
  while (i < target.size() || j < pivot.size()) {
    std::size_t col;
    if (j >= pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      col = target[i].first;
      value = pv * target[i].second;
      ++i;
    } else if (i >= target.size() || pivot[j].first < target[i].first) {
      col = pivot[j].first;
      value = -tv * pivot[j].second;
      ++j;
    } else {
      col = target[i].first;
      value = pv * target[i].second - tv * pivot[j].second;
      ++i;
      ++j;
    }
    if (sgn(value) == 0) continue;
    if (divide)
      mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), prev.get_mpz_t());
    out.emplace_back(col, value);
  }
  return out;
}

// Plain rational update: target := target - coeff * pivot.
RatRow gauss_update(const RatRow& target, const RatRow& pivot,
                    const Rat& coeff) {
  RatRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j >= pivot.size() ||
        (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back(target[i]);
      ++i;
    } else if (i >= target.size() || pivot[j].first < target[i].first) {
      Rat value = -coeff * pivot[j].second;
      if (!is_zero(value)) out.emplace_back(pivot[j].first, value);
      ++j;
    } else {
      Rat value = target[i].second - coeff * pivot[j].second;
      if (!is_zero(value)) out.emplace_back(target[i].first, value);
      ++i;
      ++j;
    }
  }
  return out;
}

// Selects the sparsest active row; among its entries (restricted to columns
// < col_limit) the column touching the fewest other active rows.  Returns
// (row, col) or row == npos when no pivot remains.
template <typename Row>
std::pair<std::size_t, std::size_t> select_pivot(
    const std::vector<Row>& work, const std::vector<char>& active,
    std::size_t col_limit) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t best_row = npos, best_nnz = 0;
  for (std::size_t r = 0; r < work.size(); ++r) {
    if (!active[r]) continue;
    std::size_t usable = 0;
    for (const auto& e : work[r])
      if (e.first < col_limit) ++usable;
    if (usable == 0) continue;
    if (best_row == npos || usable < best_nnz) {
      best_row = r;
      best_nnz = usable;
    }
  }
  if (best_row == npos) return {npos, npos};

  std::map<std::size_t, std::size_t> col_hits;
  for (std::size_t r = 0; r < work.size(); ++r) {
    if (!active[r] || r == best_row) continue;
    for (const auto& e : work[r])
      if (e.first < col_limit) ++col_hits[e.first];
  }
  std::size_t best_col = npos, best_hits = 0;
  for (const auto& e : work[best_row]) {
    if (e.first >= col_limit) continue;
    const auto it = col_hits.find(e.first);
    const std::size_t hits = it == col_hits.end() ? 0 : it->second;
    if (best_col == npos || hits < best_hits) {
      best_col = e.first;
      best_hits = hits;
    }
  }
  return {best_row, best_col};
}

struct Echelon {
  std::vector<RatRow> rows;                   // all rows after elimination
  std::vector<std::size_t> pivot_rows;        // in processing order
  std::vector<std::size_t> pivot_cols;        // parallel to pivot_rows
  std::vector<char> active;                   // rows never used as pivots
};

// Rational forward elimination with structural pivoting; pivot columns are
// restricted to < col_limit (used by solve() to keep the RHS passive).
Echelon eliminate(std::vector<RatRow> rows, std::size_t col_limit) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  Echelon ech;
  ech.active.assign(rows.size(), 1);
  while (true) {
    auto [pr, pc] = select_pivot(rows, ech.active, col_limit);
    if (pr == npos) break;
    const Rat pv = *find_col(rows[pr], pc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!ech.active[r] || r == pr) continue;
      const Rat* tv = find_col(rows[r], pc);
      if (tv != nullptr) rows[r] = gauss_update(rows[r], rows[pr], *tv / pv);
    }
    ech.active[pr] = 0;
    ech.pivot_rows.push_back(pr);
    ech.pivot_cols.push_back(pc);
  }
  ech.rows = std::move(rows);
  return ech;
}

void normalize_kernel_vector(std::vector<Rat>& v) {
  Int scale(1);
  for (const auto& x : v)
    if (!is_zero(x))
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den().get_mpz_t());
  Int content(0);
  for (auto& x : v) {
    x *= scale;
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (content > 1)
    for (auto& x : v) x /= content;
  for (const auto& x : v) {
    if (is_zero(x)) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
}

}  // namespace

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : n_rows_(rows), n_cols_(cols), rows_(rows) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Rat(1));
  return m;
}

SparseMatrix SparseMatrix::from_triplets(
    std::size_t rows, std::size_t cols,
    const std::vector<std::tuple<std::size_t, std::size_t, Rat>>& triplets) {
  SparseMatrix m(rows, cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols)
      throw InputError("triplet coordinates out of range");
    m.add(r, c, v);
  }
  return m;
}

SparseMatrix SparseMatrix::from_columns(
    std::size_t rows, const std::vector<std::vector<Rat>>& cols) {
  SparseMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw InputError("column length mismatch in from_columns");
    for (std::size_t r = 0; r < rows; ++r)
      if (!rephom::is_zero(cols[c][r])) m.rows_[r].emplace_back(c, cols[c][r]);
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

Rat SparseMatrix::at(std::size_t r, std::size_t c) const {
  const Rat* v = find_col(rows_[r], c);
  return v == nullptr ? Rat(0) : *v;
}

void SparseMatrix::add(std::size_t r, std::size_t c, const Rat& value) {
  if (rephom::is_zero(value)) return;
  auto& row = rows_[r];
  auto it = std::lower_bound(
      row.begin(), row.end(), c,
      [](const Entry& e, std::size_t col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += value;
    if (rephom::is_zero(it->second)) row.erase(it);
  } else {
    row.insert(it, Entry(c, value));
  }
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(n_cols_, n_rows_);
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (const auto& [c, v] : rows_[r]) t.rows_[c].emplace_back(r, v);
  return t;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (n_cols_ != rhs.n_rows_) throw InputError("dimension mismatch in product");
  SparseMatrix out(n_rows_, rhs.n_cols_);
  for (std::size_t r = 0; r < n_rows_; ++r) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [k, v] : rows_[r])
      for (const auto& [c, w] : rhs.rows_[k]) acc[c] += v * w;
    for (auto& [c, v] : acc)
      if (!rephom::is_zero(v)) out.rows_[r].emplace_back(c, v);
  }
  return out;
}

std::vector<Rat> SparseMatrix::apply(const std::vector<Rat>& x) const {
  if (x.size() != n_cols_) throw InputError("dimension mismatch in apply");
  std::vector<Rat> out(n_rows_, Rat(0));
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (const auto& [c, v] : rows_[r]) out[r] += v * x[c];
  return out;
}

std::vector<std::vector<Rat>> SparseMatrix::to_columns() const {
  std::vector<std::vector<Rat>> cols(n_cols_,
                                     std::vector<Rat>(n_rows_, Rat(0)));
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (const auto& [c, v] : rows_[r]) cols[c][r] = v;
  return cols;
}

std::size_t SparseMatrix::rank() const {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<IntRow> work;
  work.reserve(n_rows_);
  for (const auto& row : rows_)
    if (!row.empty()) work.push_back(to_int_row(row));
  std::vector<char> active(work.size(), 1);

  Int prev(1);
  std::size_t rank = 0;
  while (true) {
    auto [pr, pc] = select_pivot(work, active, n_cols_);
    if (pr == npos) break;
    const Int pv = *find_col(work[pr], pc);
    for (std::size_t r = 0; r < work.size(); ++r) {
      if (!active[r] || r == pr) continue;
      const Int* tv = find_col(work[r], pc);
      work[r] = bareiss_update(work[r], work[pr], pv, tv ? *tv : Int(0), prev);
    }
    active[pr] = 0;
    prev = pv;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Rat>> SparseMatrix::kernel_basis() const {
  std::vector<RatRow> rows(rows_.begin(), rows_.end());
  Echelon ech = eliminate(std::move(rows), n_cols_);

  std::vector<char> is_pivot_col(n_cols_, 0);
  for (std::size_t c : ech.pivot_cols) is_pivot_col[c] = 1;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < n_cols_; ++f) {
    if (is_pivot_col[f]) continue;
    std::vector<Rat> x(n_cols_, Rat(0));
    x[f] = 1;
    // Pivot row i contains no pivot column from earlier steps, so solving in
    // reverse processing order only meets already-known coordinates.
    for (std::size_t k = ech.pivot_rows.size(); k-- > 0;) {
      const RatRow& row = ech.rows[ech.pivot_rows[k]];
      const std::size_t pc = ech.pivot_cols[k];
      Rat acc(0);
      const Rat* pv = nullptr;
      for (const auto& [c, v] : row) {
        if (c == pc)
          pv = &v;
        else
          acc += v * x[c];
      }
      x[pc] = -acc / *pv;
    }
    normalize_kernel_vector(x);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<Rat>> SparseMatrix::solve(
    const std::vector<std::vector<Rat>>& rhs_cols) const {
  std::vector<RatRow> rows(rows_.begin(), rows_.end());
  for (auto& col : rhs_cols)
    if (col.size() != n_rows_) throw InputError("rhs length mismatch in solve");
  for (std::size_t r = 0; r < n_rows_; ++r)
    for (std::size_t j = 0; j < rhs_cols.size(); ++j)
      if (!rephom::is_zero(rhs_cols[j][r]))
        rows[r].emplace_back(n_cols_ + j, rhs_cols[j][r]);

  Echelon ech = eliminate(std::move(rows), n_cols_);
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    if (ech.active[r] && !ech.rows[r].empty())
      throw MathError("inconsistent linear system in solve");

  std::vector<std::vector<Rat>> result;
  for (std::size_t j = 0; j < rhs_cols.size(); ++j) {
    std::vector<Rat> x(n_cols_, Rat(0));
    for (std::size_t k = ech.pivot_rows.size(); k-- > 0;) {
      const RatRow& row = ech.rows[ech.pivot_rows[k]];
      const std::size_t pc = ech.pivot_cols[k];
      Rat acc(0);
      const Rat* pv = nullptr;
      for (const auto& [c, v] : row) {
        if (c == pc)
          pv = &v;
        else if (c < n_cols_)
          acc += v * x[c];
        else if (c == n_cols_ + j)
          acc -= v;
      }
      x[pc] = -acc / *pv;
    }
    result.push_back(std::move(x));
  }
  return result;
}

bool SparseMatrix::operator==(const SparseMatrix& other) const {
  return n_rows_ == other.n_rows_ && n_cols_ == other.n_cols_ &&
         rows_ == other.rows_;
}

}  // namespace rephom::linalg
