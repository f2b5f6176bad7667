#include "rephom/lie_algebra.hpp"

#include <algorithm>
#include <map>

#include <nlohmann/json.hpp>

#include "rephom/errors.hpp"

namespace rephom::lie {

namespace {

using Matrix = std::vector<std::vector<Rat>>;

Matrix zero_matrix(std::size_t n) {
  return Matrix(n, std::vector<Rat>(n, Rat(0)));
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zero_matrix(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (is_zero(a[i][k]) && is_zero(b[i][k])) continue;
      for (std::size_t j = 0; j < n; ++j)
        out[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  return out;
}

std::vector<Rat> flatten(const Matrix& m) {
  std::vector<Rat> out;
  out.reserve(m.size() * m.size());
  for (const auto& row : m)
    for (const auto& v : row) out.push_back(v);
  return out;
}

Coords sparsify(const std::vector<Rat>& dense) {
  Coords out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!is_zero(dense[i])) out.emplace_back(static_cast<int>(i), dense[i]);
  return out;
}

Coords negate(const Coords& c) {
  Coords out = c;
  for (auto& [i, v] : out) v = -v;
  return out;
}

// Elementary n x n matrix E_{rc}.
Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m = zero_matrix(n);
  m[r][c] = 1;
  return m;
}

struct MatrixBasis {
  std::vector<std::string> labels;
  std::vector<Matrix> mats;
  void add(std::string label, Matrix m) {
    labels.push_back(std::move(label));
    mats.push_back(std::move(m));
  }
};

MatrixBasis sl_basis(std::size_t n) {
  MatrixBasis b;
  // Raising, then Cartan, then lowering: e_{ij} (i<j), h_i, f_{ij} (i>j).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      b.add("e" + std::to_string(i + 1) + std::to_string(j + 1),
            unit_matrix(n, i, j));
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Matrix h = zero_matrix(n);
    h[i][i] = 1;
    h[i + 1][i + 1] = -1;
    b.add("h" + std::to_string(i + 1), std::move(h));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      b.add("f" + std::to_string(j + 1) + std::to_string(i + 1),
            unit_matrix(n, j, i));
  return b;
}

}  // namespace

void LieAlgebra::set_bracket(int i, int j, Coords coords) {
  if (brackets_.empty())
    brackets_.assign(dim, std::vector<Coords>(dim));
  brackets_[j][i] = negate(coords);
  brackets_[i][j] = std::move(coords);
}

const Coords& LieAlgebra::bracket(int i, int j) const { return brackets_[i][j]; }

bool LieAlgebra::abelian() const {
  for (const auto& row : brackets_)
    for (const auto& c : row)
      if (!c.empty()) return false;
  return true;
}

linalg::SparseMatrix LieAlgebra::ad_matrix(int i) const {
  linalg::SparseMatrix m(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (const auto& [k, v] : bracket(i, j)) m.add(k, j, v);
  return m;
}

std::vector<std::tuple<int, int, Rat>> LieAlgebra::cobracket(int k) const {
  std::vector<std::tuple<int, int, Rat>> out;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (const auto& [idx, v] : bracket(i, j))
        if (idx == k) {
          out.emplace_back(i, j, v);
          out.emplace_back(j, i, -v);
        }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) {
              return std::tie(std::get<0>(a), std::get<1>(a)) <
                     std::tie(std::get<0>(b), std::get<1>(b));
            });
  return out;
}

LieAlgebra LieAlgebra::from_matrices(
    std::string name, std::vector<std::string> labels,
    std::vector<std::vector<std::vector<Rat>>> matrices,
    std::vector<int> exponents) {
  LieAlgebra g;
  g.name = std::move(name);
  g.dim = static_cast<int>(matrices.size());
  g.basis = std::move(labels);
  g.exponents = std::move(exponents);
  g.defining_rep = matrices;
  g.brackets_.assign(g.dim, std::vector<Coords>(g.dim));

  // Express [b_i, b_j] in the basis by solving the flattened linear system.
  std::vector<std::vector<Rat>> basis_cols;
  for (const auto& m : matrices) basis_cols.push_back(flatten(m));
  const std::size_t flat = basis_cols.empty() ? 0 : basis_cols.front().size();
  const auto basis_matrix =
      linalg::SparseMatrix::from_columns(flat, basis_cols);

  std::vector<std::vector<Rat>> rhs;
  std::vector<std::pair<int, int>> index;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      rhs.push_back(flatten(commutator(matrices[i], matrices[j])));
      index.emplace_back(i, j);
    }
  if (!rhs.empty()) {
    const auto coords = basis_matrix.solve(rhs);
    for (std::size_t k = 0; k < index.size(); ++k)
      g.set_bracket(index[k].first, index[k].second, sparsify(coords[k]));
  }
  return g;
}

LieAlgebra LieAlgebra::builtin(const std::string& name) {
  if (name == "sl2") {
    MatrixBasis b;
    b.add("e", unit_matrix(2, 0, 1));
    Matrix h = zero_matrix(2);
    h[0][0] = 1;
    h[1][1] = -1;
    b.add("h", std::move(h));
    b.add("f", unit_matrix(2, 1, 0));
    return from_matrices("sl2", b.labels, b.mats, {1});
  }
  if (name == "sl3") {
    MatrixBasis b = sl_basis(3);
    return from_matrices("sl3", b.labels, b.mats, {1, 2});
  }
  if (name == "sl4") {
    MatrixBasis b = sl_basis(4);
    return from_matrices("sl4", b.labels, b.mats, {1, 2, 3});
  }
  if (name == "so4") {
    MatrixBasis b;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) {
        Matrix m = zero_matrix(4);
        m[i][j] = 1;
        m[j][i] = -1;
        b.add("L" + std::to_string(i + 1) + std::to_string(j + 1),
              std::move(m));
      }
    return from_matrices("so4", b.labels, b.mats, {1, 1});
  }
  if (name == "sp4") {
    // X = [[A, B], [C, -A^T]] with B, C symmetric 2x2.
    MatrixBasis b;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        Matrix m = zero_matrix(4);
        m[i][j] = 1;
        m[2 + j][2 + i] = -1;
        b.add("a" + std::to_string(i + 1) + std::to_string(j + 1),
              std::move(m));
      }
    auto sym_pair = [&](std::size_t off_r, std::size_t off_c,
                        const std::string& prefix) {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = i; j < 2; ++j) {
          Matrix m = zero_matrix(4);
          m[off_r + i][off_c + j] = 1;
          m[off_r + j][off_c + i] = 1;
          b.add(prefix + std::to_string(i + 1) + std::to_string(j + 1),
                std::move(m));
        }
    };
    sym_pair(0, 2, "b");
    sym_pair(2, 0, "c");
    return from_matrices("sp4", b.labels, b.mats, {1, 3});
  }
  if (name == "gl2") {
    MatrixBasis b;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        b.add("E" + std::to_string(i + 1) + std::to_string(j + 1),
              unit_matrix(2, i, j));
    return from_matrices("gl2", b.labels, b.mats, {0, 1});
  }
  if (name.rfind("torus:", 0) == 0) {
    const int n = std::stoi(name.substr(6));
    if (n < 1) throw InputError("torus rank must be >= 1");
    MatrixBasis b;
    for (int i = 0; i < n; ++i)
      b.add("t" + std::to_string(i + 1),
            unit_matrix(static_cast<std::size_t>(n),
                        static_cast<std::size_t>(i),
                        static_cast<std::size_t>(i)));
    return from_matrices(name, b.labels, b.mats, std::vector<int>(n, 0));
  }
  throw InputError("unknown builtin Lie algebra: " + name);
}

std::vector<std::string> LieAlgebra::builtin_names() {
  return {"sl2", "sl3", "sl4", "so4", "sp4", "gl2", "torus:n"};
}

void LieAlgebra::validate() const {
  if (dim <= 0 || static_cast<int>(basis.size()) != dim ||
      static_cast<int>(brackets_.size()) != dim)
    throw MathError("lie algebra shape mismatch");

  for (int i = 0; i < dim; ++i) {
    if (!bracket(i, i).empty()) throw MathError("[x,x] != 0 at " + basis[i]);
    for (int j = 0; j < dim; ++j) {
      std::map<int, Rat> sum;
      for (const auto& [k, v] : bracket(i, j)) sum[k] += v;
      for (const auto& [k, v] : bracket(j, i)) sum[k] += v;
      for (const auto& [k, v] : sum)
        if (!is_zero(v)) throw MathError("bracket not antisymmetric");
    }
  }

  // Jacobi: [x_i, [x_j, x_k]] + cyclic = 0 on all triples.
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        std::map<int, Rat> acc;
        auto add_term = [&](int a, int b, int c) {
          for (const auto& [m, v] : bracket(b, c))
            for (const auto& [l, w] : bracket(a, m)) acc[l] += v * w;
        };
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        for (const auto& [l, v] : acc)
          if (!is_zero(v))
            throw MathError("Jacobi identity fails on (" + basis[i] + "," +
                            basis[j] + "," + basis[k] + ")");
      }

  // Defining representation respects brackets.
  if (static_cast<int>(defining_rep.size()) != dim)
    throw MathError("defining representation missing entries");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Matrix lhs = commutator(defining_rep[i], defining_rep[j]);
      for (const auto& [k, v] : bracket(i, j))
        for (std::size_t r = 0; r < lhs.size(); ++r)
          for (std::size_t c = 0; c < lhs.size(); ++c)
            lhs[r][c] -= v * defining_rep[k][r][c];
      for (const auto& row : lhs)
        for (const auto& v : row)
          if (!is_zero(v))
            throw MathError("defining representation is not a homomorphism");
    }

  // Kostant: sum of (2 m_i + 1) over exponents equals dim for reductive g.
  int total = 0;
  for (int m : exponents) total += 2 * m + 1;
  if (total != dim)
    throw MathError("exponents inconsistent with dimension for " + name);
}

LieAlgebra LieAlgebra::from_json(const nlohmann::json& j) {
  LieAlgebra g;
  try {
    g.name = j.value("name", std::string("custom"));
    g.dim = j.at("dim").get<int>();
    g.basis = j.at("basis").get<std::vector<std::string>>();
    g.exponents = j.at("exponents").get<std::vector<int>>();
    if (g.dim <= 0) throw InputError("dim must be positive");
    if (static_cast<int>(g.basis.size()) != g.dim)
      throw InputError("basis size must match dim");
    g.brackets_.assign(g.dim, std::vector<Coords>(g.dim));
    for (const auto& entry : j.at("brackets")) {
      const int a = entry.at("i").get<int>();
      const int b = entry.at("j").get<int>();
      if (a < 0 || b < 0 || a >= g.dim || b >= g.dim || a >= b)
        throw InputError("bracket entry needs 0 <= i < j < dim");
      Coords coords;
      for (const auto& pair : entry.at("coords")) {
        const int k = pair.at(0).get<int>();
        if (k < 0 || k >= g.dim) throw InputError("bracket coord out of range");
        coords.emplace_back(k, rat_from_string(pair.at(1).get<std::string>()));
      }
      std::sort(coords.begin(), coords.end());
      g.set_bracket(a, b, std::move(coords));
    }
    for (const auto& mat : j.at("defining_rep")) {
      Matrix m;
      for (const auto& row : mat) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(rat_from_string(v.get<std::string>()));
        m.push_back(std::move(r));
      }
      if (m.size() != m.front().size())
        throw InputError("defining_rep matrices must be square");
      g.defining_rep.push_back(std::move(m));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed lie algebra JSON: ") + e.what());
  }
  g.validate();
  return g;
}

nlohmann::json LieAlgebra::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["dim"] = dim;
  j["basis"] = basis;
  j["exponents"] = exponents;
  nlohmann::json brackets = nlohmann::json::array();
  for (int i = 0; i < dim; ++i)
    for (int k = i + 1; k < dim; ++k) {
      if (bracket(i, k).empty()) continue;
      nlohmann::json entry;
      entry["i"] = i;
      entry["j"] = k;
      nlohmann::json coords = nlohmann::json::array();
      for (const auto& [idx, v] : bracket(i, k))
        coords.push_back({idx, rat_to_string(v)});
      entry["coords"] = coords;
      brackets.push_back(entry);
    }
  j["brackets"] = brackets;
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& m : defining_rep) {
    nlohmann::json mat = nlohmann::json::array();
    for (const auto& row : m) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(rat_to_string(v));
      mat.push_back(r);
    }
    reps.push_back(mat);
  }
  j["defining_rep"] = reps;
  return j;
}

}  // namespace rephom::lie
