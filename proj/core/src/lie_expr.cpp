#include "rephom/lie_expr.hpp"

#include "rephom/errors.hpp"

namespace rephom::model {

TreePtr make_leaf(int generator_id) {
  auto t = std::make_shared<LieTree>();
  t->leaf = generator_id;
  return t;
}

TreePtr make_bracket(TreePtr left, TreePtr right) {
  auto t = std::make_shared<LieTree>();
  t->left = std::move(left);
  t->right = std::move(right);
  return t;
}

int tree_degree(const LieTree& t, std::span<const int> generator_degrees) {
  if (t.leaf >= 0) return generator_degrees[static_cast<std::size_t>(t.leaf)];
  return tree_degree(*t.left, generator_degrees) +
         tree_degree(*t.right, generator_degrees);
}

LieExpr LieExpr::generator(int id) {
  LieExpr e;
  e.add_term(Rat(1), make_leaf(id));
  return e;
}

void LieExpr::add_term(Rat coeff, TreePtr tree) {
  if (is_zero(coeff)) return;
  terms_.emplace_back(std::move(coeff), std::move(tree));
}

LieExpr& LieExpr::operator+=(const LieExpr& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

LieExpr& LieExpr::operator*=(const Rat& c) {
  if (is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [coeff, tree] : terms_) coeff *= c;
  return *this;
}

LieExpr LieExpr::bracket(const LieExpr& a, const LieExpr& b) {
  LieExpr out;
  for (const auto& [ca, ta] : a.terms_)
    for (const auto& [cb, tb] : b.terms_)
      out.add_term(ca * cb, make_bracket(ta, tb));
  return out;
}

namespace {

using Tensor = std::map<std::vector<int>, Rat>;

void tensor_add(Tensor& into, const Tensor& t, const Rat& scale) {
  for (const auto& [word, c] : t) {
    auto it = into.find(word);
    if (it == into.end()) {
      into.emplace(word, c * scale);
    } else {
      it->second += c * scale;
      if (is_zero(it->second)) into.erase(it);
    }
  }
}

Tensor tensor_concat(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      std::vector<int> word = wa;
      word.insert(word.end(), wb.begin(), wb.end());
      auto it = out.find(word);
      if (it == out.end()) {
        out.emplace(std::move(word), ca * cb);
      } else {
        it->second += ca * cb;
        if (is_zero(it->second)) out.erase(it);
      }
    }
  return out;
}

Tensor tree_tensor(const LieTree& t, std::span<const int> degrees) {
  if (t.leaf >= 0) return Tensor{{std::vector<int>{t.leaf}, Rat(1)}};
  const Tensor a = tree_tensor(*t.left, degrees);
  const Tensor b = tree_tensor(*t.right, degrees);
  const int da = tree_degree(*t.left, degrees);
  const int db = tree_degree(*t.right, degrees);
  Tensor out = tensor_concat(a, b);
  tensor_add(out, tensor_concat(b, a), Rat((da * db) % 2 != 0 ? 1 : -1));
  return out;
}

LieExpr derive_tree(const LieTree& t, const std::vector<LieExpr>& d_of_gen,
                    std::span<const int> degrees) {
  if (t.leaf >= 0) return d_of_gen[static_cast<std::size_t>(t.leaf)];
  LieExpr out = LieExpr::bracket(derive_tree(*t.left, d_of_gen, degrees),
                                 [&] {
                                   LieExpr r;
                                   r.add_term(Rat(1), t.right);
                                   return r;
                                 }());
  LieExpr left_fixed;
  left_fixed.add_term(Rat(1), t.left);
  LieExpr rhs = LieExpr::bracket(left_fixed,
                                 derive_tree(*t.right, d_of_gen, degrees));
  rhs *= Rat(tree_degree(*t.left, degrees) % 2 != 0 ? -1 : 1);
  out += rhs;
  return out;
}

}  // namespace

std::map<std::vector<int>, Rat> tensor_normal_form(
    const LieExpr& e, std::span<const int> generator_degrees) {
  Tensor out;
  for (const auto& [c, tree] : e.terms())
    tensor_add(out, tree_tensor(*tree, generator_degrees), c);
  return out;
}

LieExpr derive(const LieExpr& e, const std::vector<LieExpr>& d_of_generator,
               std::span<const int> generator_degrees) {
  LieExpr out;
  for (const auto& [c, tree] : e.terms()) {
    LieExpr dt = derive_tree(*tree, d_of_generator, generator_degrees);
    dt *= c;
    out += dt;
  }
  return out;
}

nlohmann::json tree_to_json(const LieTree& t,
                            std::span<const std::string> generator_names) {
  if (t.leaf >= 0) return generator_names[static_cast<std::size_t>(t.leaf)];
  return nlohmann::json::array(
      {"b", tree_to_json(*t.left, generator_names),
       tree_to_json(*t.right, generator_names)});
}

TreePtr tree_from_json(const nlohmann::json& j,
                       const std::map<std::string, int>& name_to_id) {
  if (j.is_string()) {
    auto it = name_to_id.find(j.get<std::string>());
    if (it == name_to_id.end())
      throw InputError("unknown generator name in bracket tree: " +
                       j.get<std::string>());
    return make_leaf(it->second);
  }
  if (!j.is_array() || j.size() != 3 || !j[0].is_string() ||
      j[0].get<std::string>() != "b")
    throw InputError("bracket tree nodes must be [\"b\", left, right]");
  return make_bracket(tree_from_json(j[1], name_to_id),
                      tree_from_json(j[2], name_to_id));
}

}  // namespace rephom::model
