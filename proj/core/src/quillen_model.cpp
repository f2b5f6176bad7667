#include "rephom/quillen_model.hpp"

#include <sstream>

#include "rephom/errors.hpp"

namespace rephom::model {

namespace {

int tree_weight(const LieTree& t, std::span<const int> weights) {
  if (t.leaf >= 0) return weights[static_cast<std::size_t>(t.leaf)];
  return tree_weight(*t.left, weights) + tree_weight(*t.right, weights);
}

void check_tree_leaves(const LieTree& t, int n_gens) {
  if (t.leaf >= 0) {
    if (t.leaf >= n_gens)
      throw InputError("bracket tree references an undeclared generator");
    return;
  }
  check_tree_leaves(*t.left, n_gens);
  check_tree_leaves(*t.right, n_gens);
}

std::string word_to_string(const std::vector<int>& word,
                           const std::vector<std::string>& labels) {
  std::ostringstream out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out << "*";
    out << labels[static_cast<std::size_t>(word[i])];
  }
  return out.str();
}

}  // namespace

int QuillenModel::add_generator(std::string label, int degree,
                                std::optional<int> weight) {
  if (degree < 1)
    throw InputError("Quillen model generators need degree >= 1, got " +
                     std::to_string(degree) + " for " + label);
  if (name_to_id_.count(label))
    throw InputError("duplicate generator label " + label);
  if (!labels_.empty() && weight.has_value() != !weights_.empty())
    throw InputError("either all generators carry weights or none do");
  const int id = static_cast<int>(labels_.size());
  name_to_id_.emplace(label, id);
  labels_.push_back(std::move(label));
  degrees_.push_back(degree);
  if (weight) weights_.push_back(*weight);
  diff_.emplace_back();
  return id;
}

int QuillenModel::generator_id(const std::string& label) const {
  auto it = name_to_id_.find(label);
  if (it == name_to_id_.end())
    throw InputError("unknown generator " + label + " in model " + name_);
  return it->second;
}

void QuillenModel::set_differential(int gen, LieExpr value) {
  diff_[static_cast<std::size_t>(gen)] = std::move(value);
}

void QuillenModel::set_differential(const std::string& label, LieExpr value) {
  set_differential(generator_id(label), std::move(value));
}

LieExpr QuillenModel::apply_diff(const LieExpr& x) const {
  for (const auto& [c, tree] : x.terms())
    check_tree_leaves(*tree, generator_count());
  return derive(x, diff_, degrees_);
}

void QuillenModel::validate() const {
  if (!weights_.empty() && weights_.size() != labels_.size())
    throw MathError("model " + name_ + ": weight table is incomplete");
  for (int v = 0; v < generator_count(); ++v) {
    const LieExpr& dv = diff_[static_cast<std::size_t>(v)];
    for (const auto& [c, tree] : dv.terms()) {
      check_tree_leaves(*tree, generator_count());
      if (tree_degree(*tree, degrees_) != degree(v) - 1)
        throw MathError("model " + name_ + ": d(" + label(v) +
                        ") is not homogeneous of degree " +
                        std::to_string(degree(v) - 1));
      if (!weights_.empty() && tree_weight(*tree, weights_) != weight(v))
        throw MathError("model " + name_ + ": d(" + label(v) +
                        ") does not preserve weight");
    }
    const auto residue = tensor_normal_form(apply_diff(dv), degrees_);
    if (!residue.empty()) {
      std::ostringstream msg;
      msg << "model " << name_ << ": d^2(" << label(v)
          << ") != 0; residue has " << residue.size()
          << " tensor words, first " << rat_to_string(residue.begin()->second)
          << "*" << word_to_string(residue.begin()->first, labels_);
      throw MathError(msg.str());
    }
  }
}

nlohmann::json QuillenModel::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (int v = 0; v < generator_count(); ++v) {
    nlohmann::json g{{"name", label(v)}, {"degree", degree(v)}};
    if (!weights_.empty()) g["weight"] = weight(v);
    gens.push_back(std::move(g));
  }
  nlohmann::json diff = nlohmann::json::object();
  for (int v = 0; v < generator_count(); ++v) {
    const LieExpr& dv = diff_[static_cast<std::size_t>(v)];
    if (dv.empty()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [c, tree] : dv.terms())
      terms.push_back(nlohmann::json{{"coeff", rat_to_string(c)},
                                     {"term", tree_to_json(*tree, labels_)}});
    diff[label(v)] = std::move(terms);
  }
  return nlohmann::json{
      {"type", "quillen"}, {"name", name_}, {"generators", std::move(gens)},
      {"diff", std::move(diff)}};
}

QuillenModel QuillenModel::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("type", "") != "quillen")
    throw InputError("expected a model object with type \"quillen\"");
  QuillenModel m(j.value("name", "quillen-model"));
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("quillen model needs a generators array");
  for (const auto& g : j["generators"]) {
    std::optional<int> w;
    if (g.contains("weight")) w = g["weight"].get<int>();
    m.add_generator(g.at("name").get<std::string>(),
                    g.at("degree").get<int>(), w);
  }
  if (j.contains("diff")) {
    for (const auto& [label, terms] : j["diff"].items()) {
      LieExpr dv;
      for (const auto& t : terms)
        dv.add_term(rat_from_string(t.at("coeff").get<std::string>()),
                    tree_from_json(t.at("term"), m.name_to_id_));
      m.set_differential(label, std::move(dv));
    }
  }
  m.validate();
  return m;
}

}  // namespace rephom::model
