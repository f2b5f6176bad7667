#include "rephom/sullivan_model.hpp"

#include <algorithm>

#include "rephom/errors.hpp"

namespace rephom::model {

SullivanModel::SullivanModel(std::string name) : name_(std::move(name)) {
  diff_.degree_shift = 1;
}

int SullivanModel::add_generator(std::string label, int degree,
                                 gca::Weight weight) {
  if (degree < 2)
    throw InputError("Sullivan model generators need degree >= 2, got " +
                     std::to_string(degree) + " for " + label);
  if (name_to_id_.count(label))
    throw InputError("duplicate generator label " + label);
  const int id = algebra_.add_generator(label, degree, weight);
  name_to_id_.emplace(std::move(label), id);
  diff_.values.emplace_back();
  return id;
}

int SullivanModel::generator_id(const std::string& label) const {
  auto it = name_to_id_.find(label);
  if (it == name_to_id_.end())
    throw InputError("unknown generator " + label + " in model " + name_);
  return it->second;
}

void SullivanModel::set_differential(int gen, gca::Element value) {
  diff_.values[static_cast<std::size_t>(gen)] = std::move(value);
}

void SullivanModel::set_differential(const std::string& label,
                                     gca::Element value) {
  set_differential(generator_id(label), std::move(value));
}

int SullivanModel::weight_rank() const {
  int rank = 0;
  for (int g = 0; g < generator_count(); ++g) {
    const auto& w = algebra_.generator(g).weight;
    if (w[1] != 0) return 2;
    if (w[0] != 0) rank = 1;
  }
  return rank;
}

void SullivanModel::validate() const {
  for (int g = 0; g < generator_count(); ++g) {
    const auto& gen = algebra_.generator(g);
    const gca::Element& dg = diff_.values[static_cast<std::size_t>(g)];
    for (const auto& [mono, c] : dg.terms) {
      if (algebra_.degree(mono) != gen.degree + 1)
        throw MathError("model " + name_ + ": d(" + gen.label +
                        ") is not homogeneous of degree " +
                        std::to_string(gen.degree + 1));
      if (algebra_.weight(mono) != gen.weight)
        throw MathError("model " + name_ + ": d(" + gen.label +
                        ") does not preserve weight");
    }
    const gca::Element dd = algebra_.apply(diff_, dg);
    if (!dd.is_zero())
      throw MathError("model " + name_ + ": d^2(" + gen.label +
                      ") != 0; residue " + algebra_.element_str(dd));
  }
}

nlohmann::json SullivanModel::to_json() const {
  const bool tuple_weights = weight_rank() == 2;
  nlohmann::json gens = nlohmann::json::array();
  for (int g = 0; g < generator_count(); ++g) {
    const auto& gen = algebra_.generator(g);
    nlohmann::json jg{{"name", gen.label}, {"degree", gen.degree}};
    if (tuple_weights)
      jg["weight"] = nlohmann::json::array({gen.weight[0], gen.weight[1]});
    else
      jg["weight"] = gen.weight[0];
    gens.push_back(std::move(jg));
  }
  nlohmann::json diff = nlohmann::json::object();
  for (int g = 0; g < generator_count(); ++g) {
    const gca::Element& dg = diff_.values[static_cast<std::size_t>(g)];
    if (dg.is_zero()) continue;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [mono, c] : dg.terms) {
      nlohmann::json jm = nlohmann::json::object();
      for (const auto& [id, exp] : mono.powers)
        jm[algebra_.generator(id).label] = exp;
      terms.push_back(
          nlohmann::json{{"coeff", rat_to_string(c)}, {"term", std::move(jm)}});
    }
    diff[algebra_.generator(g).label] = std::move(terms);
  }
  return nlohmann::json{{"type", "sullivan"},
                        {"name", name_},
                        {"generators", std::move(gens)},
                        {"diff", std::move(diff)}};
}

SullivanModel SullivanModel::from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("type", "") != "sullivan")
    throw InputError("expected a model object with type \"sullivan\"");
  SullivanModel m(j.value("name", "sullivan-model"));
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("sullivan model needs a generators array");
  for (const auto& g : j["generators"]) {
    gca::Weight w = gca::weight_zero();
    if (g.contains("weight")) {
      const auto& jw = g["weight"];
      if (jw.is_number_integer()) {
        w[0] = jw.get<int>();
      } else if (jw.is_array() && jw.size() <= 2) {
        for (std::size_t i = 0; i < jw.size(); ++i) w[i] = jw[i].get<int>();
      } else {
        throw InputError("generator weight must be an int or a pair");
      }
    }
    m.add_generator(g.at("name").get<std::string>(), g.at("degree").get<int>(),
                    w);
  }
  if (j.contains("diff")) {
    for (const auto& [label, terms] : j["diff"].items()) {
      const int gen = m.generator_id(label);
      gca::Element value;
      for (const auto& t : terms) {
        gca::Monomial mono;
        for (const auto& [gname, exp] : t.at("term").items())
          mono.powers.emplace_back(m.generator_id(gname), exp.get<int>());
        std::sort(mono.powers.begin(), mono.powers.end());
        gca::Element piece;
        piece.terms.emplace(std::move(mono),
                            rat_from_string(t.at("coeff").get<std::string>()));
        value += piece;
      }
      m.set_differential(gen, std::move(value));
    }
  }
  m.validate();
  return m;
}

}  // namespace rephom::model
