#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rephom/lie_expr.hpp"
#include "rephom/rational.hpp"

namespace rephom::model {

// Free graded Lie algebra on finitely many generators of homological degree
// >= 1, with a differential of degree -1 sending each generator to a Lie
// expression.  An optional integer weight per generator lets validate() check
// that the differential is weight-homogeneous.
class QuillenModel {
 public:
  explicit QuillenModel(std::string name) : name_(std::move(name)) {}

  int add_generator(std::string label, int degree,
                    std::optional<int> weight = std::nullopt);
  void set_differential(int gen, LieExpr value);
  void set_differential(const std::string& label, LieExpr value);

  int generator_count() const { return static_cast<int>(labels_.size()); }
  int generator_id(const std::string& label) const;
  const std::string& label(int gen) const {
    return labels_[static_cast<std::size_t>(gen)];
  }
  int degree(int gen) const { return degrees_[static_cast<std::size_t>(gen)]; }
  std::span<const int> degrees() const { return degrees_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool has_weights() const { return !weights_.empty(); }
  int weight(int gen) const { return weights_[static_cast<std::size_t>(gen)]; }
  const LieExpr& differential(int gen) const {
    return diff_[static_cast<std::size_t>(gen)];
  }
  const std::vector<LieExpr>& differentials() const { return diff_; }
  const std::string& name() const { return name_; }

  // Extends the differential over an expression by the graded Leibniz rule.
  LieExpr apply_diff(const LieExpr& x) const;

  // Checks degree homogeneity of each dv, weight homogeneity when weights are
  // declared, and d^2 = 0 through the tensor normal form.  Throws MathError
  // naming the offending generator.
  void validate() const;

  nlohmann::json to_json() const;
  static QuillenModel from_json(const nlohmann::json& j);

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::vector<int> weights_;  // empty when unweighted
  std::vector<LieExpr> diff_;
  std::map<std::string, int> name_to_id_;
};

}  // namespace rephom::model
