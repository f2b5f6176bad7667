#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rephom/gc_algebra.hpp"
#include "rephom/rational.hpp"

namespace rephom::model {

// Free graded-commutative cochain algebra on generators of cohomological
// degree >= 2 with a weight-preserving differential of degree +1.  The
// augmentation sends every generator to zero.
class SullivanModel {
 public:
  explicit SullivanModel(std::string name);

  int add_generator(std::string label, int degree,
                    gca::Weight weight = gca::weight_zero());
  void set_differential(int gen, gca::Element value);
  void set_differential(const std::string& label, gca::Element value);

  int generator_count() const {
    return static_cast<int>(algebra_.generator_count());
  }
  int generator_id(const std::string& label) const;
  const gca::FreeGcAlgebra& algebra() const { return algebra_; }
  const gca::Derivation& diff() const { return diff_; }
  const std::string& name() const { return name_; }

  // Number of weight components in use: 0, 1, or 2.
  int weight_rank() const;

  void validate() const;

  nlohmann::json to_json() const;
  static SullivanModel from_json(const nlohmann::json& j);

 private:
  std::string name_;
  gca::FreeGcAlgebra algebra_;
  gca::Derivation diff_;
  std::map<std::string, int> name_to_id_;
};

}  // namespace rephom::model
