#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rephom/rational.hpp"

namespace rephom::model {

// One term of an expression in a free graded Lie algebra: a generator leaf
// (leaf >= 0) or a bracket node with two subtrees.
struct LieTree;
using TreePtr = std::shared_ptr<const LieTree>;

struct LieTree {
  int leaf = -1;
  TreePtr left;
  TreePtr right;
};

TreePtr make_leaf(int generator_id);
TreePtr make_bracket(TreePtr left, TreePtr right);

int tree_degree(const LieTree& t, std::span<const int> generator_degrees);

// Formal rational combination of bracket trees.  Terms are kept as written;
// cancellation is detected through the tensor normal form below.
class LieExpr {
 public:
  static LieExpr zero() { return LieExpr{}; }
  static LieExpr generator(int id);

  void add_term(Rat coeff, TreePtr tree);
  LieExpr& operator+=(const LieExpr& other);
  LieExpr& operator*=(const Rat& c);

  static LieExpr bracket(const LieExpr& a, const LieExpr& b);

  const std::vector<std::pair<Rat, TreePtr>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

 private:
  std::vector<std::pair<Rat, TreePtr>> terms_;
};

// Image in the tensor algebra under [x,y] -> xy - (-1)^{|x||y|} yx, as words
// of generator ids.  The free graded Lie algebra embeds, so an expression is
// zero exactly when its normal form is empty.
std::map<std::vector<int>, Rat> tensor_normal_form(
    const LieExpr& e, std::span<const int> generator_degrees);

// Extends generator images to a degree -1 derivation:
// d[x,y] = [dx,y] + (-1)^{|x|}[x,dy].
LieExpr derive(const LieExpr& e, const std::vector<LieExpr>& d_of_generator,
               std::span<const int> generator_degrees);

// Bracket trees serialize as ["b", left, right] with generator names at the
// leaves.
nlohmann::json tree_to_json(const LieTree& t,
                            std::span<const std::string> generator_names);
TreePtr tree_from_json(const nlohmann::json& j,
                       const std::map<std::string, int>& name_to_id);

}  // namespace rephom::model
