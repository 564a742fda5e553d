#ifndef PATHLAMBDA_NAME_BRIDGE_HPP
#define PATHLAMBDA_NAME_BRIDGE_HPP

// Namecarrying terms and the conversions to and from namefree trees. The
// capture-avoiding beta step here serves as the reference oracle for the
// path-based reductions.

#include "pathlambda/path_core.hpp"

#include <memory>
#include <string>
#include <vector>

namespace pathlambda {

class NamedTree {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App };

  static NamedTree var(std::string name);
  static NamedTree lam(std::string binder, NamedTree body);
  static NamedTree app(NamedTree fun, NamedTree arg);

  Kind kind() const { return node_->kind; }
  // Variable name for Var, binder name for Lam.
  const std::string& name() const { return node_->name; }
  const NamedTree& body() const { return node_->children[0]; }
  const NamedTree& fun() const { return node_->children[0]; }
  const NamedTree& arg() const { return node_->children[1]; }

  std::size_t size() const;
  /// Syntactic equality (names included).
  bool operator==(const NamedTree& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<NamedTree> children;
  };
  explicit NamedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Variable-free tree: preorder shape string over 'L' (abstraction),
/// 'A' (application) and '.' (variable edge).
struct Skeleton {
  std::string shape;
  bool operator==(const Skeleton&) const = default;
};

/// Throws OpenTerm or DuplicateBinder.
LambdaTree to_namefree(const NamedTree& term);

/// Binders are named x1, x2, ... in preorder. Throws OpenTerm.
NamedTree to_namecarrying(const LambdaTree& tree);

Skeleton skeleton(const NamedTree& term);
Skeleton skeleton(const LambdaTree& tree);

bool alpha_eq(const NamedTree& a, const NamedTree& b);
bool alpha_eq(const NamedTree& a, const LambdaTree& b);

/// Beta step at the application reached by `address` (A/L/S directions from
/// the root). Substitution is capture avoiding and the result is renamed so
/// that binders are again pairwise distinct. Throws NotARedex.
NamedTree nc_beta_step(const NamedTree& term, PathView address);

/// Renames every binder to x1, x2, ... in preorder.
NamedTree canonical_names(const NamedTree& term);

}  // namespace pathlambda

#endif  // PATHLAMBDA_NAME_BRIDGE_HPP
