#ifndef PATHLAMBDA_EXPANDING_HPP
#define PATHLAMBDA_EXPANDING_HPP

// Extended trees, expanding focused reduction and the pushdown automaton that
// resolves binders through inner num-labels.

#include "pathlambda/path_core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pathlambda {

/// Replaces the complete path `occurrence` = p A b L q n (n bound by the
/// pivotal L) by p A b L q n tree(p S): n becomes an inner label with the
/// argument attached below it. Throws PathNotInTree or NotBoundByPivot.
ExtendedTree ef_step(const ExtendedTree& tree, PathView occurrence);

/// Complete paths that are ef-redexes.
std::vector<Path> find_ef_redexes(const ExtendedTree& tree);

/// Every complete path of `t` is a root path of `t2`.
bool includes(const ExtendedTree& t, const ExtendedTree& t2);
bool strictly_includes(const ExtendedTree& t, const ExtendedTree& t2);

// ---- binder resolution ----------------------------------------------------

enum class BinderMode { FindL, FindLAndA };

enum class PdaRule { R2, R3, R4, R5, R6, R7, R8, R9a, R9b };

std::string_view rule_name(PdaRule rule);  // "2", ..., "9a", "9b"

struct PdaState {
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  auto operator<=>(const PdaState&) const = default;
};

struct PdaConfiguration {
  Path left;
  PdaState state;
  Path right;
  std::vector<PdaState> stack;  // top at the back
};

struct PdaStep {
  PdaConfiguration config;  // configuration the rule fires from
  PdaRule rule;
  std::optional<PdaState> pushed;
  std::optional<PdaState> popped;
};

struct BinderResolution {
  std::size_t l_index = 0;    // 0-based label index of the binding L
  std::size_t l_ordinal = 0;  // the binding L is the l_ordinal-th L from the left
  std::optional<std::size_t> a_index;  // matching A (FindLAndA mode only)
  std::size_t steps = 0;
  std::size_t max_stack_depth = 0;
};

struct PdaTrace {
  std::vector<PdaStep> steps;
  BinderResolution result;
};

/// Rules whose guards hold for the state with `left` immediately to its left
/// (nullopt at the left end of the path).
std::vector<PdaRule> applicable_rules(std::optional<Label> left, PdaState state,
                                      bool stack_empty);

/// Finds the binder of the num-label at `position` of `path`; labels after
/// `position` are ignored. Throws UnboundVariable or MalformedPath.
BinderResolution resolve_binder(PathView path, std::size_t position,
                                BinderMode mode = BinderMode::FindL);
BinderResolution resolve_binder(PathView path, BinderMode mode = BinderMode::FindL);

PdaTrace pda_trace(PathView path, std::size_t position, BinderMode mode = BinderMode::FindL);

/// "A L (2,0) L 3  [stack: (1,1)]"
std::string format_configuration(const PdaConfiguration& config);

// ---- binder-tracking oracle -----------------------------------------------

/// Extended tree in which every L carries a node identity and every
/// num-label (inner or outer) carries the identity of its binding L.
class AnnotatedTree {
 public:
  using Id = std::uint64_t;
  using Kind = LambdaTree::Kind;

  /// Annotates a tree without inner labels by the plain binding rule.
  /// Throws OpenTerm or MalformedPath.
  static AnnotatedTree annotate(const LambdaTree& tree);

  LambdaTree strip() const;

  struct Node {
    Kind kind;
    std::uint32_t index = 0;  // num-label value (Var / Inner)
    Id id = 0;                // own identity (Lam) or binder identity (Var / Inner)
    std::vector<std::shared_ptr<const Node>> children;
  };

  const Node& root() const { return *root_; }

 private:
  friend AnnotatedTree ef_step_annotated(const AnnotatedTree&, PathView);
  AnnotatedTree(std::shared_ptr<const Node> root, Id next_id)
      : root_(std::move(root)), next_id_(next_id) {}
  std::shared_ptr<const Node> root_;
  Id next_id_ = 1;
};

/// ef_step carried out on the annotated tree: the binder comes from the
/// annotation rather than the automaton, and the copied argument gets fresh
/// identities for its own binders.
AnnotatedTree ef_step_annotated(const AnnotatedTree& tree, PathView occurrence);

struct AnnotatedOccurrence {
  Path path;               // root path up to and including the num-label
  std::size_t position;    // index of the num-label in `path`
  std::size_t binder_index;  // index of its annotated binder in `path`
};

std::vector<AnnotatedOccurrence> occurrences(const AnnotatedTree& tree);

}  // namespace pathlambda

#endif  // PATHLAMBDA_EXPANDING_HPP
