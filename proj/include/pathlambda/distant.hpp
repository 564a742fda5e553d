#ifndef PATHLAMBDA_DISTANT_HPP
#define PATHLAMBDA_DISTANT_HPP

// Reductions at a distance: balanced (b), focused (f) and erasing (e).
//
// A distant redex is a root path p A b L with b balanced. The A after p and
// the L after b are the pivotal pair; tree(p S) is the argument.

#include "pathlambda/path_core.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pathlambda {

/// Derivable from ε by wrapping (A p L) and concatenation. A/L only.
bool is_balanced(PathView labels);

/// (index of A, index of L) for every matching pair, sorted by A index.
/// Throws NotBalanced.
std::vector<std::pair<std::size_t, std::size_t>> match_pairs(PathView balanced);

struct DistantRedex {
  Path prefix;    // p
  Path balanced;  // b

  /// p A b L
  Path pivot_path() const;
  auto operator<=>(const DistantRedex&) const = default;
};

struct DistantRedexInfo {
  DistantRedex redex;
  bool active = false;
};

/// Index of the A matched by the L at `l_index`, scanning left over a
/// balanced stretch. When `skip_inner` is set, inner num-labels inside the
/// stretch are passed over (extended balanced paths).
std::optional<std::size_t> matching_app(PathView path, std::size_t l_index,
                                        bool skip_inner = false);

/// Some p A b L q n has n bound by the pivotal L. Throws NotADistantRedex.
bool is_active(const PathSet& tree, const DistantRedex& redex);

/// All distant redexes ordered by (p A b L, p), tagged active or inactive.
std::vector<DistantRedexInfo> find_distant_redexes(const PathSet& tree);

/// Replaces every occurrence bound by the pivotal L with a copy of tree(p S).
/// Num-labels of the copy that point above p are shifted past the new
/// binders. Throws NotADistantRedex or InactiveRedex.
PathSet b_step(const PathSet& tree, const DistantRedex& redex);

/// Replaces the single occurrence ending `occurrence` (which must be bound
/// by a pivotal L) with a copy of tree(p S). Throws PathNotInTree or
/// NotBoundByPivot.
PathSet f_step(const PathSet& tree, PathView occurrence);

/// Complete paths whose final num-label is bound by a pivotal L.
std::vector<Path> find_focused_redexes(const PathSet& tree);

/// Removes the argument branch and the pivotal A-L pair of an inactive
/// redex, decrementing labels that pointed past the pivot.
/// Throws NotADistantRedex or ActiveRedex.
PathSet e_step(const PathSet& tree, const DistantRedex& redex);

PathSet e_normal_form(const PathSet& tree);

enum class Relation { Beta, Balanced, Focused, Erasing };

/// All one-step reducts under `relation`, in redex order (may repeat).
std::vector<PathSet> one_step_reducts(const PathSet& tree, Relation relation);

/// Breadth-first search for a common reduct of `left` and `right`, taking at
/// most `bound` steps from each side. Returns the least common reduct in
/// canonical order at the first depth where one exists.
std::optional<PathSet> joinable(const PathSet& left, const PathSet& right, Relation relation,
                                std::size_t bound);

}  // namespace pathlambda

#endif  // PATHLAMBDA_DISTANT_HPP
