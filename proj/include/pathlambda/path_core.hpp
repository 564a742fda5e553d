#ifndef PATHLAMBDA_PATH_CORE_HPP
#define PATHLAMBDA_PATH_CORE_HPP

// Branch-focused representation of namefree lambda terms.
//
// A term is a rooted, edge-labeled tree. Abstraction edges carry L, the
// function edge of an application carries A and the argument edge carries S,
// and a variable is a dangling edge carrying its index. The tree is identified
// with the set of its complete (root-to-leaf) label strings.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pathlambda {

enum class ErrorCode {
  ParseError,
  NotProperPath,
  Requirement1Violated,
  Requirement2Violated,
  Requirement3Violated,
  EmptyInput,
  PathNotInTree,
  NotARootPath,
  NotARedex,
  OpenTerm,
  DuplicateBinder,
  NotBalanced,
  NotADistantRedex,
  InactiveRedex,
  ActiveRedex,
  NotBoundByPivot,
  UnboundVariable,
  MalformedPath,
  FuelExhausted,
};

std::string_view error_name(ErrorCode code);

// True for errors caused by malformed input, false for violated
// preconditions on well-formed input.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One edge label. Ordered L < A < S < 1 < 2 < ...
class Label {
 public:
  enum class Kind : std::uint8_t { L, A, S, Num };

  static constexpr Label lam() { return Label(0); }
  static constexpr Label app() { return Label(1); }
  static constexpr Label arg() { return Label(2); }
  static Label num(std::uint32_t n);

  constexpr Kind kind() const {
    return code_ < 3 ? static_cast<Kind>(code_) : Kind::Num;
  }
  constexpr bool is_num() const { return code_ >= 3; }
  constexpr bool is(Kind k) const { return kind() == k; }
  // Index of a num-label; 0 for A, L, S.
  constexpr std::uint32_t value() const { return is_num() ? code_ - 2 : 0; }

  constexpr auto operator<=>(const Label&) const = default;

 private:
  constexpr explicit Label(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

std::string to_string(Label label);

using Path = std::vector<Label>;
using PathView = std::span<const Label>;

/// Total number of labels.
std::size_t length(PathView path);
/// Number of L labels.
std::size_t l_length(PathView path);
/// Non-empty, all labels but the last in {A, L, S}, last a num-label.
bool is_proper(PathView path);
/// Non-empty and ending in a num-label; inner num-labels allowed.
bool is_extended_path(PathView path);
bool starts_with(PathView path, PathView prefix);
Path concat(std::initializer_list<PathView> parts);

std::string to_string(PathView path);
/// Parses space-separated labels ("A L S 3"). The empty string, "ε" and
/// "eps" give the empty path.
Path parse_path(std::string_view text);

/// Canonical, duplicate-free, sorted set of complete paths.
///
/// Construction sorts and deduplicates but does not validate; use
/// validate_path_set to check that the paths form a lambda-tree.
class PathSet {
 public:
  PathSet() = default;
  explicit PathSet(std::vector<Path> paths);
  PathSet(std::initializer_list<std::string_view> paths);

  const std::vector<Path>& paths() const { return paths_; }
  auto begin() const { return paths_.begin(); }
  auto end() const { return paths_.end(); }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  bool contains(PathView path) const;
  /// Some member strictly extends `prefix` or equals it (ε counts).
  bool has_root_path(PathView prefix) const;
  /// Some member strictly extends `prefix`.
  bool has_proper_extension(PathView prefix) const;
  /// Some member carries an inner num-label.
  bool is_extended() const;
  /// Total label count.
  std::size_t weight() const;

  auto operator<=>(const PathSet&) const = default;
  bool operator==(const PathSet&) const = default;

 private:
  std::vector<Path> paths_;
};

std::string to_string(const PathSet& set);

/// Inductive tree. The Inner kind only occurs in extended trees: an inner
/// num-label with the tree attached below its edge.
class LambdaTree {
 public:
  enum class Kind : std::uint8_t { Var, Lam, App, Inner };

  static LambdaTree var(std::uint32_t n);
  static LambdaTree lam(LambdaTree body);
  static LambdaTree app(LambdaTree fun, LambdaTree arg);
  static LambdaTree inner(std::uint32_t n, LambdaTree continuation);

  Kind kind() const { return node_->kind; }
  std::uint32_t index() const { return node_->index; }
  const LambdaTree& body() const { return node_->children[0]; }
  const LambdaTree& fun() const { return node_->children[0]; }
  const LambdaTree& arg() const { return node_->children[1]; }
  const LambdaTree& continuation() const { return node_->children[0]; }

  /// Number of nodes (edges) in the tree.
  std::size_t size() const;
  bool operator==(const LambdaTree& other) const;

 private:
  struct Node {
    Kind kind;
    std::uint32_t index = 0;
    std::vector<LambdaTree> children;
  };
  explicit LambdaTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

using ExtendedTree = LambdaTree;

bool is_extended(const LambdaTree& tree);

PathSet paths_of(const LambdaTree& tree);

/// Runs the recursive L / A-S / num case analysis on an arbitrary candidate
/// set and returns the tree whose complete paths it is. Throws Error with
/// NotProperPath, Requirement{1,2,3}Violated or EmptyInput.
LambdaTree validate_path_set(std::vector<Path> candidate);
LambdaTree validate_path_set(const PathSet& candidate);

/// Same procedure extended with inner num-labels: a set whose paths all start
/// with the same num-label j followed by more labels is an Inner(j) node.
LambdaTree validate_extended_path_set(std::vector<Path> candidate);

/// Index of the L binding the final num-label of `complete_path`, or nullopt
/// if the label is free. Only meaningful for paths without inner num-labels.
std::optional<std::size_t> binder_index(PathView complete_path);

/// As binder_index, but requires `complete_path` to be a member of `tree`.
std::optional<std::size_t> binder_position(const PathSet& tree, PathView complete_path);

bool is_closed(const PathSet& tree);
bool is_closed(const LambdaTree& tree);

/// tree(p) = { q | p q complete in t }. ε gives the whole tree.
PathSet grafted_tree(const PathSet& tree, PathView prefix);

/// Path file: one path per line, '#' comments and blank lines ignored.
std::vector<Path> parse_path_file(std::string_view text);
std::string format_path_set(const PathSet& set);

}  // namespace pathlambda

template <>
struct std::hash<pathlambda::PathSet> {
  std::size_t operator()(const pathlambda::PathSet& set) const noexcept;
};

#endif  // PATHLAMBDA_PATH_CORE_HPP
