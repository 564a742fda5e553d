#include "pathlambda/expanding.hpp"

#include "pathlambda/distant.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>

namespace pathlambda {
namespace {

// Follows `path` from the root; nullptr-like failure is reported as nullopt.
std::optional<LambdaTree> subtree_at(const LambdaTree& tree, PathView path) {
  LambdaTree node = tree;
  for (auto label : path) {
    using K = LambdaTree::Kind;
    if (label == Label::lam() && node.kind() == K::Lam) {
      node = node.body();
    } else if (label == Label::app() && node.kind() == K::App) {
      node = node.fun();
    } else if (label == Label::arg() && node.kind() == K::App) {
      node = node.arg();
    } else if (label.is_num() && node.kind() == K::Inner && node.index() == label.value()) {
      node = node.continuation();
    } else {
      return std::nullopt;
    }
  }
  return node;
}

bool is_complete(const LambdaTree& tree, PathView path) {
  if (path.empty() || !path.back().is_num()) return false;
  auto leaf = subtree_at(tree, path.first(path.size() - 1));
  return leaf && leaf->kind() == LambdaTree::Kind::Var && leaf->index() == path.back().value();
}

LambdaTree replace_leaf(const LambdaTree& node, PathView path, std::size_t depth,
                        const LambdaTree& replacement) {
  if (depth + 1 == path.size()) return replacement;
  switch (node.kind()) {
    case LambdaTree::Kind::Lam:
      return LambdaTree::lam(replace_leaf(node.body(), path, depth + 1, replacement));
    case LambdaTree::Kind::App:
      if (path[depth] == Label::app())
        return LambdaTree::app(replace_leaf(node.fun(), path, depth + 1, replacement), node.arg());
      return LambdaTree::app(node.fun(), replace_leaf(node.arg(), path, depth + 1, replacement));
    case LambdaTree::Kind::Inner:
      return LambdaTree::inner(node.index(),
                               replace_leaf(node.continuation(), path, depth + 1, replacement));
    case LambdaTree::Kind::Var:
      break;
  }
  throw Error(ErrorCode::PathNotInTree, "\"" + to_string(path) + "\"");
}

}  // namespace

ExtendedTree ef_step(const ExtendedTree& tree, PathView occurrence) {
  if (!is_complete(tree, occurrence))
    throw Error(ErrorCode::PathNotInTree, "\"" + to_string(occurrence) + "\"");
  BinderResolution binder;
  try {
    binder = resolve_binder(occurrence, occurrence.size() - 1, BinderMode::FindLAndA);
  } catch (const Error& e) {
    throw Error(ErrorCode::NotBoundByPivot, e.what());
  }
  if (!binder.a_index)
    throw Error(ErrorCode::NotBoundByPivot,
                "binder of \"" + to_string(occurrence) + "\" has no matching A");
  const Path arg_path = concat({occurrence.first(*binder.a_index), Path{Label::arg()}});
  auto argument = subtree_at(tree, arg_path);
  if (!argument) throw Error(ErrorCode::MalformedPath, "no argument below the pivotal A");
  return replace_leaf(tree, occurrence, 0,
                      LambdaTree::inner(occurrence.back().value(), *argument));
}

std::vector<Path> find_ef_redexes(const ExtendedTree& tree) {
  std::vector<Path> out;
  for (const auto& path : paths_of(tree)) {
    try {
      if (resolve_binder(path, BinderMode::FindLAndA).a_index) out.push_back(path);
    } catch (const Error&) {
    }
  }
  return out;
}

bool includes(const ExtendedTree& t, const ExtendedTree& t2) {
  const PathSet mine = paths_of(t);
  const PathSet theirs = paths_of(t2);
  return std::all_of(mine.begin(), mine.end(),
                     [&](const Path& p) { return theirs.has_root_path(p); });
}

bool strictly_includes(const ExtendedTree& t, const ExtendedTree& t2) {
  return includes(t, t2) && !(t == t2);
}

std::string_view rule_name(PdaRule rule) {
  switch (rule) {
    case PdaRule::R2: return "2";
    case PdaRule::R3: return "3";
    case PdaRule::R4: return "4";
    case PdaRule::R5: return "5";
    case PdaRule::R6: return "6";
    case PdaRule::R7: return "7";
    case PdaRule::R8: return "8";
    case PdaRule::R9a: return "9a";
    case PdaRule::R9b: return "9b";
  }
  return "?";
}

std::vector<PdaRule> applicable_rules(std::optional<Label> left, PdaState s, bool stack_empty) {
  const bool has = left.has_value();
  auto is = [&](Label::Kind k) { return has && left->kind() == k; };
  std::vector<PdaRule> rules;
  if (is(Label::Kind::L) && s.m > 0) rules.push_back(PdaRule::R2);
  if (is(Label::Kind::A) && s.m > 0) rules.push_back(PdaRule::R3);
  if (is(Label::Kind::S) && s.m > 0) rules.push_back(PdaRule::R4);
  if (is(Label::Kind::Num) && s.m > 0) rules.push_back(PdaRule::R5);
  if (is(Label::Kind::L) && s.m == 0 && s.k > 0) rules.push_back(PdaRule::R6);
  if (is(Label::Kind::A) && s.m == 0 && s.k > 0) rules.push_back(PdaRule::R7);
  if (is(Label::Kind::Num) && s.m == 0 && s.k > 0) rules.push_back(PdaRule::R8);
  if (s.m == 0 && s.k == 0 && !stack_empty) rules.push_back(PdaRule::R9a);
  if (s.m == 0 && s.k == 0 && stack_empty) rules.push_back(PdaRule::R9b);
  return rules;
}

namespace {

BinderResolution run_pda(PathView path, std::size_t position, BinderMode mode,
                         std::vector<PdaStep>* trace) {
  if (position >= path.size() || !path[position].is_num())
    throw Error(ErrorCode::MalformedPath, "position " + std::to_string(position) +
                                              " of \"" + to_string(path) + "\" is not a num-label");
  const std::uint32_t start_k = mode == BinderMode::FindLAndA ? 1 : 0;
  PdaState state{path[position].value(), start_k};
  std::vector<PdaState> stack;
  std::size_t pos = position;  // the state sits between path[pos-1] and path[pos]
  BinderResolution result;
  bool l_found = false;

  while (true) {
    std::optional<Label> left;
    if (pos > 0) left = path[pos - 1];
    const auto rules = applicable_rules(left, state, stack.empty());
    assert(rules.size() <= 1);
    if (rules.empty()) {
      if (stack.empty() && l_found) return result;  // no matching A at top level
      if (state.m > 0 && pos == 0)
        throw Error(ErrorCode::UnboundVariable,
                    "label at " + std::to_string(position) + " of \"" + to_string(path) + "\"");
      throw Error(ErrorCode::MalformedPath, "no transition applies in \"" + to_string(path) + "\"");
    }
    const PdaRule rule = rules.front();
    if (trace) {
      PdaStep step{{Path(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(pos)), state,
                    Path(path.begin() + static_cast<std::ptrdiff_t>(pos),
                         path.begin() + static_cast<std::ptrdiff_t>(position) + 1),
                    stack},
                   rule, std::nullopt, std::nullopt};
      if (rule == PdaRule::R5) step.pushed = state;
      if (rule == PdaRule::R9a) step.popped = stack.back();
      trace->push_back(std::move(step));
    }
    ++result.steps;
    switch (rule) {
      case PdaRule::R2:
        --state.m;
        --pos;
        if (state.m == 0 && stack.empty()) {
          result.l_index = pos;
          l_found = true;
        }
        break;
      case PdaRule::R3:
      case PdaRule::R4:
        --pos;
        break;
      case PdaRule::R5:
        stack.push_back(state);
        result.max_stack_depth = std::max(result.max_stack_depth, stack.size());
        state = {path[pos - 1].value(), 1};
        --pos;
        break;
      case PdaRule::R6:
        ++state.k;
        --pos;
        break;
      case PdaRule::R7:
        --state.k;
        --pos;
        break;
      case PdaRule::R8:
        --pos;
        break;
      case PdaRule::R9a:
        state = stack.back();
        stack.pop_back();
        break;
      case PdaRule::R9b:
        if (mode == BinderMode::FindLAndA) {
          result.a_index = pos;
        } else {
          result.l_index = pos;
        }
        result.l_ordinal = l_length(path.first(result.l_index + 1));
        return result;
    }
  }
}

}  // namespace

BinderResolution resolve_binder(PathView path, std::size_t position, BinderMode mode) {
  auto result = run_pda(path, position, mode, nullptr);
  result.l_ordinal = l_length(path.first(result.l_index + 1));
  return result;
}

BinderResolution resolve_binder(PathView path, BinderMode mode) {
  if (path.empty()) throw Error(ErrorCode::MalformedPath, "empty path");
  return resolve_binder(path, path.size() - 1, mode);
}

PdaTrace pda_trace(PathView path, std::size_t position, BinderMode mode) {
  PdaTrace trace;
  trace.result = run_pda(path, position, mode, &trace.steps);
  trace.result.l_ordinal = l_length(path.first(trace.result.l_index + 1));
  return trace;
}

std::string format_configuration(const PdaConfiguration& config) {
  std::string out = to_string(config.left);
  if (!out.empty()) out += ' ';
  out += "(" + std::to_string(config.state.m) + "," + std::to_string(config.state.k) + ") ";
  out += to_string(config.right);
  if (!config.stack.empty()) {
    out += "  [stack:";
    for (const auto& s : config.stack)
      out += " (" + std::to_string(s.m) + "," + std::to_string(s.k) + ")";
    out += "]";
  }
  return out;
}

// ---- annotated trees --------------------------------------------------------

namespace {

using ANode = AnnotatedTree::Node;
using ANodePtr = std::shared_ptr<const ANode>;

ANodePtr make_node(LambdaTree::Kind kind, std::uint32_t index, AnnotatedTree::Id id,
                   std::vector<ANodePtr> children) {
  return std::make_shared<const ANode>(ANode{kind, index, id, std::move(children)});
}

ANodePtr annotate_node(const LambdaTree& t, std::vector<AnnotatedTree::Id>& scope,
                       AnnotatedTree::Id& next) {
  switch (t.kind()) {
    case LambdaTree::Kind::Var:
      if (t.index() > scope.size())
        throw Error(ErrorCode::OpenTerm, "index " + std::to_string(t.index()) + " is free");
      return make_node(t.kind(), t.index(), scope[scope.size() - t.index()], {});
    case LambdaTree::Kind::Lam: {
      const auto id = next++;
      scope.push_back(id);
      auto body = annotate_node(t.body(), scope, next);
      scope.pop_back();
      return make_node(t.kind(), 0, id, {std::move(body)});
    }
    case LambdaTree::Kind::App: {
      auto fun = annotate_node(t.fun(), scope, next);
      return make_node(t.kind(), 0, 0, {std::move(fun), annotate_node(t.arg(), scope, next)});
    }
    case LambdaTree::Kind::Inner:
      break;
  }
  throw Error(ErrorCode::MalformedPath, "annotate expects a tree without inner labels");
}

LambdaTree strip_node(const ANode& n) {
  switch (n.kind) {
    case LambdaTree::Kind::Var: return LambdaTree::var(n.index);
    case LambdaTree::Kind::Lam: return LambdaTree::lam(strip_node(*n.children[0]));
    case LambdaTree::Kind::App:
      return LambdaTree::app(strip_node(*n.children[0]), strip_node(*n.children[1]));
    case LambdaTree::Kind::Inner:
      return LambdaTree::inner(n.index, strip_node(*n.children[0]));
  }
  throw Error(ErrorCode::MalformedPath, "unknown node");
}

const ANode* child_along(const ANode& n, Label label) {
  using K = LambdaTree::Kind;
  if (label == Label::lam() && n.kind == K::Lam) return n.children[0].get();
  if (label == Label::app() && n.kind == K::App) return n.children[0].get();
  if (label == Label::arg() && n.kind == K::App) return n.children[1].get();
  if (label.is_num() && n.kind == K::Inner && n.index == label.value()) return n.children[0].get();
  return nullptr;
}

ANodePtr copy_fresh(const ANodePtr& n, std::unordered_map<AnnotatedTree::Id, AnnotatedTree::Id>& ids,
                    AnnotatedTree::Id& next) {
  std::vector<ANodePtr> children;
  AnnotatedTree::Id id = n->id;
  if (n->kind == LambdaTree::Kind::Lam) {
    id = next++;
    ids[n->id] = id;
  } else if (n->kind != LambdaTree::Kind::App) {
    if (auto it = ids.find(n->id); it != ids.end()) id = it->second;
  }
  for (const auto& c : n->children) children.push_back(copy_fresh(c, ids, next));
  return make_node(n->kind, n->index, id, std::move(children));
}

ANodePtr replace_annotated(const ANodePtr& n, PathView path, std::size_t depth,
                           const ANodePtr& replacement) {
  if (depth + 1 == path.size()) return replacement;
  auto children = n->children;
  const std::size_t which = path[depth] == Label::arg() ? 1 : 0;
  children[which] = replace_annotated(children[which], path, depth + 1, replacement);
  return make_node(n->kind, n->index, n->id, std::move(children));
}

void collect_occurrences(const ANode& n, Path& path, std::vector<AnnotatedTree::Id>& ids,
                         std::vector<AnnotatedOccurrence>& out) {
  auto record = [&](std::uint32_t index) {
    path.push_back(Label::num(index));
    ids.push_back(0);
    auto it = std::find(ids.begin(), ids.end(), n.id);
    if (it == ids.end() || n.id == 0)
      throw Error(ErrorCode::MalformedPath, "annotation points outside the path");
    out.push_back({path, path.size() - 1, static_cast<std::size_t>(it - ids.begin())});
  };
  switch (n.kind) {
    case LambdaTree::Kind::Var:
      record(n.index);
      path.pop_back();
      ids.pop_back();
      return;
    case LambdaTree::Kind::Inner:
      record(n.index);
      collect_occurrences(*n.children[0], path, ids, out);
      path.pop_back();
      ids.pop_back();
      return;
    case LambdaTree::Kind::Lam:
      path.push_back(Label::lam());
      ids.push_back(n.id);
      collect_occurrences(*n.children[0], path, ids, out);
      path.pop_back();
      ids.pop_back();
      return;
    case LambdaTree::Kind::App:
      path.push_back(Label::app());
      ids.push_back(0);
      collect_occurrences(*n.children[0], path, ids, out);
      path.back() = Label::arg();
      collect_occurrences(*n.children[1], path, ids, out);
      path.pop_back();
      ids.pop_back();
      return;
  }
}

}  // namespace

AnnotatedTree AnnotatedTree::annotate(const LambdaTree& tree) {
  std::vector<Id> scope;
  Id next = 1;
  auto root = annotate_node(tree, scope, next);
  return AnnotatedTree(std::move(root), next);
}

LambdaTree AnnotatedTree::strip() const { return strip_node(*root_); }

AnnotatedTree ef_step_annotated(const AnnotatedTree& tree, PathView occurrence) {
  // Walk the path, remembering node identities and the argument subtrees.
  std::vector<const AnnotatedTree::Node*> nodes{tree.root_.get()};
  for (std::size_t i = 0; i + 1 < occurrence.size(); ++i) {
    const auto* next = child_along(*nodes.back(), occurrence[i]);
    if (!next) throw Error(ErrorCode::PathNotInTree, "\"" + to_string(occurrence) + "\"");
    nodes.push_back(next);
  }
  const auto& leaf = *nodes.back();
  if (occurrence.empty() || leaf.kind != LambdaTree::Kind::Var ||
      leaf.index != occurrence.back().value())
    throw Error(ErrorCode::PathNotInTree, "\"" + to_string(occurrence) + "\"");

  std::optional<std::size_t> l_index;
  for (std::size_t i = 0; i + 1 < occurrence.size(); ++i)
    if (nodes[i]->kind == LambdaTree::Kind::Lam && nodes[i]->id == leaf.id) l_index = i;
  if (!l_index) throw Error(ErrorCode::NotBoundByPivot, "binder not on the path");
  const auto a_index = matching_app(occurrence, *l_index, /*skip_inner=*/true);
  if (!a_index) throw Error(ErrorCode::NotBoundByPivot, "binder has no matching A");

  const auto& application = *nodes[*a_index];
  std::unordered_map<AnnotatedTree::Id, AnnotatedTree::Id> ids;
  AnnotatedTree::Id next = tree.next_id_;
  auto copy = copy_fresh(application.children[1], ids, next);
  auto inner = make_node(LambdaTree::Kind::Inner, leaf.index, leaf.id, {std::move(copy)});
  return AnnotatedTree(replace_annotated(tree.root_, occurrence, 0, inner), next);
}

std::vector<AnnotatedOccurrence> occurrences(const AnnotatedTree& tree) {
  std::vector<AnnotatedOccurrence> out;
  Path path;
  std::vector<AnnotatedTree::Id> ids;
  collect_occurrences(tree.root(), path, ids, out);
  return out;
}

}  // namespace pathlambda
