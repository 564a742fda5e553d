#include "pathlambda/name_bridge.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace pathlambda {

NamedTree NamedTree::var(std::string name) {
  return NamedTree(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

NamedTree NamedTree::lam(std::string binder, NamedTree body) {
  return NamedTree(
      std::make_shared<const Node>(Node{Kind::Lam, std::move(binder), {std::move(body)}}));
}

NamedTree NamedTree::app(NamedTree fun, NamedTree arg) {
  return NamedTree(
      std::make_shared<const Node>(Node{Kind::App, {}, {std::move(fun), std::move(arg)}}));
}

std::size_t NamedTree::size() const {
  std::size_t total = 1;
  for (const auto& child : node_->children) total += child.size();
  return total;
}

bool NamedTree::operator==(const NamedTree& other) const {
  if (node_ == other.node_) return true;
  return kind() == other.kind() && name() == other.name() &&
         node_->children == other.node_->children;
}

namespace {

void collect_binders(const NamedTree& t, std::vector<std::string>& out) {
  switch (t.kind()) {
    case NamedTree::Kind::Var: return;
    case NamedTree::Kind::Lam:
      out.push_back(t.name());
      collect_binders(t.body(), out);
      return;
    case NamedTree::Kind::App:
      collect_binders(t.fun(), out);
      collect_binders(t.arg(), out);
      return;
  }
}

// Innermost binder wins, so shadowing is tolerated here.
LambdaTree convert(const NamedTree& t, std::vector<std::string>& scope) {
  switch (t.kind()) {
    case NamedTree::Kind::Var: {
      auto it = std::find(scope.rbegin(), scope.rend(), t.name());
      if (it == scope.rend()) throw Error(ErrorCode::OpenTerm, "free variable " + t.name());
      return LambdaTree::var(static_cast<std::uint32_t>(it - scope.rbegin()) + 1);
    }
    case NamedTree::Kind::Lam: {
      scope.push_back(t.name());
      auto body = convert(t.body(), scope);
      scope.pop_back();
      return LambdaTree::lam(std::move(body));
    }
    case NamedTree::Kind::App:
      return LambdaTree::app(convert(t.fun(), scope), convert(t.arg(), scope));
  }
  throw Error(ErrorCode::MalformedPath, "unknown node");
}

NamedTree name_binders(const LambdaTree& t, std::vector<std::string>& scope, std::size_t& counter) {
  switch (t.kind()) {
    case LambdaTree::Kind::Var:
      if (t.index() > scope.size())
        throw Error(ErrorCode::OpenTerm, "index " + std::to_string(t.index()) + " is free");
      return NamedTree::var(scope[scope.size() - t.index()]);
    case LambdaTree::Kind::Lam: {
      std::string name = "x" + std::to_string(++counter);
      scope.push_back(name);
      auto body = name_binders(t.body(), scope, counter);
      scope.pop_back();
      return NamedTree::lam(std::move(name), std::move(body));
    }
    case LambdaTree::Kind::App: {
      auto fun = name_binders(t.fun(), scope, counter);
      return NamedTree::app(std::move(fun), name_binders(t.arg(), scope, counter));
    }
    case LambdaTree::Kind::Inner:
      throw Error(ErrorCode::MalformedPath, "inner num-label in a namefree term");
  }
  throw Error(ErrorCode::MalformedPath, "unknown node");
}

void shape_of(const NamedTree& t, std::string& out) {
  switch (t.kind()) {
    case NamedTree::Kind::Var: out += '.'; return;
    case NamedTree::Kind::Lam: out += 'L'; shape_of(t.body(), out); return;
    case NamedTree::Kind::App:
      out += 'A';
      shape_of(t.fun(), out);
      shape_of(t.arg(), out);
      return;
  }
}

void shape_of(const LambdaTree& t, std::string& out) {
  switch (t.kind()) {
    case LambdaTree::Kind::Var: out += '.'; return;
    case LambdaTree::Kind::Lam: out += 'L'; shape_of(t.body(), out); return;
    case LambdaTree::Kind::App:
      out += 'A';
      shape_of(t.fun(), out);
      shape_of(t.arg(), out);
      return;
    case LambdaTree::Kind::Inner:
      out += '.';
      shape_of(t.continuation(), out);
      return;
  }
}

void free_vars(const NamedTree& t, std::vector<std::string>& bound, std::set<std::string>& out) {
  switch (t.kind()) {
    case NamedTree::Kind::Var:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end()) out.insert(t.name());
      return;
    case NamedTree::Kind::Lam:
      bound.push_back(t.name());
      free_vars(t.body(), bound, out);
      bound.pop_back();
      return;
    case NamedTree::Kind::App:
      free_vars(t.fun(), bound, out);
      free_vars(t.arg(), bound, out);
      return;
  }
}

std::set<std::string> free_vars(const NamedTree& t) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  free_vars(t, bound, out);
  return out;
}

void all_names(const NamedTree& t, std::set<std::string>& out) {
  if (t.kind() != NamedTree::Kind::App) out.insert(t.name());
  if (t.kind() == NamedTree::Kind::Lam) all_names(t.body(), out);
  if (t.kind() == NamedTree::Kind::App) {
    all_names(t.fun(), out);
    all_names(t.arg(), out);
  }
}

class Substitution {
 public:
  Substitution(std::string var, NamedTree replacement, std::set<std::string> taken)
      : var_(std::move(var)),
        replacement_(std::move(replacement)),
        replacement_free_(free_vars(replacement_)),
        taken_(std::move(taken)) {
    taken_.insert(replacement_free_.begin(), replacement_free_.end());
    taken_.insert(var_);
  }

  NamedTree apply(const NamedTree& t) { return subst(t, var_, replacement_, replacement_free_); }

 private:
  std::string fresh() {
    std::string name;
    do {
      name = "v" + std::to_string(++counter_);
    } while (taken_.count(name));
    taken_.insert(name);
    return name;
  }

  NamedTree subst(const NamedTree& t, const std::string& x, const NamedTree& n,
                  const std::set<std::string>& n_free) {
    switch (t.kind()) {
      case NamedTree::Kind::Var:
        return t.name() == x ? n : t;
      case NamedTree::Kind::App:
        return NamedTree::app(subst(t.fun(), x, n, n_free), subst(t.arg(), x, n, n_free));
      case NamedTree::Kind::Lam: {
        if (t.name() == x) return t;
        if (n_free.count(t.name()) && free_vars(t.body()).count(x)) {
          std::string z = fresh();
          NamedTree renamed = subst(t.body(), t.name(), NamedTree::var(z), {z});
          return NamedTree::lam(z, subst(renamed, x, n, n_free));
        }
        return NamedTree::lam(t.name(), subst(t.body(), x, n, n_free));
      }
    }
    return t;
  }

  std::string var_;
  NamedTree replacement_;
  std::set<std::string> replacement_free_;
  std::set<std::string> taken_;
  std::size_t counter_ = 0;
};

NamedTree rename(const NamedTree& t, std::vector<std::pair<std::string, std::string>>& scope,
                 std::size_t& counter) {
  switch (t.kind()) {
    case NamedTree::Kind::Var: {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == t.name()) return NamedTree::var(it->second);
      return t;
    }
    case NamedTree::Kind::Lam: {
      std::string name = "x" + std::to_string(++counter);
      scope.emplace_back(t.name(), name);
      auto body = rename(t.body(), scope, counter);
      scope.pop_back();
      return NamedTree::lam(std::move(name), std::move(body));
    }
    case NamedTree::Kind::App: {
      auto fun = rename(t.fun(), scope, counter);
      return NamedTree::app(std::move(fun), rename(t.arg(), scope, counter));
    }
  }
  return t;
}

NamedTree rewrite_at(const NamedTree& t, PathView address, std::size_t depth) {
  if (depth == address.size()) {
    if (t.kind() != NamedTree::Kind::App || t.fun().kind() != NamedTree::Kind::Lam)
      throw Error(ErrorCode::NotARedex, "\"" + to_string(address) + "\" is not a beta redex");
    const NamedTree& lambda = t.fun();
    std::set<std::string> taken;
    all_names(lambda.body(), taken);
    Substitution s(lambda.name(), t.arg(), std::move(taken));
    return s.apply(lambda.body());
  }
  const Label step = address[depth];
  if (step == Label::lam() && t.kind() == NamedTree::Kind::Lam)
    return NamedTree::lam(t.name(), rewrite_at(t.body(), address, depth + 1));
  if (step == Label::app() && t.kind() == NamedTree::Kind::App)
    return NamedTree::app(rewrite_at(t.fun(), address, depth + 1), t.arg());
  if (step == Label::arg() && t.kind() == NamedTree::Kind::App)
    return NamedTree::app(t.fun(), rewrite_at(t.arg(), address, depth + 1));
  throw Error(ErrorCode::NotARedex, "\"" + to_string(address) + "\" leaves the term");
}

}  // namespace

LambdaTree to_namefree(const NamedTree& term) {
  std::vector<std::string> binders;
  collect_binders(term, binders);
  std::sort(binders.begin(), binders.end());
  if (auto dup = std::adjacent_find(binders.begin(), binders.end()); dup != binders.end())
    throw Error(ErrorCode::DuplicateBinder, *dup);
  std::vector<std::string> scope;
  return convert(term, scope);
}

NamedTree to_namecarrying(const LambdaTree& tree) {
  std::vector<std::string> scope;
  std::size_t counter = 0;
  return name_binders(tree, scope, counter);
}

Skeleton skeleton(const NamedTree& term) {
  Skeleton s;
  shape_of(term, s.shape);
  return s;
}

Skeleton skeleton(const LambdaTree& tree) {
  Skeleton s;
  shape_of(tree, s.shape);
  return s;
}

bool alpha_eq(const NamedTree& a, const NamedTree& b) {
  try {
    std::vector<std::string> sa, sb;
    return convert(a, sa) == convert(b, sb);
  } catch (const Error&) {
    return false;
  }
}

bool alpha_eq(const NamedTree& a, const LambdaTree& b) {
  try {
    std::vector<std::string> scope;
    return convert(a, scope) == b;
  } catch (const Error&) {
    return false;
  }
}

NamedTree nc_beta_step(const NamedTree& term, PathView address) {
  return canonical_names(rewrite_at(term, address, 0));
}

NamedTree canonical_names(const NamedTree& term) {
  std::vector<std::pair<std::string, std::string>> scope;
  std::size_t counter = 0;
  return rename(term, scope, counter);
}

}  // namespace pathlambda
