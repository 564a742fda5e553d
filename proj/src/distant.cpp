#include "pathlambda/distant.hpp"

#include "pathlambda/classic_beta.hpp"

#include <algorithm>
#include <set>

namespace pathlambda {

bool is_balanced(PathView labels) {
  std::ptrdiff_t open = 0;
  for (auto label : labels) {
    if (label == Label::app()) {
      ++open;
    } else if (label == Label::lam()) {
      if (--open < 0) return false;
    } else {
      return false;
    }
  }
  return open == 0;
}

std::vector<std::pair<std::size_t, std::size_t>> match_pairs(PathView balanced) {
  if (!is_balanced(balanced))
    throw Error(ErrorCode::NotBalanced, "\"" + to_string(balanced) + "\"");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < balanced.size(); ++i) {
    if (balanced[i] == Label::app()) {
      open.push_back(i);
    } else {
      pairs.emplace_back(open.back(), i);
      open.pop_back();
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

Path DistantRedex::pivot_path() const {
  return concat({prefix, Path{Label::app()}, balanced, Path{Label::lam()}});
}

std::optional<std::size_t> matching_app(PathView path, std::size_t l_index, bool skip_inner) {
  std::size_t depth = 1;
  for (std::size_t i = l_index; i-- > 0;) {
    const Label label = path[i];
    if (label == Label::lam()) {
      ++depth;
    } else if (label == Label::app()) {
      if (--depth == 0) return i;
    } else if (!(label.is_num() && skip_inner)) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

Path check_redex(const PathSet& tree, const DistantRedex& redex) {
  if (!is_balanced(redex.balanced))
    throw Error(ErrorCode::NotADistantRedex,
                "\"" + to_string(redex.balanced) + "\" is not balanced");
  Path pivot = redex.pivot_path();
  if (!tree.has_proper_extension(pivot))
    throw Error(ErrorCode::NotADistantRedex, "\"" + to_string(pivot) + "\" is not a root path");
  return pivot;
}

bool pivot_binds(PathView path, std::size_t pivot_len) {
  auto b = binder_index(path);
  return b && *b == pivot_len - 1;
}

// Copies tree(p S) below `site`, shifting labels that escape the argument by
// `shift`.
void graft_argument(const PathSet& argument, PathView site, std::uint32_t shift,
                    std::vector<Path>& out) {
  for (const auto& rl : argument) {
    const PathView r(rl.begin(), rl.end() - 1);
    const auto r_len = static_cast<std::uint32_t>(l_length(r));
    const std::uint32_t l = rl.back().value();
    out.push_back(concat({site, r, Path{Label::num(l <= r_len ? l : l + shift)}}));
  }
}

}  // namespace

bool is_active(const PathSet& tree, const DistantRedex& redex) {
  const Path pivot = check_redex(tree, redex);
  return std::any_of(tree.begin(), tree.end(), [&](const Path& path) {
    return starts_with(path, pivot) && pivot_binds(path, pivot.size());
  });
}

std::vector<DistantRedexInfo> find_distant_redexes(const PathSet& tree) {
  std::set<std::pair<Path, Path>> seen;  // (p A b L, p)
  std::vector<DistantRedexInfo> out;
  for (const auto& path : tree) {
    for (std::size_t j = 0; j < path.size(); ++j) {
      if (path[j] != Label::lam()) continue;
      auto a = matching_app(path, j);
      if (!a) continue;
      Path p(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(*a));
      Path pivot(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      seen.emplace(std::move(pivot), std::move(p));
    }
  }
  for (const auto& [pivot, p] : seen) {
    DistantRedex r{p, Path(pivot.begin() + static_cast<std::ptrdiff_t>(p.size()) + 1, pivot.end() - 1)};
    const bool active = is_active(tree, r);
    out.push_back({std::move(r), active});
  }
  return out;
}

PathSet b_step(const PathSet& tree, const DistantRedex& redex) {
  const Path pivot = check_redex(tree, redex);
  if (!is_active(tree, redex))
    throw Error(ErrorCode::InactiveRedex, "\"" + to_string(pivot) + "\" binds nothing");
  const PathSet argument = grafted_tree(tree, concat({redex.prefix, Path{Label::arg()}}));
  const auto b_len = static_cast<std::uint32_t>(l_length(redex.balanced));

  std::vector<Path> out;
  for (const auto& path : tree) {
    if (!starts_with(path, pivot) || !pivot_binds(path, pivot.size())) {
      out.push_back(path);
      continue;
    }
    const PathView site(path.begin(), path.end() - 1);
    const PathView q = site.subspan(pivot.size());
    graft_argument(argument, site, b_len + 1 + static_cast<std::uint32_t>(l_length(q)), out);
  }
  return PathSet(std::move(out));
}

PathSet f_step(const PathSet& tree, PathView occurrence) {
  if (!tree.contains(occurrence))
    throw Error(ErrorCode::PathNotInTree, "\"" + to_string(occurrence) + "\"");
  const auto binder = binder_index(occurrence);
  if (!binder) throw Error(ErrorCode::NotBoundByPivot, "the occurrence is free");
  const auto a = matching_app(occurrence, *binder);
  if (!a)
    throw Error(ErrorCode::NotBoundByPivot, "binder of \"" + to_string(occurrence) +
                                                "\" has no matching A");
  const PathView p = occurrence.first(*a);
  const PathSet argument = grafted_tree(tree, concat({p, Path{Label::arg()}}));
  // L-length of A b L q: everything between the argument's old and new position.
  const PathView site = occurrence.first(occurrence.size() - 1);
  const auto shift = static_cast<std::uint32_t>(l_length(site.subspan(*a)));

  std::vector<Path> out;
  for (const auto& path : tree) {
    if (std::equal(path.begin(), path.end(), occurrence.begin(), occurrence.end())) {
      graft_argument(argument, site, shift, out);
    } else {
      out.push_back(path);
    }
  }
  return PathSet(std::move(out));
}

std::vector<Path> find_focused_redexes(const PathSet& tree) {
  std::vector<Path> out;
  for (const auto& path : tree) {
    auto binder = binder_index(path);
    if (binder && matching_app(path, *binder)) out.push_back(path);
  }
  return out;
}

PathSet e_step(const PathSet& tree, const DistantRedex& redex) {
  const Path pivot = check_redex(tree, redex);
  if (is_active(tree, redex))
    throw Error(ErrorCode::ActiveRedex, "\"" + to_string(pivot) + "\" still binds");
  const std::size_t a_index = redex.prefix.size();
  const std::size_t l_index = pivot.size() - 1;
  const Path arg_prefix = concat({redex.prefix, Path{Label::arg()}});
  const Path app_prefix = concat({redex.prefix, Path{Label::app()}});

  std::vector<Path> out;
  for (const auto& path : tree) {
    if (starts_with(path, arg_prefix)) continue;
    if (!starts_with(path, app_prefix)) {
      out.push_back(path);
      continue;
    }
    if (!starts_with(path, pivot)) {
      Path kept = path;
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(a_index));
      out.push_back(std::move(kept));
      continue;
    }
    const PathView q(path.begin() + static_cast<std::ptrdiff_t>(pivot.size()), path.end() - 1);
    const std::uint32_t n = path.back().value();
    Path kept;
    kept.reserve(path.size() - 2);
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (i != a_index && i != l_index) kept.push_back(path[i]);
    kept.push_back(n > l_length(q) ? Label::num(n - 1) : path.back());
    out.push_back(std::move(kept));
  }
  return PathSet(std::move(out));
}

PathSet e_normal_form(const PathSet& tree) {
  PathSet current = tree;
  while (true) {
    auto redexes = find_distant_redexes(current);
    auto it = std::find_if(redexes.begin(), redexes.end(),
                           [](const DistantRedexInfo& r) { return !r.active; });
    if (it == redexes.end()) return current;
    current = e_step(current, it->redex);
  }
}

std::vector<PathSet> one_step_reducts(const PathSet& tree, Relation relation) {
  std::vector<PathSet> out;
  switch (relation) {
    case Relation::Beta:
      for (const auto& r : find_redexes(tree)) out.push_back(beta_step(tree, r));
      break;
    case Relation::Balanced:
      for (const auto& r : find_distant_redexes(tree))
        if (r.active) out.push_back(b_step(tree, r.redex));
      break;
    case Relation::Focused:
      for (const auto& occ : find_focused_redexes(tree)) out.push_back(f_step(tree, occ));
      break;
    case Relation::Erasing:
      for (const auto& r : find_distant_redexes(tree))
        if (!r.active) out.push_back(e_step(tree, r.redex));
      break;
  }
  return out;
}

namespace {

using Frontier = std::set<PathSet>;

void expand(Frontier& visited, Frontier& level, Relation relation) {
  Frontier next;
  for (const auto& t : level)
    for (auto& reduct : one_step_reducts(t, relation))
      if (!visited.count(reduct)) next.insert(std::move(reduct));
  visited.insert(next.begin(), next.end());
  level = std::move(next);
}

std::optional<PathSet> least_common(const Frontier& a, const Frontier& b) {
  for (const auto& t : a)
    if (b.count(t)) return t;
  return std::nullopt;
}

}  // namespace

std::optional<PathSet> joinable(const PathSet& left, const PathSet& right, Relation relation,
                                std::size_t bound) {
  Frontier seen_left{left}, level_left{left};
  Frontier seen_right{right}, level_right{right};
  if (auto common = least_common(seen_left, seen_right)) return common;
  for (std::size_t depth = 0; depth < bound; ++depth) {
    expand(seen_left, level_left, relation);
    expand(seen_right, level_right, relation);
    if (auto common = least_common(seen_left, seen_right)) return common;
    if (level_left.empty() && level_right.empty()) break;
  }
  return std::nullopt;
}

}  // namespace pathlambda
