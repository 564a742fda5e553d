#include "pathlambda/classic_beta.hpp"

#include <algorithm>

namespace pathlambda {

std::uint32_t tau(UpdateParams params, std::uint32_t i) {
  return i <= params.depth ? i : i + params.shift;
}

std::vector<RedexAddress> find_redexes(const PathSet& tree) {
  std::vector<Path> found;
  for (const auto& p : tree) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] == Label::app() && p[i + 1] == Label::lam()) found.emplace_back(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i));
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<RedexAddress> out;
  out.reserve(found.size());
  for (auto& p : found) out.push_back({std::move(p)});
  return out;
}

PathSet beta_step(const PathSet& tree, const RedexAddress& redex) {
  const Path& p = redex.prefix;
  const Path pivot = concat({p, Path{Label::app(), Label::lam()}});
  if (!tree.has_proper_extension(pivot))
    throw Error(ErrorCode::NotARedex, "\"" + to_string(pivot) + "\" is not a root path");
  if (!is_closed(tree)) throw Error(ErrorCode::OpenTerm, "beta_step needs a closed term");

  const Path arg_prefix = concat({p, Path{Label::arg()}});
  const PathSet argument = grafted_tree(tree, arg_prefix);

  std::vector<Path> out;
  for (const auto& path : tree) {
    if (starts_with(path, arg_prefix)) continue;
    if (!starts_with(path, pivot)) {
      out.push_back(path);
      continue;
    }
    const PathView q(path.begin() + static_cast<std::ptrdiff_t>(pivot.size()), path.end() - 1);
    const auto q_len = static_cast<std::uint32_t>(l_length(q));
    const std::uint32_t n = path.back().value();
    if (n < q_len + 1) {
      out.push_back(concat({p, q, Path{path.back()}}));
    } else if (n > q_len + 1) {
      out.push_back(concat({p, q, Path{Label::num(n - 1)}}));
    } else {
      for (const auto& rl : argument) {
        const PathView r(rl.begin(), rl.end() - 1);
        const UpdateParams update{static_cast<std::uint32_t>(l_length(r)), q_len};
        out.push_back(concat({p, q, r, Path{Label::num(tau(update, rl.back().value()))}}));
      }
    }
  }
  return PathSet(std::move(out));
}

Normalization normalize_beta(const PathSet& tree, std::size_t fuel) {
  Normalization result{tree, 0, false};
  while (true) {
    auto redexes = find_redexes(result.term);
    if (redexes.empty()) return result;
    if (result.steps == fuel) {
      result.exhausted = true;
      return result;
    }
    result.term = beta_step(result.term, redexes.front());
    ++result.steps;
  }
}

}  // namespace pathlambda
