#include "pathlambda/path_core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace pathlambda {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotProperPath: return "NotProperPath";
    case ErrorCode::Requirement1Violated: return "Requirement1Violated";
    case ErrorCode::Requirement2Violated: return "Requirement2Violated";
    case ErrorCode::Requirement3Violated: return "Requirement3Violated";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::PathNotInTree: return "PathNotInTree";
    case ErrorCode::NotARootPath: return "NotARootPath";
    case ErrorCode::NotARedex: return "NotARedex";
    case ErrorCode::OpenTerm: return "OpenTerm";
    case ErrorCode::DuplicateBinder: return "DuplicateBinder";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::NotADistantRedex: return "NotADistantRedex";
    case ErrorCode::InactiveRedex: return "InactiveRedex";
    case ErrorCode::ActiveRedex: return "ActiveRedex";
    case ErrorCode::NotBoundByPivot: return "NotBoundByPivot";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
  }
  return "UnknownError";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::NotProperPath:
    case ErrorCode::Requirement1Violated:
    case ErrorCode::Requirement2Violated:
    case ErrorCode::Requirement3Violated:
    case ErrorCode::EmptyInput:
    case ErrorCode::DuplicateBinder:
    case ErrorCode::MalformedPath:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

Label Label::num(std::uint32_t n) {
  if (n == 0 || n > std::numeric_limits<std::uint32_t>::max() - 2)
    throw Error(ErrorCode::ParseError, "num-label must be a positive integer");
  return Label(n + 2);
}

std::string to_string(Label label) {
  switch (label.kind()) {
    case Label::Kind::L: return "L";
    case Label::Kind::A: return "A";
    case Label::Kind::S: return "S";
    case Label::Kind::Num: return std::to_string(label.value());
  }
  return "?";
}

std::size_t length(PathView path) { return path.size(); }

std::size_t l_length(PathView path) {
  return static_cast<std::size_t>(
      std::count(path.begin(), path.end(), Label::lam()));
}

bool is_proper(PathView path) {
  if (path.empty() || !path.back().is_num()) return false;
  return std::none_of(path.begin(), path.end() - 1,
                      [](Label l) { return l.is_num(); });
}

bool is_extended_path(PathView path) { return !path.empty() && path.back().is_num(); }

bool starts_with(PathView path, PathView prefix) {
  return path.size() >= prefix.size() &&
         std::equal(prefix.begin(), prefix.end(), path.begin());
}

Path concat(std::initializer_list<PathView> parts) {
  Path out;
  for (auto part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::string to_string(PathView path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += ' ';
    out += to_string(path[i]);
  }
  return out;
}

Path parse_path(std::string_view text) {
  Path out;
  if (text == "ε" || text == "eps") return out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r') ++j;
    std::string_view tok = text.substr(i, j - i);
    if (tok == "L") {
      out.push_back(Label::lam());
    } else if (tok == "A") {
      out.push_back(Label::app());
    } else if (tok == "S") {
      out.push_back(Label::arg());
    } else {
      std::uint64_t n = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
      if (ec != std::errc() || ptr != tok.data() + tok.size() || n == 0 ||
          n > std::numeric_limits<std::uint32_t>::max() - 2)
        throw Error(ErrorCode::ParseError, "bad label '" + std::string(tok) + "'");
      out.push_back(Label::num(static_cast<std::uint32_t>(n)));
    }
    i = j;
  }
  return out;
}

PathSet::PathSet(std::vector<Path> paths) : paths_(std::move(paths)) {
  std::sort(paths_.begin(), paths_.end());
  paths_.erase(std::unique(paths_.begin(), paths_.end()), paths_.end());
}

PathSet::PathSet(std::initializer_list<std::string_view> paths) {
  std::vector<Path> parsed;
  for (auto text : paths) parsed.push_back(parse_path(text));
  *this = PathSet(std::move(parsed));
}

bool PathSet::contains(PathView path) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), path,
                             [](const Path& a, PathView b) {
                               return std::lexicographical_compare(a.begin(), a.end(),
                                                                   b.begin(), b.end());
                             });
  return it != paths_.end() && std::equal(it->begin(), it->end(), path.begin(), path.end());
}

bool PathSet::has_root_path(PathView prefix) const {
  // Extensions of a prefix are contiguous and start at its lower bound.
  auto it = std::lower_bound(paths_.begin(), paths_.end(), prefix,
                             [](const Path& a, PathView b) {
                               return std::lexicographical_compare(a.begin(), a.end(),
                                                                   b.begin(), b.end());
                             });
  return it != paths_.end() && starts_with(*it, prefix);
}

bool PathSet::has_proper_extension(PathView prefix) const {
  auto it = std::upper_bound(paths_.begin(), paths_.end(), prefix,
                             [](PathView b, const Path& a) {
                               return std::lexicographical_compare(b.begin(), b.end(),
                                                                   a.begin(), a.end());
                             });
  return it != paths_.end() && starts_with(*it, prefix) && it->size() > prefix.size();
}

bool PathSet::is_extended() const {
  return std::any_of(paths_.begin(), paths_.end(),
                     [](const Path& p) { return !is_proper(p); });
}

std::size_t PathSet::weight() const {
  std::size_t total = 0;
  for (const auto& p : paths_) total += p.size();
  return total;
}

std::string to_string(const PathSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ", ";
    out += '"' + to_string(set.paths()[i]) + '"';
  }
  return out + "}";
}

LambdaTree LambdaTree::var(std::uint32_t n) {
  if (n == 0) throw Error(ErrorCode::MalformedPath, "variable index must be positive");
  return LambdaTree(std::make_shared<const Node>(Node{Kind::Var, n, {}}));
}

LambdaTree LambdaTree::lam(LambdaTree body) {
  return LambdaTree(std::make_shared<const Node>(Node{Kind::Lam, 0, {std::move(body)}}));
}

LambdaTree LambdaTree::app(LambdaTree fun, LambdaTree arg) {
  return LambdaTree(
      std::make_shared<const Node>(Node{Kind::App, 0, {std::move(fun), std::move(arg)}}));
}

LambdaTree LambdaTree::inner(std::uint32_t n, LambdaTree continuation) {
  if (n == 0) throw Error(ErrorCode::MalformedPath, "inner label must be positive");
  return LambdaTree(
      std::make_shared<const Node>(Node{Kind::Inner, n, {std::move(continuation)}}));
}

std::size_t LambdaTree::size() const {
  std::size_t total = 1;
  for (const auto& child : node_->children) total += child.size();
  return total;
}

bool LambdaTree::operator==(const LambdaTree& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind() || index() != other.index()) return false;
  return node_->children == other.node_->children;
}

bool is_extended(const LambdaTree& tree) {
  switch (tree.kind()) {
    case LambdaTree::Kind::Var: return false;
    case LambdaTree::Kind::Lam: return is_extended(tree.body());
    case LambdaTree::Kind::App: return is_extended(tree.fun()) || is_extended(tree.arg());
    case LambdaTree::Kind::Inner: return true;
  }
  return false;
}

namespace {

void collect_paths(const LambdaTree& tree, Path& prefix, std::vector<Path>& out) {
  switch (tree.kind()) {
    case LambdaTree::Kind::Var:
      prefix.push_back(Label::num(tree.index()));
      out.push_back(prefix);
      prefix.pop_back();
      return;
    case LambdaTree::Kind::Lam:
      prefix.push_back(Label::lam());
      collect_paths(tree.body(), prefix, out);
      prefix.pop_back();
      return;
    case LambdaTree::Kind::App:
      prefix.push_back(Label::app());
      collect_paths(tree.fun(), prefix, out);
      prefix.back() = Label::arg();
      collect_paths(tree.arg(), prefix, out);
      prefix.pop_back();
      return;
    case LambdaTree::Kind::Inner:
      prefix.push_back(Label::num(tree.index()));
      collect_paths(tree.continuation(), prefix, out);
      prefix.pop_back();
      return;
  }
}

// `paths` is sorted and duplicate free; `depth` labels have been consumed.
// Every path has more than `depth` labels.
LambdaTree reconstruct(std::span<const Path> paths, std::size_t depth, bool extended) {
  const Path& first = paths.front();
  const Label head = first[depth];

  // case 1
  if (head == Label::lam()) {
    for (const auto& p : paths)
      if (p[depth] != Label::lam())
        throw Error(ErrorCode::Requirement1Violated,
                    "path \"" + to_string(p) + "\" does not start with L");
    return LambdaTree::lam(reconstruct(paths, depth + 1, extended));
  }

  // case 2
  if (head == Label::app()) {
    auto split = std::find_if(paths.begin(), paths.end(),
                              [&](const Path& p) { return p[depth] != Label::app(); });
    if (split == paths.end())
      throw Error(ErrorCode::Requirement2Violated, "A-branch without an S-branch");
    for (auto it = split; it != paths.end(); ++it)
      if ((*it)[depth] != Label::arg())
        throw Error(ErrorCode::Requirement2Violated,
                    "path \"" + to_string(*it) + "\" is neither an A- nor an S-branch");
    const auto m = static_cast<std::size_t>(split - paths.begin());
    return LambdaTree::app(reconstruct(paths.first(m), depth + 1, extended),
                           reconstruct(paths.subspan(m), depth + 1, extended));
  }

  if (head == Label::arg())
    throw Error(ErrorCode::Requirement2Violated, "S-branch without an A-branch");

  // case 3
  if (first.size() == depth + 1) {
    if (paths.size() != 1)
      throw Error(ErrorCode::Requirement3Violated,
                  "num-label path \"" + to_string(first) + "\" is not alone");
    return LambdaTree::var(head.value());
  }

  // An inner num-label; only reachable for extended sets.
  if (!extended) throw Error(ErrorCode::NotProperPath, to_string(first));
  for (const auto& p : paths)
    if (p[depth] != head || p.size() == depth + 1)
      throw Error(ErrorCode::Requirement3Violated,
                  "inner label " + to_string(head) + " does not head every path");
  return LambdaTree::inner(head.value(), reconstruct(paths, depth + 1, extended));
}

LambdaTree validate_impl(std::vector<Path> candidate, bool extended) {
  if (candidate.empty()) throw Error(ErrorCode::EmptyInput, "no paths");
  for (const auto& p : candidate) {
    if (extended ? !is_extended_path(p) : !is_proper(p))
      throw Error(ErrorCode::NotProperPath, "\"" + to_string(p) + "\"");
  }
  std::sort(candidate.begin(), candidate.end());
  candidate.erase(std::unique(candidate.begin(), candidate.end()), candidate.end());
  return reconstruct(candidate, 0, extended);
}

}  // namespace

PathSet paths_of(const LambdaTree& tree) {
  std::vector<Path> out;
  Path prefix;
  collect_paths(tree, prefix, out);
  return PathSet(std::move(out));
}

LambdaTree validate_path_set(std::vector<Path> candidate) {
  return validate_impl(std::move(candidate), false);
}

LambdaTree validate_path_set(const PathSet& candidate) {
  return validate_impl(candidate.paths(), false);
}

LambdaTree validate_extended_path_set(std::vector<Path> candidate) {
  return validate_impl(std::move(candidate), true);
}

std::optional<std::size_t> binder_index(PathView complete_path) {
  if (complete_path.empty() || !complete_path.back().is_num()) return std::nullopt;
  const std::uint32_t n = complete_path.back().value();
  std::uint32_t seen = 0;
  for (std::size_t i = complete_path.size() - 1; i-- > 0;) {
    if (complete_path[i] != Label::lam()) continue;
    if (++seen == n) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> binder_position(const PathSet& tree, PathView complete_path) {
  if (!tree.contains(complete_path))
    throw Error(ErrorCode::PathNotInTree, "\"" + to_string(complete_path) + "\"");
  return binder_index(complete_path);
}

bool is_closed(const PathSet& tree) {
  return std::all_of(tree.begin(), tree.end(),
                     [](const Path& p) { return binder_index(p).has_value(); });
}

bool is_closed(const LambdaTree& tree) { return is_closed(paths_of(tree)); }

PathSet grafted_tree(const PathSet& tree, PathView prefix) {
  if (prefix.empty()) return tree;
  if (!tree.has_proper_extension(prefix))
    throw Error(ErrorCode::NotARootPath, "\"" + to_string(prefix) + "\"");
  std::vector<Path> out;
  for (const auto& p : tree)
    if (starts_with(p, prefix) && p.size() > prefix.size())
      out.emplace_back(p.begin() + static_cast<std::ptrdiff_t>(prefix.size()), p.end());
  return PathSet(std::move(out));
}

std::vector<Path> parse_path_file(std::string_view text) {
  std::vector<Path> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Path p;
    try {
      p = parse_path(line);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!p.back().is_num())
      throw Error(ErrorCode::NotProperPath,
                  "line " + std::to_string(line_no) + " does not end in a num-label");
    out.push_back(std::move(p));
  }
  return out;
}

std::string format_path_set(const PathSet& set) {
  std::string out;
  for (const auto& p : set) {
    out += to_string(p);
    out += '\n';
  }
  return out;
}

}  // namespace pathlambda

std::size_t std::hash<pathlambda::PathSet>::operator()(
    const pathlambda::PathSet& set) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& p : set) {
    for (auto label : p) {
      h ^= std::hash<std::uint32_t>{}(label.value() + static_cast<std::uint32_t>(label.kind()));
      h *= 0x100000001b3ull;
    }
    h ^= 0xff;
    h *= 0x100000001b3ull;
  }
  return h;
}
