#include "pathlambda/cli.hpp"

#include "pathlambda/classic_beta.hpp"
#include "pathlambda/distant.hpp"
#include "pathlambda/dot.hpp"
#include "pathlambda/expanding.hpp"
#include "pathlambda/name_bridge.hpp"
#include "pathlambda/path_core.hpp"
#include "pathlambda/syntax.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace pathlambda::cli {
namespace {

struct TermInput {
  std::string text;
  std::string file;
  std::string syntax;  // empty: namefree for inline text, paths otherwise

  void attach(CLI::App* cmd) {
    cmd->add_option("term", text, "Term text (defaults to --file or stdin)");
    cmd->add_option("--file,-f", file, "Read the term from a file");
    cmd->add_option("--syntax", syntax, "Input syntax")
        ->check(CLI::IsMember({"paths", "namefree", "named"}));
  }

  // Reads the term; inner num-labels are accepted only from path input.
  LambdaTree load(std::istream& in) const {
    std::string source = text;
    std::string how = syntax;
    if (text.empty()) {
      if (!file.empty()) {
        std::ifstream stream(file);
        if (!stream) throw Error(ErrorCode::ParseError, "cannot read " + file);
        source.assign(std::istreambuf_iterator<char>(stream), {});
      } else {
        source.assign(std::istreambuf_iterator<char>(in), {});
      }
      if (how.empty()) how = "paths";
    } else if (how.empty()) {
      how = "namefree";
    }
    if (how == "named") return to_namefree(parse_named(source));
    if (how == "namefree") return parse_namefree(source);
    return validate_extended_path_set(parse_path_file(source));
  }
};

PathSet plain_paths(const LambdaTree& tree) {
  if (is_extended(tree))
    throw Error(ErrorCode::MalformedPath, "this relation does not accept inner num-labels");
  return paths_of(tree);
}

std::string quoted(PathView p) { return "\"" + to_string(p) + "\""; }

std::string describe_binder(const BinderResolution& r, bool with_match) {
  std::string out = "binder: L #" + std::to_string(r.l_ordinal) + " (index " +
                    std::to_string(r.l_index) + ")\n";
  if (with_match)
    out += r.a_index ? "match: A (index " + std::to_string(*r.a_index) + ")\n" : "match: none\n";
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Namefree lambda terms as sets of labeled paths", "pathlambda"};
  app.require_subcommand(1);

  TermInput parse_in, paths_in, validate_in, convert_in, redexes_in, step_in, normalize_in,
      dot_in;

  auto* parse = app.add_subcommand("parse", "Print the canonical path set of a term");
  parse_in.attach(parse);

  auto* paths = app.add_subcommand("paths", "List complete paths with their binders");
  paths_in.attach(paths);

  auto* validate = app.add_subcommand("validate", "Check that a path file forms a lambda-tree");
  validate_in.attach(validate);
  bool allow_inner = false;
  validate->add_flag("--extended", allow_inner, "Accept inner num-labels");

  auto* convert = app.add_subcommand("convert", "Convert between syntaxes");
  convert_in.attach(convert);
  std::string target = "namefree";
  convert->add_option("--to", target)->check(CLI::IsMember({"named", "namefree", "paths"}));

  const auto relations = CLI::IsMember({"beta", "b", "f", "e", "ef"});
  auto* redexes = app.add_subcommand("redexes", "List redexes of a relation");
  redexes_in.attach(redexes);
  std::string redex_rel = "beta";
  redexes->add_option("--relation,-r", redex_rel)->check(relations);

  auto* step = app.add_subcommand("step", "Apply one reduction step");
  step_in.attach(step);
  std::string step_rel = "beta";
  std::string at;
  std::string balanced;
  step->add_option("--relation,-r", step_rel)->check(relations);
  step->add_option("--at", at, "Redex prefix p (beta, b, e) or complete path (f, ef)")
      ->required();
  step->add_option("--balanced,-b", balanced, "Balanced path b (b, e)");

  auto* normalize = app.add_subcommand("normalize", "Reduce to normal form");
  normalize_in.attach(normalize);
  std::string norm_rel = "beta";
  std::size_t fuel = 1000;
  normalize->add_option("--relation,-r", norm_rel)->check(CLI::IsMember({"beta", "e"}));
  normalize->add_option("--fuel", fuel);

  std::string path_text;
  std::string mode = "l";
  long long index = -1;
  auto* bind = app.add_subcommand("bind", "Find the binder of a num-label");
  auto* trace = app.add_subcommand("trace", "Print the binder automaton's run");
  for (auto* cmd : {bind, trace}) {
    cmd->add_option("--path,-p", path_text)->required();
    cmd->add_option("--mode,-m", mode)->check(CLI::IsMember({"l", "la"}));
    cmd->add_option("--index,-i", index, "0-based position of the num-label (default: last)");
  }

  auto* dot = app.add_subcommand("dot", "Emit a Graphviz digraph");
  dot_in.attach(dot);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*parse) {
      out << format_path_set(paths_of(parse_in.load(in)));
    } else if (*paths) {
      for (const auto& p : paths_of(paths_in.load(in))) {
        out << to_string(p) << '\t';
        try {
          out << "binder=" << resolve_binder(p).l_index << '\n';
        } catch (const Error&) {
          out << "free\n";
        }
      }
    } else if (*validate) {
      std::string source;
      if (!validate_in.text.empty()) {
        source = validate_in.text;
      } else if (!validate_in.file.empty()) {
        std::ifstream stream(validate_in.file);
        if (!stream) throw Error(ErrorCode::ParseError, "cannot read " + validate_in.file);
        source.assign(std::istreambuf_iterator<char>(stream), {});
      } else {
        source.assign(std::istreambuf_iterator<char>(in), {});
      }
      auto candidate = parse_path_file(source);
      auto tree = allow_inner ? validate_extended_path_set(std::move(candidate))
                              : validate_path_set(std::move(candidate));
      out << "valid: " << to_string(tree) << '\n';
    } else if (*convert) {
      auto tree = convert_in.load(in);
      if (target == "named") {
        out << to_string(to_namecarrying(tree)) << '\n';
      } else if (target == "namefree") {
        out << to_string(tree) << '\n';
      } else {
        out << format_path_set(paths_of(tree));
      }
    } else if (*redexes) {
      auto tree = redexes_in.load(in);
      if (redex_rel == "ef") {
        for (const auto& r : find_ef_redexes(tree)) out << "r=" << quoted(r) << '\n';
      } else if (redex_rel == "beta") {
        for (const auto& r : find_redexes(plain_paths(tree))) out << "p=" << quoted(r.prefix) << '\n';
      } else if (redex_rel == "f") {
        for (const auto& r : find_focused_redexes(plain_paths(tree))) out << "r=" << quoted(r) << '\n';
      } else {
        for (const auto& r : find_distant_redexes(plain_paths(tree)))
          out << "p=" << quoted(r.redex.prefix) << " b=" << quoted(r.redex.balanced) << ' '
              << (r.active ? "active" : "inactive") << '\n';
      }
    } else if (*step) {
      auto tree = step_in.load(in);
      const Path address = parse_path(at);
      if (step_rel == "ef") {
        out << format_path_set(paths_of(ef_step(tree, address)));
      } else {
        const PathSet t = plain_paths(tree);
        PathSet result;
        if (step_rel == "beta") {
          result = beta_step(t, RedexAddress{address});
        } else if (step_rel == "f") {
          result = f_step(t, address);
        } else {
          const DistantRedex redex{address, parse_path(balanced)};
          result = step_rel == "b" ? b_step(t, redex) : e_step(t, redex);
        }
        out << format_path_set(result);
      }
    } else if (*normalize) {
      const PathSet t = plain_paths(normalize_in.load(in));
      if (norm_rel == "e") {
        out << format_path_set(e_normal_form(t));
      } else {
        auto result = normalize_beta(t, fuel);
        if (result.exhausted) {
          err << "error: " << error_name(ErrorCode::FuelExhausted) << ": no normal form after "
              << result.steps << " steps\n";
          return 2;
        }
        out << format_path_set(result.term);
      }
    } else if (*bind || *trace) {
      const Path path = parse_path(path_text);
      if (path.empty()) throw Error(ErrorCode::MalformedPath, "empty path");
      const std::size_t position = index < 0 ? path.size() - 1 : static_cast<std::size_t>(index);
      const auto how = mode == "la" ? BinderMode::FindLAndA : BinderMode::FindL;
      if (*bind) {
        out << describe_binder(resolve_binder(path, position, how), how == BinderMode::FindLAndA);
      } else {
        auto run = pda_trace(path, position, how);
        for (const auto& s : run.steps) {
          out << format_configuration(s.config) << "  ->(" << rule_name(s.rule) << ")";
          if (s.pushed) out << "  push (" << s.pushed->m << "," << s.pushed->k << ")";
          if (s.popped) out << "  pop (" << s.popped->m << "," << s.popped->k << ")";
          if (s.rule == PdaRule::R9b) out << "  stop";
          out << '\n';
        }
        out << describe_binder(run.result, how == BinderMode::FindLAndA);
      }
    } else if (*dot) {
      out << to_dot(dot_in.load(in));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.code()) ? 1 : 2;
  }
  return 0;
}

}  // namespace pathlambda::cli
