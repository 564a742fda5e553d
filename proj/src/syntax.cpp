#include "pathlambda/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <vector>

namespace pathlambda {
namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ == text_.size();
  }

  bool peek_lambda() {
    skip_space();
    return text_.substr(pos_, 1) == "\\" || text_.substr(pos_, 2) == "\xce\xbb";
  }

  void take_lambda() {
    pos_ += text_[pos_] == '\\' ? 1 : 2;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek_identifier() {
    skip_space();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string identifier() {
    if (!peek_identifier()) fail("expected an identifier");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool peek_number() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::uint32_t number() {
    skip_space();
    std::uint32_t n = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), n);
    if (ec != std::errc() || n == 0) fail("expected a positive index");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return n;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_));
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

NamedTree named_term(Lexer& lex);

std::optional<NamedTree> named_atom(Lexer& lex) {
  if (lex.peek('(')) {
    lex.expect('(');
    auto t = named_term(lex);
    lex.expect(')');
    return t;
  }
  if (lex.peek_identifier()) return NamedTree::var(lex.identifier());
  return std::nullopt;
}

NamedTree named_lambda(Lexer& lex) {
  lex.take_lambda();
  std::vector<std::string> binders{lex.identifier()};
  while (lex.peek_identifier()) binders.push_back(lex.identifier());
  lex.expect('.');
  NamedTree body = named_term(lex);
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    body = NamedTree::lam(*it, std::move(body));
  return body;
}

NamedTree named_term(Lexer& lex) {
  if (lex.peek_lambda()) return named_lambda(lex);
  auto head = named_atom(lex);
  if (!head) lex.fail("expected a term");
  NamedTree acc = *head;
  while (true) {
    if (lex.peek_lambda()) return NamedTree::app(std::move(acc), named_lambda(lex));
    auto next = named_atom(lex);
    if (!next) return acc;
    acc = NamedTree::app(std::move(acc), std::move(*next));
  }
}

LambdaTree namefree_term(Lexer& lex);

std::optional<LambdaTree> namefree_atom(Lexer& lex) {
  if (lex.peek('(')) {
    lex.expect('(');
    auto t = namefree_term(lex);
    lex.expect(')');
    return t;
  }
  if (lex.peek_number()) return LambdaTree::var(lex.number());
  return std::nullopt;
}

LambdaTree namefree_term(Lexer& lex) {
  if (lex.peek_lambda()) {
    lex.take_lambda();
    return LambdaTree::lam(namefree_term(lex));
  }
  auto head = namefree_atom(lex);
  if (!head) lex.fail("expected a term");
  LambdaTree acc = *head;
  while (true) {
    if (lex.peek_lambda()) {
      lex.take_lambda();
      return LambdaTree::app(std::move(acc), LambdaTree::lam(namefree_term(lex)));
    }
    auto next = namefree_atom(lex);
    if (!next) return acc;
    acc = LambdaTree::app(std::move(acc), std::move(*next));
  }
}

void print(const NamedTree& t, std::string& out) {
  switch (t.kind()) {
    case NamedTree::Kind::Var: out += t.name(); return;
    case NamedTree::Kind::Lam:
      out += "\\" + t.name() + ". ";
      print(t.body(), out);
      return;
    case NamedTree::Kind::App: {
      const bool fun_parens = t.fun().kind() == NamedTree::Kind::Lam;
      const bool arg_parens = t.arg().kind() != NamedTree::Kind::Var;
      if (fun_parens) out += '(';
      print(t.fun(), out);
      if (fun_parens) out += ')';
      out += ' ';
      if (arg_parens) out += '(';
      print(t.arg(), out);
      if (arg_parens) out += ')';
      return;
    }
  }
}

void print(const LambdaTree& t, std::string& out) {
  switch (t.kind()) {
    case LambdaTree::Kind::Var: out += std::to_string(t.index()); return;
    case LambdaTree::Kind::Inner:
      out += std::to_string(t.index()) + "{";
      print(t.continuation(), out);
      out += "}";
      return;
    case LambdaTree::Kind::Lam:
      out += "\\ ";
      print(t.body(), out);
      return;
    case LambdaTree::Kind::App: {
      const bool fun_parens = t.fun().kind() == LambdaTree::Kind::Lam;
      const bool arg_parens = t.arg().kind() == LambdaTree::Kind::Lam ||
                              t.arg().kind() == LambdaTree::Kind::App;
      if (fun_parens) out += '(';
      print(t.fun(), out);
      if (fun_parens) out += ')';
      out += ' ';
      if (arg_parens) out += '(';
      print(t.arg(), out);
      if (arg_parens) out += ')';
      return;
    }
  }
}

}  // namespace

NamedTree parse_named(std::string_view text) {
  Lexer lex(text);
  auto t = named_term(lex);
  if (!lex.at_end()) lex.fail("trailing input");
  return t;
}

LambdaTree parse_namefree(std::string_view text) {
  Lexer lex(text);
  auto t = namefree_term(lex);
  if (!lex.at_end()) lex.fail("trailing input");
  return t;
}

std::string to_string(const NamedTree& term) {
  std::string out;
  print(term, out);
  return out;
}

std::string to_string(const LambdaTree& tree) {
  std::string out;
  print(tree, out);
  return out;
}

}  // namespace pathlambda
