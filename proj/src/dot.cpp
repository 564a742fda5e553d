#include "pathlambda/dot.hpp"

namespace pathlambda {
namespace {

class DotWriter {
 public:
  std::string run(const LambdaTree& tree) {
    out_ = "digraph lambda_tree {\n  node [shape=point, width=0.08];\n  edge [arrowhead=none];\n";
    emit(tree, fresh());
    out_ += "}\n";
    return out_;
  }

 private:
  std::size_t fresh() {
    out_ += "  n" + std::to_string(count_) + ";\n";
    return count_++;
  }

  void edge(std::size_t from, std::size_t to, const std::string& label) {
    out_ += "  n" + std::to_string(from) + " -> n" + std::to_string(to) + " [label=\"" + label +
            "\"];\n";
  }

  void emit(const LambdaTree& t, std::size_t at) {
    switch (t.kind()) {
      case LambdaTree::Kind::Var:
        edge(at, fresh(), std::to_string(t.index()));
        return;
      case LambdaTree::Kind::Inner: {
        const auto below = fresh();
        edge(at, below, std::to_string(t.index()));
        emit(t.continuation(), below);
        return;
      }
      case LambdaTree::Kind::Lam: {
        const auto below = fresh();
        edge(at, below, "L");
        emit(t.body(), below);
        return;
      }
      case LambdaTree::Kind::App: {
        const auto left = fresh();
        edge(at, left, "A");
        emit(t.fun(), left);
        const auto right = fresh();
        edge(at, right, "S");
        emit(t.arg(), right);
        return;
      }
    }
  }

  std::string out_;
  std::size_t count_ = 0;
};

}  // namespace

std::string to_dot(const LambdaTree& tree) { return DotWriter{}.run(tree); }

}  // namespace pathlambda
