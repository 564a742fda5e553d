#ifndef PATHLAMBDA_DOT_HPP
#define PATHLAMBDA_DOT_HPP

#include "pathlambda/path_core.hpp"

#include <string>

namespace pathlambda {

/// Graphviz digraph of the tree: point-shaped nodes, edges labeled
/// A / L / S / n. Num-labeled edges end in their own point node.
std::string to_dot(const LambdaTree& tree);

}  // namespace pathlambda

#endif  // PATHLAMBDA_DOT_HPP
