#ifndef PATHLAMBDA_SYNTAX_HPP
#define PATHLAMBDA_SYNTAX_HPP

// Concrete syntax for terms.
//
//   named:    \x. body    (\x y. body also accepted)
//   namefree: \ body      integers are variables
//
// Application is juxtaposition, left associative; an abstraction extends as
// far to the right as possible. "λ" may be used instead of the backslash.

#include "pathlambda/name_bridge.hpp"
#include "pathlambda/path_core.hpp"

#include <string>
#include <string_view>

namespace pathlambda {

/// Throws Error(ParseError).
NamedTree parse_named(std::string_view text);
LambdaTree parse_namefree(std::string_view text);

std::string to_string(const NamedTree& term);
/// Extended trees print an inner label j followed by its continuation as "j{...}".
std::string to_string(const LambdaTree& tree);

}  // namespace pathlambda

#endif  // PATHLAMBDA_SYNTAX_HPP
