#ifndef PATHLAMBDA_CLI_HPP
#define PATHLAMBDA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pathlambda::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 on malformed input and 2 on a violated precondition; the error name is
/// written to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pathlambda::cli

#endif  // PATHLAMBDA_CLI_HPP
