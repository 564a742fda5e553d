#ifndef PATHLAMBDA_CLASSIC_BETA_HPP
#define PATHLAMBDA_CLASSIC_BETA_HPP

#include "pathlambda/path_core.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace pathlambda {

/// Parameters of the update function: indices up to `depth` are protected,
/// the others are shifted by `shift`.
struct UpdateParams {
  std::uint32_t depth = 0;
  std::uint32_t shift = 0;
};

std::uint32_t tau(UpdateParams params, std::uint32_t i);

/// Addresses the redex whose pivotal A-L pair follows `prefix`.
struct RedexAddress {
  Path prefix;
  bool operator==(const RedexAddress&) const = default;
};

/// Every p with p A L a root path, in canonical (leftmost-outermost) order.
std::vector<RedexAddress> find_redexes(const PathSet& tree);

/// One beta step with immediate index updating. The pivotal A-L pair and the
/// argument branch are erased; num-labels below the pivot are updated.
/// Throws NotARedex or OpenTerm.
PathSet beta_step(const PathSet& tree, const RedexAddress& redex);

struct Normalization {
  PathSet term;
  std::size_t steps = 0;
  bool exhausted = false;  // fuel ran out before a normal form was reached
};

/// Leftmost-outermost normalization with at most `fuel` steps.
Normalization normalize_beta(const PathSet& tree, std::size_t fuel);

}  // namespace pathlambda

#endif  // PATHLAMBDA_CLASSIC_BETA_HPP
