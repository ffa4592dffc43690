#ifndef ISTONE_ORACLES_HPP_
#define ISTONE_ORACLES_HPP_

#include <vector>

#include "istone/semigroup.hpp"

// Brute-force enumeration oracles. These deliberately avoid the reductions
// used by the main code paths (principal filter bases, maximal cover
// candidates) and recompute everything from the definitions by exhaustive
// subset search, so the two routes can be compared. Guarded to small
// semigroups.

namespace istone {
namespace oracle {

// Every proper filter as its full member set: directed, up-closed,
// zero-free, nonempty subsets. Guard: |S| <= 20.
std::vector<std::vector<int>> directed_upsets(const InverseSemigroup& S);

// Common tight cover by direct enumeration of all part sets.
bool tight_equiv(const InverseSemigroup& S, int a, int b);

// Tight filter test by enumerating all covers of all members.
bool is_tight_filter(const InverseSemigroup& S, Filter F);

// Tight map test by enumerating all covers of every element.
bool is_tight_map(const InverseSemigroup& S, const InverseSemigroup& T,
                  const std::vector<int>& theta);

}  // namespace oracle
}  // namespace istone

#endif  // ISTONE_ORACLES_HPP_
