#ifndef ISTONE_CATALOG_HPP_
#define ISTONE_CATALOG_HPP_

#include <string>
#include <vector>

#include "istone/semigroup.hpp"

namespace istone {
namespace catalog {

// Builds a named example semigroup. Supported ids:
//   sym_inv:n        partial injections on {1..n}, n <= 3
//   chain:k          chain semilattice with k elements (0 < e1 < ... )
//   antichain:k      k pairwise-orthogonal atoms over 0
//   powerset:k       subsets of {1..k} under intersection, k <= 4
//   group0:cyclic:n  cyclic group of order n with adjoined zero
//   group0:sym:3     symmetric group S3 with adjoined zero
//   brandt:cyclic:m:n  Brandt semigroup over the cyclic group of order m
// Throws Unsupported / TooLarge on bad ids.
InverseSemigroup build(const std::string& id);

// The canonical id list swept by the verification suites.
std::vector<std::string> members();

// Text table format (.ist): '#' comments, then n, then n rows of n ids.
InverseSemigroup parse_text(const std::string& text);
std::string serialize_text(const InverseSemigroup& S);

// JSON format: {"n": ..., "table": [[...]], "names": [...]} (names optional).
InverseSemigroup parse_json(const std::string& text);
std::string serialize_json(const InverseSemigroup& S);

// Loads from a file path (.ist or .json) or, failing that, a catalog id.
InverseSemigroup load(const std::string& path_or_id);

}  // namespace catalog
}  // namespace istone

#endif  // ISTONE_CATALOG_HPP_
