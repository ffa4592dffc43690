#ifndef ISTONE_VERIFY_HPP_
#define ISTONE_VERIFY_HPP_

#include <string>
#include <vector>

#include "istone/semigroup.hpp"

namespace istone {
namespace verify {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

using Checks = std::vector<Check>;

// Per-semigroup suites. Checks that need hypotheses the input lacks (for
// example distributivity) report as skipped passes with a note.
Checks duality(const InverseSemigroup& S);
Checks filter_theory(const InverseSemigroup& S);
Checks separation(const InverseSemigroup& S);
Checks completion_basics(const InverseSemigroup& S);
Checks paterson(const InverseSemigroup& S);
Checks booleanization(const InverseSemigroup& S);
Checks tight(const InverseSemigroup& S);
Checks coverage_axioms(const InverseSemigroup& S, int cover_size = 3);
Checks nucleus(const InverseSemigroup& S, int max_ideals = 64);
Checks oracle_equivalence(const InverseSemigroup& S);

// Cross-semigroup universal properties (exhaustive at small scale).
Check lift_universal_property(const InverseSemigroup& S,
                              const InverseSemigroup& T);
Check booleanization_lifts(const InverseSemigroup& S,
                           const InverseSemigroup& T);
Check tight_universal_property(const InverseSemigroup& S,
                               const InverseSemigroup& T);

// Named suite dispatch for the CLI. Known suites: duality, filters,
// completion, paterson, booleanization, tight, coverage-axioms, nucleus,
// oracle. Throws Unsupported for anything else.
Checks suite(const std::string& name, const InverseSemigroup& S,
             int cover_size = 3);

}  // namespace verify
}  // namespace istone

#endif  // ISTONE_VERIFY_HPP_
