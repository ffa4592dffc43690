#ifndef ISTONE_COVERAGE_HPP_
#define ISTONE_COVERAGE_HPP_

#include <string>
#include <vector>

#include "istone/semigroup.hpp"

namespace istone {

// A candidate cover: nonzero parts, each below the target. Parts are kept
// sorted with zeros stripped, so covers compare canonically.
struct Cover {
  int target = 0;
  std::vector<int> parts;
};

// The arrow relation a -> B: every nonzero x <= a has a nonzero common lower
// bound with some b in B.
bool arrow(const InverseSemigroup& S, int a, const std::vector<int>& B);

Cover make_cover(const InverseSemigroup& S, int target, std::vector<int> parts);

// B is a tight cover of a when B lies inside a-down and a -> B.
bool is_tight_cover(const InverseSemigroup& S, const Cover& c);

// x is essential in s when x <= s, x != 0 and s -> {x}.
bool is_essential(const InverseSemigroup& S, int x, int s);

// a == b iff they share a tight cover. Computed through the maximal
// candidate M = (a-down ^ b-down) \ {0}: a common cover exists iff M itself
// covers both, by monotonicity of the arrow relation.
bool tight_equiv(const InverseSemigroup& S, int a, int b);

struct TightQuotient {
  InverseSemigroup sgp;                  // the separative quotient
  std::vector<int> sigma;                // element -> class id
  std::vector<std::vector<int>> classes; // class id -> members
};

// Quotient by the tight congruence; sigma is a 0-restricted homomorphism
// onto a separative semigroup.
TightQuotient tight_quotient(const InverseSemigroup& S);

bool is_separative(const InverseSemigroup& S);

// F meets every tight cover of each of its members. Computed through the
// maximal counterexample: F = x^up fails iff some y >= x satisfies
// arrow(y, y-down \ (x^up u {0})).
bool is_tight_filter(const InverseSemigroup& S, Filter F);

struct CoverageReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> failures;

  void fail(const std::string& witness) {
    pass = false;
    if (failures.size() < 10) failures.push_back(witness);
  }
};

// Verifies the coverage axioms (R), (I), (MS), (T) and the basic cover
// calculus on all tight covers with at most max_parts parts.
CoverageReport coverage_axioms_check(const InverseSemigroup& S,
                                     int max_parts = 3);

// All tight covers of a with at most max_parts nonzero parts (canonical
// order). max_parts < 0 means all sizes.
std::vector<std::vector<int>> tight_covers(const InverseSemigroup& S, int a,
                                           int max_parts);

}  // namespace istone

#endif  // ISTONE_COVERAGE_HPP_
