#ifndef ISTONE_PATCH_HPP_
#define ISTONE_PATCH_HPP_

#include <utility>
#include <vector>

#include "istone/completions.hpp"
#include "istone/groupoid.hpp"
#include "istone/semigroup.hpp"

namespace istone {

// A patch basis element X_{s;t} = X_s \ X_t with t <= s.
struct PatchElement {
  int s = 0;
  int t = 0;
};

// The algebraic product law X_{s;t} X_{u;v} = X_{su; sv v tu v tv}.
PatchElement patch_product(const InverseSemigroup& S, PatchElement a,
                           PatchElement b);

// The arrows of X_{s;t} inside a groupoid over S.
std::vector<int> patch_members(const Groupoid& G, PatchElement e);

// G_P(S) with the patch topology (same arrows, refined basis).
Groupoid patch_spectrum(const InverseSemigroup& S);

// B(S) = KB of the patch spectrum, with beta(s) = X_s. Boolean; beta is an
// injective join-preserving homomorphism.
struct Booleanization {
  KbSemigroup kb;
  Groupoid spectrum;       // the patch spectrum
  std::vector<int> beta;   // s -> element of kb.sgp
};

Booleanization booleanize(const InverseSemigroup& S, int max_bisections = 20000);

// Whether the patch topology coincides with the usual one; agrees with
// classify(S).is_boolean (mismatch throws RouteMismatch).
bool patch_equals_usual(const InverseSemigroup& S);

// The unique morphism B(S) -> T through beta, for a morphism theta: S -> T
// into a Boolean semigroup that pulls prime filters back to prime filters.
// Throws PullbackViolation when theta fails that condition.
std::vector<int> booleanization_lift(const Booleanization& B,
                                     const InverseSemigroup& T,
                                     const std::vector<int>& theta);

// G(S) retopologized with the multi-subtraction basis U_{x;x1..xn}; single
// subtractions generate the same topology, so those are the subbasis.
Groupoid universal_groupoid(const InverseSemigroup& S);

// BS(S) = B(D(S)) with gamma(s) = X_{s-down}; gamma is injective and pulls
// prime filters back to filters.
struct PatersonResult {
  Completion D;
  Booleanization B;
  std::vector<int> gamma;  // s -> element of B.kb.sgp
};

PatersonResult paterson_bs(const InverseSemigroup& S, int max_bisections = 20000);

// The patch spectrum of the tight completion.
Groupoid exel_tight_groupoid(const InverseSemigroup& S);

}  // namespace istone

#endif  // ISTONE_PATCH_HPP_
