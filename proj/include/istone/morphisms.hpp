#ifndef ISTONE_MORPHISMS_HPP_
#define ISTONE_MORPHISMS_HPP_

#include <optional>
#include <vector>

#include "istone/groupoid.hpp"
#include "istone/semigroup.hpp"

namespace istone {

// Maps between semigroups are total arrays theta[s] of target ids. All maps
// handled here are 0-preserving.

bool is_homomorphism(const InverseSemigroup& S, const InverseSemigroup& T,
                     const std::vector<int>& theta);

// A homomorphism that also preserves the existing binary compatible joins.
bool is_morphism(const InverseSemigroup& S, const InverseSemigroup& T,
                 const std::vector<int>& theta);

struct MorphismClass {
  bool proper = false;
  bool weakly_meet_preserving = false;
  bool callitic = false;
  bool tight = false;
  bool essential = false;
  bool idempotent_pure = false;
  bool coherent = true;  // vacuous on finite spaces; kept for parity
};

// Exhaustive classification of a verified homomorphism.
// - proper uses the join-decomposition criterion (t a compatible join of
//   elements under the image), cross-checkable against filter preimages;
// - tight is decided exactly via the bad-cover reduction: theta fails to be
//   tight iff some a and some t < theta(a) in T make
//   {y <= a : theta(y) <= t} a tight cover of a;
// - essential compares theta on essential pairs x in s.
MorphismClass classify_morphism(const InverseSemigroup& S,
                                const InverseSemigroup& T,
                                const std::vector<int>& theta);

// Properness by the filter-preimage route (cross-check of the criterion).
bool is_proper_by_preimages(const InverseSemigroup& S,
                            const InverseSemigroup& T,
                            const std::vector<int>& theta);

bool is_tight_map(const InverseSemigroup& S, const InverseSemigroup& T,
                  const std::vector<int>& theta);

enum class MapClass { Homomorphism, Morphism, Callitic, Tight };

// All 0-preserving maps of the requested class, in lexicographic order.
// pins may fix theta[i] = v (entries -1 are free). Guarded at |S| <= 12
// free positions over |T| via backtracking with product consistency.
std::vector<std::vector<int>> enumerate_homomorphisms(
    const InverseSemigroup& S, const InverseSemigroup& T,
    MapClass cls = MapClass::Homomorphism,
    const std::vector<int>& pins = {});

// The dual covering functor G_P(T) -> G_P(S) of a callitic morphism:
// P |-> theta^-1(P). Returns the arrow map; throws NotCallitic.
std::vector<int> dual_functor(const InverseSemigroup& S,
                              const InverseSemigroup& T,
                              const std::vector<int>& theta,
                              const Groupoid& GT, const Groupoid& GS);

}  // namespace istone

#endif  // ISTONE_MORPHISMS_HPP_
