#ifndef ISTONE_COMPLETIONS_HPP_
#define ISTONE_COMPLETIONS_HPP_

#include <optional>
#include <vector>

#include "istone/coverage.hpp"
#include "istone/ideals.hpp"
#include "istone/semigroup.hpp"

namespace istone {

// A completion of a semigroup: a validated table whose elements stand for
// order ideals of the source (for Dt, ideals of the separative quotient).
// Elements are sorted by (carrier size, generator list) so tables are
// reproducible across runs.
struct Completion {
  enum class Kind { D, Idl, Dt };

  Kind kind = Kind::D;
  InverseSemigroup sgp;
  std::vector<Ideal> elements;
  std::vector<int> embed;  // iota (or delta for Dt): source id -> element id
  std::optional<TightQuotient> quotient;  // present for Dt

  int element_of(const Ideal& I) const;  // index lookup, -1 if absent
};

// D(S): all compatible order ideals under subset multiplication, with
// iota(s) = s-down. Always distributive. Guarded by max_elements.
Completion distributive_completion(const InverseSemigroup& S,
                                   int max_elements = 4096);

// Idl(S) for distributive S: the vee-closed compatible order ideals. In the
// finite distributive case a |-> a-down is an isomorphism onto it (checked).
Completion idl_completion(const InverseSemigroup& S, int max_elements = 4096);

// The unique morphism D(S) -> T extending a 0-preserving homomorphism
// theta: S -> T into a distributive semigroup: antichains map to joins of
// their images. Throws JoinMissing when T lacks a needed join.
std::vector<int> lift_through_D(const Completion& D, const InverseSemigroup& T,
                                const std::vector<int>& theta);

// The tight closure of a compatible order ideal over a separative semigroup:
// all x admitting a tight cover inside A. A nucleus on ideal multiplication.
// check_separative skips the (quadratic) precondition test when the caller
// has already established it.
Ideal tight_closure(const InverseSemigroup& S, const Ideal& A,
                    bool check_separative = true);

// D_t(S): tight closures of the compatible order ideals of the separative
// quotient, with delta(s) = closure of sigma(s)-down. Distributive; delta is
// a tight map, universal for tight maps into distributive semigroups.
Completion tight_completion(const InverseSemigroup& S, int max_elements = 4096);

// Both routes: the tight completion is Boolean, and every tight filter is an
// ultrafilter. Checked against each other.
bool is_pre_boolean(const InverseSemigroup& S);

}  // namespace istone

#endif  // ISTONE_COMPLETIONS_HPP_
