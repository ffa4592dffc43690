#ifndef ISTONE_FILTERS_HPP_
#define ISTONE_FILTERS_HPP_

#include <optional>
#include <vector>

#include "istone/semigroup.hpp"

namespace istone {

// All proper filters, one per nonzero element, sorted by base id.
std::vector<Filter> all_filters(const InverseSemigroup& S);

// The members of F as element ids (ascending).
std::vector<int> filter_members(const InverseSemigroup& S, Filter F);

// Prime: a v b in F forces a in F or b in F, over all existing compatible
// joins.
bool is_prime_filter(const InverseSemigroup& S, Filter F);

// Ultrafilter: maximal proper filter; finitely, the base is minimal nonzero.
bool is_ultrafilter(const InverseSemigroup& S, Filter F);

// Verification route for ultrafilters via the meet-semilattice criterion
// (only meaningful when F sits inside E(S)): F is an ultrafilter iff every a
// meeting all of F nontrivially already lies in F.
bool is_ultrafilter_meet_criterion(const InverseSemigroup& S, Filter F);

bool is_idempotent_filter(const InverseSemigroup& S, Filter F);

Filter filter_d(const InverseSemigroup& S, Filter F);
Filter filter_r(const InverseSemigroup& S, Filter F);
Filter filter_inverse(const InverseSemigroup& S, Filter F);

// Defined iff d(F) = r(G); the result is (xy)^up for the bases x, y.
std::optional<Filter> filter_product(const InverseSemigroup& S, Filter F,
                                     Filter G);

// A prime filter containing b and omitting a, built from a maximal
// vee-closed order ideal disjoint from b^up. Throws BelowViolation when
// b <= a, and NotSeparable if no prime filter separates the pair (cannot
// happen for distributive S).
Filter separating_prime_filter(const InverseSemigroup& S, int a, int b);

}  // namespace istone

#endif  // ISTONE_FILTERS_HPP_
