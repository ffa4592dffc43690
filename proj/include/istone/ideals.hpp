#ifndef ISTONE_IDEALS_HPP_
#define ISTONE_IDEALS_HPP_

#include <vector>

#include "istone/semigroup.hpp"
#include "istone/util.hpp"

namespace istone {

// An order ideal in canonical form: the antichain of its maximal elements
// (ascending, zero never listed) plus the full downward closure (ascending,
// always containing 0). Two ideals are equal iff their carriers are equal
// iff their generator antichains are equal.
struct Ideal {
  std::vector<int> generators;
  std::vector<int> carrier;

  bool contains(int x) const { return set_contains(carrier, x); }
  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.carrier == b.carrier;
  }
};

// Downward closure of A, canonicalized.
Ideal down(const InverseSemigroup& S, const std::vector<int>& A);

// Upward closure of A.
std::vector<int> up(const InverseSemigroup& S, const std::vector<int>& A);

bool is_order_ideal(const InverseSemigroup& S, const std::vector<int>& A);
bool is_compatible_ideal(const InverseSemigroup& S, const Ideal& A);
bool is_proper_ideal(const InverseSemigroup& S, const Ideal& A);

// Smallest vee-closed order ideal containing A: the fixpoint of adding
// existing joins of compatible pairs together with their down-sets.
// Idempotent and monotone; in a distributive semigroup this is exactly the
// set of joins of finite nonempty compatible subsets of A.
Ideal vee_closure(const InverseSemigroup& S, const Ideal& A);

bool is_vee_closed(const InverseSemigroup& S, const Ideal& A);

// The order ideal generated by {ab : a in A, b in B}.
Ideal ideal_product(const InverseSemigroup& S, const Ideal& A, const Ideal& B);

// P is prime when a-down ^ b-down inside P forces a in P or b in P.
bool is_prime_ideal(const InverseSemigroup& S, const Ideal& P);

// A vee-closed order ideal J >= I, disjoint from the filter F, maximal with
// these properties. Deterministic: candidates are added greedily in
// ascending id order with closure re-saturation. Throws NotDisjoint if I
// already meets F.
Ideal maximal_disjoint_ideal(const InverseSemigroup& S, const Ideal& I,
                             Filter F);

}  // namespace istone

#endif  // ISTONE_IDEALS_HPP_
