#ifndef ISTONE_GROUPOID_HPP_
#define ISTONE_GROUPOID_HPP_

#include <string>
#include <vector>

#include "istone/semigroup.hpp"

namespace istone {

// A topology on a finite set, presented by a subbasis. Finite topologies are
// determined by minimal neighborhoods: N(p) is the intersection of all
// subbasis sets containing p, and a set is open iff it contains N(p) for
// each of its points. Open-set families are never materialized.
struct Topology {
  struct Named {
    std::string label;
    std::vector<int> members;  // sorted point indices
  };

  int points = 0;
  std::vector<Named> subbasis;
  std::vector<std::vector<int>> min_nbhd;

  static Topology from_subbasis(int points, std::vector<Named> subbasis);

  bool is_open(const std::vector<int>& U) const;
  bool is_discrete() const;
  // Distinct points have distinct minimal neighborhoods. Finite T0 spaces
  // are sober and all their opens are compact, so this stands in for the
  // spectral-space requirements at finite scale.
  bool is_t0() const;
  friend bool operator==(const Topology& a, const Topology& b) {
    return a.points == b.points && a.min_nbhd == b.min_nbhd;
  }
};

// A finite topological groupoid whose arrows are proper filters of an
// inverse semigroup. d/r point at the identity arrows; the product is
// partial (-1 when undefined).
struct Groupoid {
  InverseSemigroup sgp;  // the semigroup the arrow filters live in
  std::vector<Filter> arrows;
  std::vector<int> dmap, rmap, inv;
  std::vector<std::vector<int>> prod;  // -1 = not composable
  std::vector<char> identity;
  Topology topology;

  int arrow_count() const { return static_cast<int>(arrows.size()); }
  int arrow_of(int base) const;  // index of the arrow with this base, -1

  // Set products/inverses of arrow sets.
  std::vector<int> set_product(const std::vector<int>& A,
                               const std::vector<int>& B) const;
  std::vector<int> set_inverse(const std::vector<int>& A) const;
  bool is_local_bisection(const std::vector<int>& A) const;
};

// Groupoid axioms on all composable pairs and triples; throws NotAGroupoid.
void assert_groupoid(const Groupoid& G);

// Continuity of product and inversion plus the Resende criterion: the
// identities form an open set and products of opens are open.
bool is_etale(const Groupoid& G, std::string* why = nullptr);

// G(S): all proper filters with basis U_s.
Groupoid filter_groupoid(const InverseSemigroup& S);

// G_P(S): prime filters with basis X_a; needs S distributive.
Groupoid prime_spectrum(const InverseSemigroup& S);

// G_T(S): tight filters with basis Z_s.
Groupoid tight_spectrum(const InverseSemigroup& S);

// KB(G): the open local bisections under subset product, as a validated
// semigroup (zero = empty set). bisections[k] lists the arrows of element k.
struct KbSemigroup {
  InverseSemigroup sgp;
  std::vector<std::vector<int>> bisections;

  int index_of(const std::vector<int>& A) const;  // -1 if absent
};

KbSemigroup kb_of(const Groupoid& G, int max_bisections = 20000);

// All local bisections, open or not (the finite discrete shortcut).
std::vector<std::vector<int>> all_local_bisections(const Groupoid& G,
                                                   int max_bisections = 20000);

struct IsoReport {
  bool ok = true;
  std::string detail;
  std::vector<int> map;  // domain index -> codomain index
};

// epsilon: S -> KB(G_P(S)), s |-> X_s. Verifies a bijective homomorphism.
IsoReport epsilon_check(const InverseSemigroup& S);

// eta: G -> G_P(KB(G)), g |-> {A : g in A}. Verifies an isomorphism of
// topological groupoids (functor + homeomorphism).
IsoReport eta_check(const Groupoid& G);

// A functor between groupoids as an arrow map.
bool is_functor(const Groupoid& G, const Groupoid& H,
                const std::vector<int>& phi, std::string* why = nullptr);

// Star injective and star surjective; throws NotAFunctor when phi is none.
bool is_covering_functor(const Groupoid& G, const Groupoid& H,
                         const std::vector<int>& phi);

// phi continuous as a map of finite spaces: phi(N(p)) inside N(phi(p)).
bool is_continuous(const Groupoid& G, const Groupoid& H,
                   const std::vector<int>& phi);

// phi as an isomorphism of topological groupoids: a bijective functor whose
// minimal neighborhoods correspond exactly.
IsoReport topological_iso_check(const Groupoid& G, const Groupoid& H,
                                const std::vector<int>& phi);

// Exports.
std::string to_dot(const Groupoid& G);
std::string to_json(const Groupoid& G);

}  // namespace istone

#endif  // ISTONE_GROUPOID_HPP_
