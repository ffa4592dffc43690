#include <doctest.h>

#include <algorithm>

#include "istone/catalog.hpp"
#include "istone/completions.hpp"
#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/morphisms.hpp"
#include "istone/oracles.hpp"
#include "istone/patch.hpp"
#include "istone/util.hpp"

using namespace istone;

TEST_CASE("homomorphism and morphism checks") {
  auto S = catalog::build("chain:3");
  auto P = catalog::build("powerset:2");

  std::vector<int> identity = {0, 1, 2};
  CHECK(is_homomorphism(S, S, identity));
  CHECK(is_morphism(S, S, identity));

  std::vector<int> zero = {0, 0, 0};
  CHECK(is_homomorphism(S, P, zero));
  CHECK(is_morphism(S, P, zero));

  // e |-> atom1, f |-> atom1 and e |-> atom1, f |-> top are both fine.
  CHECK(is_morphism(S, P, {0, 1, 1}));
  CHECK(is_morphism(S, P, {0, 1, 3}));

  // e*f = e would need atom1 & atom2 = atom1, but the atoms are disjoint.
  CHECK_FALSE(is_homomorphism(S, P, {0, 1, 2}));
}

TEST_CASE("morphism classification of the canonical maps") {
  auto S = catalog::build("chain:3");

  // beta into the Booleanization is callitic. It is injective, so it cannot
  // be tight here: {e} is a tight cover of f, and a tight map must send f to
  // the join of the cover's image, gluing e and f.
  Booleanization B = booleanize(S);
  MorphismClass cb = classify_morphism(S, B.kb.sgp, B.beta);
  CHECK(cb.proper);
  CHECK(cb.weakly_meet_preserving);
  CHECK(cb.callitic);
  CHECK_FALSE(cb.tight);

  // delta into the tight completion is tight.
  Completion Dt = tight_completion(S);
  MorphismClass cd = classify_morphism(S, Dt.sgp, Dt.embed);
  CHECK(cd.tight);

  // iota into D(S) is proper but, with new joins added, not tight in
  // general.
  auto A = catalog::build("antichain:2");
  Completion D = distributive_completion(A);
  MorphismClass ci = classify_morphism(A, D.sgp, D.embed);
  CHECK(ci.proper);
  CHECK(ci.idempotent_pure);

  // On a chain the identity is callitic but not tight, for the same gluing
  // reason as beta.
  std::vector<int> identity = {0, 1, 2};
  MorphismClass cid = classify_morphism(S, S, identity);
  CHECK(cid.proper);
  CHECK(cid.callitic);
  CHECK_FALSE(cid.tight);
  CHECK(cid.idempotent_pure);
  CHECK(cid.coherent);

  // On a Boolean semigroup every tight cover joins to its target, so the
  // identity is tight and essential.
  auto I2 = catalog::build("sym_inv:2");
  std::vector<int> idI(I2.size());
  for (int s = 0; s < I2.size(); ++s) idI[s] = s;
  MorphismClass cI = classify_morphism(I2, I2, idI);
  CHECK(cI.callitic);
  CHECK(cI.tight);
  CHECK(cI.essential);
}

TEST_CASE("properness routes agree") {
  for (const auto& src : {"chain:3", "antichain:2", "sym_inv:2"}) {
    for (const auto& dst : {"chain:3", "powerset:2", "sym_inv:2"}) {
      auto S = catalog::build(src);
      auto T = catalog::build(dst);
      for (const auto& theta : enumerate_homomorphisms(S, T)) {
        MorphismClass c = classify_morphism(S, T, theta);
        CHECK(c.proper == is_proper_by_preimages(S, T, theta));
      }
    }
  }
}

TEST_CASE("tight maps match the cover-enumeration oracle") {
  for (const auto& src : {"chain:3", "chain:4", "antichain:2", "sym_inv:2"}) {
    for (const auto& dst : {"chain:3", "powerset:2"}) {
      CAPTURE(src);
      CAPTURE(dst);
      auto S = catalog::build(src);
      auto T = catalog::build(dst);
      for (const auto& theta : enumerate_homomorphisms(S, T)) {
        CHECK(is_tight_map(S, T, theta) == oracle::is_tight_map(S, T, theta));
      }
    }
  }
}

TEST_CASE("essential equals tight for morphisms of distributive semigroups") {
  for (const auto& src : {"chain:4", "sym_inv:2", "powerset:2"}) {
    for (const auto& dst : {"powerset:2", "chain:3"}) {
      auto S = catalog::build(src);
      auto T = catalog::build(dst);
      for (const auto& theta :
           enumerate_homomorphisms(S, T, MapClass::Morphism)) {
        MorphismClass c = classify_morphism(S, T, theta);
        CHECK(c.tight == c.essential);
      }
    }
  }
}

TEST_CASE("enumeration basics") {
  auto Z = catalog::build("chain:1");
  for (const auto& dst : {"chain:3", "sym_inv:2"}) {
    CHECK(enumerate_homomorphisms(Z, catalog::build(dst)).size() == 1);
  }

  // Regression: 0-preserving homomorphisms chain:3 -> 2^2. A homomorphism
  // sends e <= f to a <= b with a = b & a: any monotone pair of idempotents.
  auto S = catalog::build("chain:3");
  auto P = catalog::build("powerset:2");
  auto homs = enumerate_homomorphisms(S, P);
  long expected = 0;
  for (int a = 0; a < P.size(); ++a) {
    for (int b = 0; b < P.size(); ++b) {
      if (P.leq(a, b)) ++expected;
    }
  }
  CHECK(static_cast<long>(homs.size()) == expected);  // 9 monotone pairs
  CHECK(std::is_sorted(homs.begin(), homs.end()));

  // Pins cut the search space.
  std::vector<int> pins = {-1, 1, -1};
  for (const auto& h : enumerate_homomorphisms(S, P, MapClass::Homomorphism,
                                               pins)) {
    CHECK(h[1] == 1);
  }

  CHECK_THROWS_AS(
      (void)enumerate_homomorphisms(catalog::build("sym_inv:3"),
                                    catalog::build("powerset:2")),
      Error);
}

TEST_CASE("dual functors of callitic morphisms") {
  auto S = catalog::build("chain:3");
  Booleanization B = booleanize(S);
  const InverseSemigroup& T = B.kb.sgp;

  Groupoid GS = prime_spectrum(S);
  Groupoid GT = prime_spectrum(T);
  auto phi = dual_functor(S, T, B.beta, GT, GS);
  CHECK(is_covering_functor(GT, GS, phi));
  CHECK(is_continuous(GT, GS, phi));

  // The two discrete points cover the two prime filters of the chain.
  std::vector<int> image = phi;
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(static_cast<int>(image.size()) == GS.arrow_count());

  // Identity morphism gives the identity functor.
  std::vector<int> identity = {0, 1, 2};
  auto idphi = dual_functor(S, S, identity, GS, GS);
  for (int i = 0; i < GS.arrow_count(); ++i) CHECK(idphi[i] == i);

  // Non-callitic maps are rejected: constant zero is not proper.
  std::vector<int> zero(S.size(), 0);
  CHECK_THROWS_AS((void)dual_functor(S, S, zero, GS, GS), Error);
}

TEST_CASE("duality is functorial and undoes epsilon") {
  // For callitic theta: S -> T, pulling back X_t basis sets along the dual
  // functor matches theta through the epsilon isomorphisms:
  // phi^-1(X_s) = X_theta(s).
  for (const auto& src : {"chain:3", "powerset:2"}) {
    for (const auto& dst : {"powerset:2", "sym_inv:2"}) {
      auto S = catalog::build(src);
      auto T = catalog::build(dst);
      Groupoid GS = prime_spectrum(S);
      Groupoid GT = prime_spectrum(T);
      for (const auto& theta :
           enumerate_homomorphisms(S, T, MapClass::Callitic)) {
        auto phi = dual_functor(S, T, theta, GT, GS);
        for (int s = 0; s < S.size(); ++s) {
          std::vector<int> pullback;
          for (int p = 0; p < GT.arrow_count(); ++p) {
            if (S.leq(GS.arrows[phi[p]].base, s)) pullback.push_back(p);
          }
          std::vector<int> xt;
          for (int p = 0; p < GT.arrow_count(); ++p) {
            if (T.leq(GT.arrows[p].base, theta[s])) xt.push_back(p);
          }
          CHECK(set_sorted(pullback) == xt);
        }
      }
    }
  }
}

TEST_CASE("composition of callitic morphisms dualizes contravariantly") {
  auto S = catalog::build("chain:3");
  auto T = catalog::build("powerset:2");
  auto U = catalog::build("powerset:2");
  Groupoid GS = prime_spectrum(S);
  Groupoid GT = prime_spectrum(T);
  Groupoid GU = prime_spectrum(U);
  long checked = 0;
  for (const auto& theta : enumerate_homomorphisms(S, T, MapClass::Callitic)) {
    for (const auto& psi : enumerate_homomorphisms(T, U, MapClass::Callitic)) {
      std::vector<int> comp(S.size());
      for (int s = 0; s < S.size(); ++s) comp[s] = psi[theta[s]];
      MorphismClass c = classify_morphism(S, U, comp);
      if (!c.callitic || !is_morphism(S, U, comp)) continue;
      auto phi_theta = dual_functor(S, T, theta, GT, GS);
      auto phi_psi = dual_functor(T, U, psi, GU, GT);
      auto phi_comp = dual_functor(S, U, comp, GU, GS);
      for (int p = 0; p < GU.arrow_count(); ++p) {
        CHECK(phi_comp[p] == phi_theta[phi_psi[p]]);
      }
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("covering functors dualize back to themselves") {
  // The two-fold cover G_P(I2) -> G_P(Z2 with zero) pulls basis sets back to
  // basis sets; the induced semigroup map is callitic and its dual functor
  // is the original cover.
  auto S = catalog::build("sym_inv:2");        // KB(G) under epsilon
  auto T = catalog::build("group0:cyclic:2");  // KB(H) under epsilon
  Groupoid G = prime_spectrum(S);
  Groupoid H = prime_spectrum(T);
  std::vector<int> cover(G.arrow_count());
  for (int i = 0; i < G.arrow_count(); ++i) {
    cover[i] = G.identity[i] ? H.arrow_of(1) : H.arrow_of(2);
  }
  REQUIRE(is_covering_functor(G, H, cover));

  // psi(t) = the element of S with X_psi(t) = cover^-1(X_t).
  std::vector<int> psi(T.size(), -1);
  for (int t = 0; t < T.size(); ++t) {
    std::vector<int> pre;
    for (int g = 0; g < G.arrow_count(); ++g) {
      if (T.leq(H.arrows[cover[g]].base, t)) pre.push_back(g);
    }
    for (int s = 0; s < S.size(); ++s) {
      std::vector<int> xs;
      for (int g = 0; g < G.arrow_count(); ++g) {
        if (S.leq(G.arrows[g].base, s)) xs.push_back(g);
      }
      if (xs == pre) psi[t] = s;
    }
    REQUIRE(psi[t] >= 0);  // preimages of basis sets are basis sets
  }
  REQUIRE(is_morphism(T, S, psi));
  MorphismClass c = classify_morphism(T, S, psi);
  CHECK(c.callitic);
  auto back = dual_functor(T, S, psi, G, H);
  CHECK(back == cover);
}

TEST_CASE("weakly meet preserving maps between Boolean meet semigroups "
          "preserve meets") {
  for (const auto& src : {"powerset:2", "sym_inv:2"}) {
    for (const auto& dst : {"powerset:2", "sym_inv:2"}) {
      auto S = catalog::build(src);
      auto T = catalog::build(dst);
      REQUIRE(S.classify().is_boolean_meet_semigroup);
      REQUIRE(T.classify().is_boolean_meet_semigroup);
      for (const auto& theta : enumerate_homomorphisms(S, T)) {
        MorphismClass c = classify_morphism(S, T, theta);
        if (!c.weakly_meet_preserving) continue;
        for (int a = 0; a < S.size(); ++a) {
          for (int b = 0; b < S.size(); ++b) {
            CHECK(theta[S.meet(a, b).value()] ==
                  T.meet(theta[a], theta[b]).value());
          }
        }
      }
    }
  }
}
