#include <doctest.h>

#include "istone/catalog.hpp"
#include "istone/completions.hpp"
#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/morphisms.hpp"
#include "istone/oracles.hpp"
#include "istone/util.hpp"
#include "pinj_oracle.hpp"

using namespace istone;

TEST_CASE("distributive completion sizes and structure") {
  CHECK(distributive_completion(catalog::build("chain:1")).sgp.size() == 1);
  CHECK(distributive_completion(catalog::build("antichain:2")).sgp.size() == 4);
  CHECK(distributive_completion(catalog::build("antichain:3")).sgp.size() == 8);
  CHECK(distributive_completion(catalog::build("sym_inv:2")).sgp.size() == 9);
  CHECK(distributive_completion(catalog::build("sym_inv:3")).sgp.size() == 100);
  CHECK(distributive_completion(catalog::build("brandt:cyclic:1:2")).sgp.size() ==
        7);  // D(B2) is I2

  // A chain is its own distributive completion.
  Completion Dc = distributive_completion(catalog::build("chain:4"));
  CHECK(Dc.sgp.size() == 4);
  for (const auto& id : catalog::members()) {
    CAPTURE(id);
    Completion D = distributive_completion(catalog::build(id));
    CHECK(D.sgp.classify().is_distributive);
  }
}

TEST_CASE("D(antichain:2) is the four-element Boolean algebra") {
  Completion D = distributive_completion(catalog::build("antichain:2"));
  CHECK(D.sgp.classify().is_boolean);
  CHECK(D.sgp.classify().is_meet_semigroup);
  // Element count pins it as 2^2 among Boolean semilattices.
  CHECK(D.sgp.size() == 4);
  CHECK(D.sgp.classify().idempotents.size() == 4);
}

TEST_CASE("lift through D") {
  auto A = catalog::build("antichain:2");
  Completion D = distributive_completion(A);
  auto P = catalog::build("powerset:2");

  // theta = iota gives the identity lift on D(S).
  std::vector<int> iota = D.embed;
  auto idlift = lift_through_D(D, D.sgp, iota);
  for (int k = 0; k < D.sgp.size(); ++k) CHECK(idlift[k] == k);

  // The inclusion of atoms extends to the isomorphism D(antichain:2) -> 2^2.
  std::vector<int> theta = {0, 1, 2};
  REQUIRE(is_homomorphism(A, P, theta));
  auto lift = lift_through_D(D, P, theta);
  CHECK(is_morphism(D.sgp, P, lift));
  std::vector<char> hit(4, 0);
  for (int k = 0; k < 4; ++k) hit[lift[k]] = 1;
  CHECK(hit == std::vector<char>(4, 1));

  // Constant zero lifts to constant zero.
  std::vector<int> zero(A.size(), 0);
  for (int v : lift_through_D(D, P, zero)) CHECK(v == 0);

  // A target missing the needed join is rejected: the identity on the
  // antichain cannot extend to D(S) because a v b does not exist there.
  std::vector<int> identity = {0, 1, 2};
  CHECK_THROWS_AS((void)lift_through_D(D, A, identity), Error);
}

TEST_CASE("Idl collapses to principal ideals") {
  for (const auto& id : {"chain:3", "sym_inv:2", "powerset:3"}) {
    auto S = catalog::build(id);
    Completion I = idl_completion(S);
    CHECK(I.sgp.size() == S.size());
    // The embedding is an isomorphism.
    for (int s = 0; s < S.size(); ++s) {
      for (int t = 0; t < S.size(); ++t) {
        CHECK(I.sgp.product(I.embed[s], I.embed[t]) == I.embed[S.product(s, t)]);
      }
    }
  }
  CHECK_THROWS_AS((void)idl_completion(catalog::build("antichain:2")), Error);
}

TEST_CASE("tight closure") {
  auto S = catalog::build("sym_inv:2");
  REQUIRE(is_separative(S));
  for (int s = 0; s < S.size(); ++s) {
    Ideal p = down(S, {s});
    CHECK(tight_closure(S, p) == p);
  }
  // closure of {a,b}-down gains the join tau.
  auto maps = pinj::all_maps(2);
  int a = pinj::id_of(maps, {{1, 2}});
  int b = pinj::id_of(maps, {{2, 1}});
  int tau = pinj::id_of(maps, {{1, 2}, {2, 1}});
  CHECK(tight_closure(S, down(S, {a, b})).contains(tau));

  auto A = catalog::build("antichain:2");
  CHECK(tight_closure(A, down(A, {1, 2})) == down(A, {1, 2}));
  CHECK(tight_closure(A, down(A, {0})) == down(A, {0}));

  auto chain = catalog::build("chain:3");
  CHECK_FALSE(is_separative(chain));
  CHECK_THROWS_AS((void)tight_closure(chain, down(chain, {1})), Error);
}

TEST_CASE("tight completions") {
  CHECK(tight_completion(catalog::build("chain:3")).sgp.size() == 2);
  CHECK(tight_completion(catalog::build("chain:4")).sgp.size() == 2);
  CHECK(tight_completion(catalog::build("antichain:2")).sgp.size() == 4);
  CHECK(tight_completion(catalog::build("sym_inv:2")).sgp.size() == 7);
  CHECK(tight_completion(catalog::build("sym_inv:3")).sgp.size() == 34);

  for (const auto& id : catalog::members()) {
    CAPTURE(id);
    Completion Dt = tight_completion(catalog::build(id));
    CHECK(Dt.sgp.classify().is_distributive);
  }
}

TEST_CASE("delta is a tight map") {
  for (const auto& id : catalog::members()) {
    CAPTURE(id);
    auto S = catalog::build(id);
    Completion Dt = tight_completion(S);
    CHECK(is_tight_map(S, Dt.sgp, Dt.embed));
    if (S.size() <= 7) {
      CHECK(oracle::is_tight_map(S, Dt.sgp, Dt.embed));
    }
  }
}

TEST_CASE("pre-Boolean members") {
  CHECK(is_pre_boolean(catalog::build("chain:3")));
  CHECK(is_pre_boolean(catalog::build("sym_inv:2")));
  CHECK(is_pre_boolean(catalog::build("antichain:3")));
  CHECK(is_pre_boolean(catalog::build("group0:sym:3")));
  CHECK(is_pre_boolean(catalog::build("brandt:cyclic:2:2")));
}

TEST_CASE("proper covers disqualify their targets' filters") {
  // In 2^2 the atoms cover the top, so top^up is not tight while the atom
  // filters are.
  auto S = catalog::build("powerset:2");
  CHECK(is_tight_cover(S, make_cover(S, 3, {1, 2})));
  CHECK_FALSE(is_tight_filter(S, Filter{3}));
  CHECK(is_tight_filter(S, Filter{1}));
  CHECK(is_separative(S));
  CHECK(is_pre_boolean(S));
}

TEST_CASE("finitely, tight filters are exactly the ultrafilters") {
  // The minimal elements below y always form a tight cover of y, which
  // pins every tight filter at a minimal base. Every member is therefore
  // pre-Boolean; the sweep records this rather than assuming it.
  for (const auto& id : catalog::members()) {
    CAPTURE(id);
    auto S = catalog::build(id);
    for (Filter F : all_filters(S)) {
      CHECK(is_tight_filter(S, F) == is_ultrafilter(S, F));
    }
  }
}
