#include "istone/verify.hpp"

#include <algorithm>

#include "istone/completions.hpp"
#include "istone/coverage.hpp"
#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/groupoid.hpp"
#include "istone/ideals.hpp"
#include "istone/morphisms.hpp"
#include "istone/oracles.hpp"
#include "istone/patch.hpp"
#include "istone/util.hpp"

namespace istone {
namespace verify {

namespace {

Check ok(const std::string& name, const std::string& detail = "") {
  return Check{name, true, detail};
}

Check bad(const std::string& name, const std::string& detail) {
  return Check{name, false, detail};
}

Check from_iso(const std::string& name, const IsoReport& rep) {
  return Check{name, rep.ok, rep.detail};
}

bool distributive(const InverseSemigroup& S) {
  return S.classify().is_distributive;
}

}  // namespace

Checks duality(const InverseSemigroup& S) {
  Checks out;
  if (distributive(S)) {
    out.push_back(from_iso("epsilon-iso", epsilon_check(S)));
    out.push_back(from_iso("eta-iso-prime-spectrum", eta_check(prime_spectrum(S))));
  } else {
    out.push_back(ok("epsilon-iso", "skipped: not distributive"));
  }
  out.push_back(from_iso("eta-iso-tight-spectrum", eta_check(tight_spectrum(S))));
  return out;
}

Checks filter_theory(const InverseSemigroup& S) {
  Checks out;
  auto filters = all_filters(S);

  bool ultra_prime = true;
  for (Filter F : filters) {
    if (is_ultrafilter(S, F) && !is_prime_filter(S, F)) ultra_prime = false;
  }
  out.push_back(ultra_prime ? ok("ultrafilters-are-prime")
                            : bad("ultrafilters-are-prime", "counterexample"));

  if (distributive(S)) {
    bool all_prime_ultra = true;
    for (Filter F : filters) {
      if (is_prime_filter(S, F) && !is_ultrafilter(S, F)) {
        all_prime_ultra = false;
      }
    }
    bool boolean = S.classify().is_boolean;
    out.push_back(all_prime_ultra == boolean
                      ? ok("boolean-iff-prime-are-ultra")
                      : bad("boolean-iff-prime-are-ultra",
                            "classification and filters disagree"));
  } else {
    out.push_back(ok("boolean-iff-prime-are-ultra", "skipped: not distributive"));
  }

  // Prime and ultra classes are stable under inverse and d.
  bool stable = true;
  for (Filter F : filters) {
    Filter Fi = filter_inverse(S, F);
    Filter Fd = filter_d(S, F);
    if (is_prime_filter(S, F) != is_prime_filter(S, Fi)) stable = false;
    if (is_prime_filter(S, F) != is_prime_filter(S, Fd)) stable = false;
    if (is_ultrafilter(S, F) != is_ultrafilter(S, Fi)) stable = false;
    if (is_ultrafilter(S, F) != is_ultrafilter(S, Fd)) stable = false;
  }
  out.push_back(stable ? ok("prime-ultra-stable-under-inverse-and-d")
                       : bad("prime-ultra-stable-under-inverse-and-d",
                             "counterexample"));

  // Every nonzero element lies in an ultrafilter.
  bool covered = true;
  for (int x = 1; x < S.size(); ++x) {
    bool found = false;
    for (Filter F : filters) {
      if (S.leq(F.base, x) && is_ultrafilter(S, F)) found = true;
    }
    covered &= found;
  }
  out.push_back(covered ? ok("nonzero-elements-meet-ultrafilters")
                        : bad("nonzero-elements-meet-ultrafilters",
                              "counterexample"));

  // F = (a d(F))^up for every a in F.
  bool regen = true;
  for (Filter F : filters) {
    for (int a = 0; a < S.size(); ++a) {
      if (S.leq(F.base, a) && S.product(a, S.d(F.base)) != F.base) regen = false;
    }
  }
  out.push_back(regen ? ok("filter-regeneration")
                      : bad("filter-regeneration", "counterexample"));
  return out;
}

Checks separation(const InverseSemigroup& S) {
  Checks out;
  long pairs = 0;
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 1; b < S.size(); ++b) {
      if (S.leq(b, a)) continue;
      ++pairs;
      try {
        Filter P = separating_prime_filter(S, a, b);
        if (!is_prime_filter(S, P) || !S.leq(P.base, b) || S.leq(P.base, a)) {
          out.push_back(bad("separating-prime-filter",
                            "fails at (" + S.name(a) + "," + S.name(b) + ")"));
          return out;
        }
      } catch (const Error& e) {
        out.push_back(bad("separating-prime-filter",
                          std::string(e.what()) + " at (" + S.name(a) + "," +
                              S.name(b) + ")"));
        return out;
      }
    }
  }
  out.push_back(ok("separating-prime-filter",
                   std::to_string(pairs) + " pairs separated"));
  return out;
}

Checks completion_basics(const InverseSemigroup& S) {
  Checks out;
  Completion D = distributive_completion(S);
  out.push_back(D.sgp.classify().is_distributive
                    ? ok("distributive-completion",
                         std::to_string(D.sgp.size()) + " elements")
                    : bad("distributive-completion", "not distributive"));

  bool injective = true;
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < s; ++t) {
      if (D.embed[s] == D.embed[t]) injective = false;
    }
  }
  out.push_back(injective ? ok("iota-injective")
                          : bad("iota-injective", "collision"));

  if (distributive(S)) {
    Completion I = idl_completion(S);
    bool iso = static_cast<int>(I.elements.size()) == S.size();
    out.push_back(iso ? ok("idl-iso", "Idl(S) = principal ideals")
                      : bad("idl-iso", "non-principal vee-closed ideal"));

    // Prime filters of Idl(S) correspond to prime filters of S.
    bool correspond = true;
    for (Filter F : all_filters(I.sgp)) {
      int base_elem = -1;
      for (int s = 0; s < S.size(); ++s) {
        if (I.embed[s] == F.base) base_elem = s;
      }
      if (base_elem < 0 ||
          is_prime_filter(I.sgp, F) != is_prime_filter(S, Filter{base_elem})) {
        correspond = false;
      }
    }
    out.push_back(correspond ? ok("idl-prime-filter-correspondence")
                             : bad("idl-prime-filter-correspondence",
                                   "counterexample"));
  } else {
    out.push_back(ok("idl-iso", "skipped: not distributive"));
  }
  return out;
}

Checks paterson(const InverseSemigroup& S) {
  Checks out;
  Completion D = distributive_completion(S);

  Groupoid G = filter_groupoid(S);
  Groupoid H = prime_spectrum(D.sgp);
  std::vector<int> phi(G.arrow_count(), -1);
  bool mapped = true;
  for (int i = 0; i < G.arrow_count(); ++i) {
    phi[i] = H.arrow_of(D.embed[G.arrows[i].base]);
    mapped &= phi[i] >= 0;
  }
  if (!mapped) {
    out.push_back(bad("filters-vs-prime-filters-of-D",
                      "principal ideal is not a prime filter base"));
    return out;
  }
  out.push_back(
      from_iso("filters-vs-prime-filters-of-D", topological_iso_check(G, H, phi)));

  Groupoid Gu = universal_groupoid(S);
  Groupoid Hp = patch_spectrum(D.sgp);
  out.push_back(from_iso("universal-groupoid-vs-patch-of-D",
                         topological_iso_check(Gu, Hp, phi)));
  return out;
}

Checks booleanization(const InverseSemigroup& S) {
  Checks out;
  if (!distributive(S)) {
    out.push_back(ok("booleanization", "skipped: not distributive"));
    return out;
  }
  Booleanization B = booleanize(S);
  out.push_back(B.kb.sgp.classify().is_boolean
                    ? ok("B-is-boolean", std::to_string(B.kb.sgp.size()) +
                                             " elements")
                    : bad("B-is-boolean", "classification failed"));

  out.push_back(is_morphism(S, B.kb.sgp, B.beta)
                    ? ok("beta-join-preserving-injection")
                    : bad("beta-join-preserving-injection", "not a morphism"));

  bool agrees = patch_equals_usual(S) == S.classify().is_boolean;
  out.push_back(agrees ? ok("patch-equals-usual-iff-boolean")
                       : bad("patch-equals-usual-iff-boolean", "mismatch"));

  out.push_back(B.spectrum.topology.is_discrete()
                    ? ok("patch-topology-discrete")
                    : bad("patch-topology-discrete", "nontrivial neighborhood"));

  auto shortcut = all_local_bisections(B.spectrum);
  out.push_back(shortcut == B.kb.bisections
                    ? ok("B-equals-all-local-bisections")
                    : bad("B-equals-all-local-bisections", "routes disagree"));
  return out;
}

Checks tight(const InverseSemigroup& S) {
  Checks out;
  auto filters = all_filters(S);

  bool ultra_tight = true;
  for (Filter F : filters) {
    if (is_ultrafilter(S, F) && !is_tight_filter(S, F)) ultra_tight = false;
  }
  out.push_back(ultra_tight ? ok("ultrafilters-are-tight")
                            : bad("ultrafilters-are-tight", "counterexample"));

  Completion Dt = tight_completion(S);
  out.push_back(Dt.sgp.classify().is_distributive
                    ? ok("tight-completion-distributive",
                         std::to_string(Dt.sgp.size()) + " elements")
                    : bad("tight-completion-distributive", "failed"));

  // delta is a tight map.
  out.push_back(is_tight_map(S, Dt.sgp, Dt.embed)
                    ? ok("delta-tight")
                    : bad("delta-tight", "delta misses a cover join"));

  // Tight filters of S vs prime filters of D_t(S): F = x^up maps to the
  // principal filter of D_t at delta(x). Order isomorphism, ultrafilters
  // matching, and a homeomorphism of groupoids.
  Groupoid GT = tight_spectrum(S);
  Groupoid H = prime_spectrum(Dt.sgp);
  std::vector<int> phi(GT.arrow_count(), -1);
  bool well = true;
  for (int i = 0; i < GT.arrow_count(); ++i) {
    phi[i] = H.arrow_of(Dt.embed[GT.arrows[i].base]);
    well &= phi[i] >= 0;
  }
  if (!well) {
    out.push_back(bad("tight-filters-vs-prime-filters-of-Dt",
                      "delta of a tight base is not a prime filter base"));
    return out;
  }
  out.push_back(from_iso("tight-filters-vs-prime-filters-of-Dt",
                         topological_iso_check(GT, H, phi)));

  bool order_iso = true;
  for (int i = 0; i < GT.arrow_count(); ++i) {
    for (int j = 0; j < GT.arrow_count(); ++j) {
      bool sub_s = S.leq(GT.arrows[j].base, GT.arrows[i].base);
      bool sub_d = Dt.sgp.leq(H.arrows[phi[j]].base, H.arrows[phi[i]].base);
      if (sub_s != sub_d) order_iso = false;
    }
  }
  out.push_back(order_iso ? ok("tight-filter-order-iso")
                          : bad("tight-filter-order-iso", "order mismatch"));

  bool ultra_match = true;
  for (int i = 0; i < GT.arrow_count(); ++i) {
    if (is_ultrafilter(S, GT.arrows[i]) !=
        is_ultrafilter(Dt.sgp, H.arrows[phi[i]])) {
      ultra_match = false;
    }
  }
  out.push_back(ultra_match ? ok("ultrafilters-match-under-order-iso")
                            : bad("ultrafilters-match-under-order-iso",
                                  "counterexample"));

  // The Exel groupoid has the same arrows with a finer (patch) topology.
  Groupoid Exel = exel_tight_groupoid(S);
  bool same_arrows = Exel.arrows.size() == H.arrows.size();
  for (std::size_t i = 0; same_arrows && i < Exel.arrows.size(); ++i) {
    same_arrows = Exel.arrows[i] == H.arrows[i];
  }
  bool finer = same_arrows;
  for (int p = 0; finer && p < Exel.arrow_count(); ++p) {
    finer = set_subset(Exel.topology.min_nbhd[p], H.topology.min_nbhd[p]);
  }
  out.push_back(finer ? ok("exel-groupoid-patch-refinement",
                           std::to_string(Exel.arrow_count()) + " arrows")
                      : bad("exel-groupoid-patch-refinement", "mismatch"));

  // Tight filters across the separative quotient are in base-level bijection.
  TightQuotient Q = tight_quotient(S);
  std::vector<int> tight_bases, quotient_tight_bases;
  for (Filter F : filters) {
    if (is_tight_filter(S, F)) tight_bases.push_back(Q.sigma[F.base]);
  }
  for (Filter F : all_filters(Q.sgp)) {
    if (is_tight_filter(Q.sgp, F)) quotient_tight_bases.push_back(F.base);
  }
  out.push_back(set_sorted(tight_bases) == set_sorted(quotient_tight_bases) &&
                        tight_bases.size() == set_sorted(tight_bases).size()
                    ? ok("tight-filters-match-quotient")
                    : bad("tight-filters-match-quotient", "bijection fails"));
  return out;
}

Checks coverage_axioms(const InverseSemigroup& S, int cover_size) {
  Checks out;
  CoverageReport rep = coverage_axioms_check(S, cover_size);
  std::string detail = std::to_string(rep.checked) + " instances";
  for (const auto& f : rep.failures) detail += "; " + f;
  out.push_back(Check{"coverage-axioms", rep.pass, detail});
  return out;
}

Checks nucleus(const InverseSemigroup& S, int max_ideals) {
  Checks out;
  TightQuotient Q = tight_quotient(S);
  Completion D;
  try {
    D = distributive_completion(Q.sgp, max_ideals);
  } catch (const Error& e) {
    if (e.code() == "TooLarge") {
      out.push_back(ok("nucleus-laws", "skipped: ideal count above bound"));
      return out;
    }
    throw;
  }
  const auto& ideals = D.elements;
  if (!is_separative(Q.sgp)) {
    out.push_back(bad("nucleus-laws", "quotient is not separative"));
    return out;
  }

  bool n123 = true, n4 = true, n5 = true, principal = true;
  std::vector<Ideal> closures;
  for (const Ideal& A : ideals) {
    closures.push_back(tight_closure(Q.sgp, A, false));
  }

  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!set_subset(ideals[i].carrier, closures[i].carrier)) n123 = false;
    Ideal twice = tight_closure(Q.sgp, closures[i], false);
    if (!(twice == closures[i])) n123 = false;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      if (set_subset(ideals[i].carrier, ideals[j].carrier) &&
          !set_subset(closures[i].carrier, closures[j].carrier)) {
        n123 = false;
      }
    }
    bool all_idem = true;
    for (int x : ideals[i].carrier) all_idem &= Q.sgp.idempotent(x);
    if (all_idem) {
      for (int x : closures[i].carrier) {
        if (!Q.sgp.idempotent(x)) n5 = false;
      }
    }
  }
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    for (std::size_t j = 0; j < ideals.size(); ++j) {
      Ideal lhs = ideal_product(Q.sgp, closures[i], closures[j]);
      Ideal rhs =
          tight_closure(Q.sgp, ideal_product(Q.sgp, ideals[i], ideals[j]), false);
      if (!set_subset(lhs.carrier, rhs.carrier)) n4 = false;
    }
  }
  for (int s = 0; s < Q.sgp.size(); ++s) {
    Ideal p = down(Q.sgp, {s});
    if (!(tight_closure(Q.sgp, p, false) == p)) principal = false;
  }

  out.push_back(n123 ? ok("nucleus-N1-N3") : bad("nucleus-N1-N3", "law fails"));
  out.push_back(n4 ? ok("nucleus-N4") : bad("nucleus-N4", "law fails"));
  out.push_back(n5 ? ok("nucleus-N5") : bad("nucleus-N5", "law fails"));
  out.push_back(principal ? ok("principal-ideals-tightly-closed")
                          : bad("principal-ideals-tightly-closed",
                                "counterexample"));
  return out;
}

Checks oracle_equivalence(const InverseSemigroup& S) {
  Checks out;
  if (S.size() <= 7) {
    auto expected = oracle::directed_upsets(S);
    std::vector<std::vector<int>> actual;
    for (Filter F : all_filters(S)) actual.push_back(filter_members(S, F));
    std::sort(actual.begin(), actual.end());
    out.push_back(actual == expected
                      ? ok("filters-match-directed-upsets",
                           std::to_string(actual.size()) + " filters")
                      : bad("filters-match-directed-upsets", "sets differ"));

    bool equiv_ok = true;
    for (int a = 0; a < S.size(); ++a) {
      for (int b = 0; b < S.size(); ++b) {
        if (tight_equiv(S, a, b) != oracle::tight_equiv(S, a, b)) {
          equiv_ok = false;
        }
      }
    }
    out.push_back(equiv_ok ? ok("tight-equiv-matches-oracle")
                           : bad("tight-equiv-matches-oracle", "mismatch"));

    bool tf_ok = true;
    for (Filter F : all_filters(S)) {
      if (is_tight_filter(S, F) != oracle::is_tight_filter(S, F)) tf_ok = false;
    }
    out.push_back(tf_ok ? ok("tight-filters-match-oracle")
                        : bad("tight-filters-match-oracle", "mismatch"));
  } else {
    out.push_back(ok("filters-match-directed-upsets", "skipped: |S| > 7"));
  }

  // Pre-Boolean verdicts from both routes agree (throws on mismatch).
  bool pre = is_pre_boolean(S);
  out.push_back(ok("pre-boolean-routes-agree", pre ? "pre-Boolean" : "not pre-Boolean"));
  return out;
}

Check lift_universal_property(const InverseSemigroup& S,
                              const InverseSemigroup& T) {
  if (!T.classify().is_distributive) {
    return Check{"D-universal-property", true, "skipped: target not distributive"};
  }
  Completion D = distributive_completion(S);
  long checked = 0;
  for (const auto& theta : enumerate_homomorphisms(S, T)) {
    std::vector<int> lift = lift_through_D(D, T, theta);
    for (int s = 0; s < S.size(); ++s) {
      if (lift[D.embed[s]] != theta[s]) {
        return Check{"D-universal-property", false, "lift does not extend theta"};
      }
    }
    if (!is_morphism(D.sgp, T, lift)) {
      return Check{"D-universal-property", false, "lift is not a morphism"};
    }
    std::vector<int> pins(D.sgp.size(), -1);
    for (int s = 0; s < S.size(); ++s) pins[D.embed[s]] = theta[s];
    auto extensions = enumerate_homomorphisms(D.sgp, T, MapClass::Morphism, pins);
    if (extensions.size() != 1 || extensions[0] != lift) {
      return Check{"D-universal-property", false,
                   "expected exactly one extension, got " +
                       std::to_string(extensions.size())};
    }
    ++checked;
  }
  return Check{"D-universal-property", true,
               std::to_string(checked) + " homomorphisms lift uniquely"};
}

Check booleanization_lifts(const InverseSemigroup& S,
                           const InverseSemigroup& T) {
  if (!S.classify().is_distributive) {
    return Check{"booleanization-lift", true, "skipped: source not distributive"};
  }
  if (!T.classify().is_boolean) {
    return Check{"booleanization-lift", true, "skipped: target not Boolean"};
  }
  Booleanization B = booleanize(S);
  long eligible = 0;
  for (const auto& theta : enumerate_homomorphisms(S, T, MapClass::Morphism)) {
    std::vector<int> lift;
    try {
      lift = booleanization_lift(B, T, theta);
    } catch (const Error& e) {
      if (e.code() == "PullbackViolation") continue;  // theta not eligible
      throw;
    }
    ++eligible;
    for (int s = 0; s < S.size(); ++s) {
      if (lift[B.beta[s]] != theta[s]) {
        return Check{"booleanization-lift", false, "lift does not extend theta"};
      }
    }
    if (!is_morphism(B.kb.sgp, T, lift)) {
      return Check{"booleanization-lift", false, "lift is not a morphism"};
    }
    std::vector<int> pins(B.kb.sgp.size(), -1);
    for (int s = 0; s < S.size(); ++s) pins[B.beta[s]] = theta[s];
    auto extensions =
        enumerate_homomorphisms(B.kb.sgp, T, MapClass::Morphism, pins);
    if (extensions.size() != 1 || extensions[0] != lift) {
      return Check{"booleanization-lift", false,
                   "expected exactly one extension, got " +
                       std::to_string(extensions.size())};
    }
  }
  return Check{"booleanization-lift", true,
               std::to_string(eligible) + " eligible morphisms lift uniquely"};
}

Check tight_universal_property(const InverseSemigroup& S,
                               const InverseSemigroup& T) {
  if (!T.classify().is_distributive) {
    return Check{"tight-universal-property", true,
                 "skipped: target not distributive"};
  }
  Completion Dt = tight_completion(S);
  long checked = 0;
  for (const auto& theta : enumerate_homomorphisms(S, T, MapClass::Tight)) {
    std::vector<int> pins(Dt.sgp.size(), -1);
    bool consistent = true;
    for (int s = 0; s < S.size(); ++s) {
      int e = Dt.embed[s];
      if (pins[e] >= 0 && pins[e] != theta[s]) consistent = false;
      pins[e] = theta[s];
    }
    if (!consistent) {
      return Check{"tight-universal-property", false,
                   "tight map does not factor through the quotient"};
    }
    auto extensions = enumerate_homomorphisms(Dt.sgp, T, MapClass::Morphism, pins);
    if (extensions.size() != 1) {
      return Check{"tight-universal-property", false,
                   "expected exactly one extension, got " +
                       std::to_string(extensions.size())};
    }
    ++checked;
  }
  return Check{"tight-universal-property", true,
               std::to_string(checked) + " tight maps extend uniquely"};
}

Checks suite(const std::string& name, const InverseSemigroup& S,
             int cover_size) {
  if (name == "duality") return duality(S);
  if (name == "filters") {
    Checks out = filter_theory(S);
    Checks sep = separation(S);
    out.insert(out.end(), sep.begin(), sep.end());
    return out;
  }
  if (name == "completion") return completion_basics(S);
  if (name == "paterson") return paterson(S);
  if (name == "booleanization") return booleanization(S);
  if (name == "tight") return tight(S);
  if (name == "coverage-axioms") return coverage_axioms(S, cover_size);
  if (name == "nucleus") return nucleus(S);
  if (name == "oracle") return oracle_equivalence(S);
  throw Error("Unsupported", "unknown verify suite: " + name);
}

}  // namespace verify
}  // namespace istone
