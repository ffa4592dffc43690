#include "istone/patch.hpp"

#include <algorithm>

#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/util.hpp"

namespace istone {

PatchElement patch_product(const InverseSemigroup& S, PatchElement a,
                           PatchElement b) {
  if (!S.leq(a.t, a.s) || !S.leq(b.t, b.s)) {
    throw Error("Malformed", "patch elements need t <= s");
  }
  int su = S.product(a.s, b.s);
  int sv = S.product(a.s, b.t);
  int tu = S.product(a.t, b.s);
  int tv = S.product(a.t, b.t);
  return PatchElement{su, S.join_all({sv, tu, tv})};
}

std::vector<int> patch_members(const Groupoid& G, PatchElement e) {
  std::vector<int> out;
  for (int i = 0; i < G.arrow_count(); ++i) {
    int base = G.arrows[i].base;
    if (G.sgp.leq(base, e.s) && !G.sgp.leq(base, e.t)) out.push_back(i);
  }
  return out;
}

Groupoid patch_spectrum(const InverseSemigroup& S) {
  Groupoid G = prime_spectrum(S);
  std::vector<Topology::Named> sb;
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (!S.leq(t, s)) continue;
      sb.push_back({"X_" + S.name(s) + ";" + S.name(t),
                    patch_members(G, PatchElement{s, t})});
    }
  }
  G.topology = Topology::from_subbasis(G.arrow_count(), std::move(sb));
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);
  return G;
}

Booleanization booleanize(const InverseSemigroup& S, int max_bisections) {
  Booleanization out;
  out.spectrum = patch_spectrum(S);
  out.kb = kb_of(out.spectrum, max_bisections);
  if (!out.kb.sgp.classify().is_boolean) {
    throw Error("NotClosed", "Booleanization failed to be Boolean");
  }
  out.beta.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    out.beta[s] = out.kb.index_of(
        patch_members(out.spectrum, PatchElement{s, 0}));
    if (out.beta[s] < 0) {
      throw Error("NotClosed", "X_s is not a compact-open patch bisection");
    }
  }
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (s != t && out.beta[s] == out.beta[t]) {
        throw Error("NotClosed", "beta failed to be injective");
      }
      if (out.kb.sgp.product(out.beta[s], out.beta[t]) !=
          out.beta[S.product(s, t)]) {
        throw Error("NotClosed", "beta failed to be a homomorphism");
      }
    }
  }
  return out;
}

bool patch_equals_usual(const InverseSemigroup& S) {
  Groupoid plain = prime_spectrum(S);
  Groupoid patched = patch_spectrum(S);
  bool equal = (plain.topology == patched.topology);
  if (equal != S.classify().is_boolean) {
    throw Error("RouteMismatch",
                "patch-vs-usual disagrees with the Boolean classification");
  }
  return equal;
}

std::vector<int> booleanization_lift(const Booleanization& B,
                                     const InverseSemigroup& T,
                                     const std::vector<int>& theta) {
  const InverseSemigroup& S = B.spectrum.sgp;
  if (!T.classify().is_boolean) {
    throw Error("NotBoolean", "the lift target must be Boolean");
  }

  // theta must pull prime filters back to prime filters.
  for (Filter P : all_filters(T)) {
    if (!is_prime_filter(T, P)) continue;
    std::vector<int> pre;
    for (int s = 0; s < S.size(); ++s) {
      if (T.leq(P.base, theta[s])) pre.push_back(s);
    }
    if (pre.empty()) {
      throw Error("PullbackViolation",
                  "theta^-1 of a prime filter is empty at " + T.name(P.base));
    }
    // The preimage is an up-set; it must be directed with a prime principal
    // filter as a result.
    int base = -1;
    for (int m : pre) {
      bool minimum = true;
      for (int c : pre) minimum &= S.leq(m, c);
      if (minimum) {
        base = m;
        break;
      }
    }
    if (base < 0 || !is_prime_filter(S, Filter{base})) {
      throw Error("PullbackViolation",
                  "theta^-1 of a prime filter is not a prime filter at " +
                      T.name(P.base));
    }
  }

  // Greedy decomposition of each open bisection into maximal patch pieces in
  // canonical element order; pieces map to relative complements.
  int m = B.kb.sgp.size();
  std::vector<int> out(m);
  for (int k = 0; k < m; ++k) {
    const std::vector<int>& U = B.kb.bisections[k];
    std::vector<int> remaining = U;
    std::vector<int> value_parts;
    for (int s = 0; s < S.size() && !remaining.empty(); ++s) {
      for (int t = 0; t < S.size() && !remaining.empty(); ++t) {
        if (!S.leq(t, s)) continue;
        std::vector<int> piece = patch_members(B.spectrum, PatchElement{s, t});
        if (piece.empty() || !set_subset(piece, U)) continue;
        if (set_intersect(piece, remaining).empty()) continue;
        value_parts.push_back(
            T.relative_complement(theta[s], theta[t]));
        remaining = set_minus(remaining, piece);
      }
    }
    if (!remaining.empty()) {
      throw Error("NotClosed", "bisection not covered by patch pieces");
    }
    out[k] = T.join_all(value_parts);
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (B.kb.sgp.product(i, j) >= 0 &&
          out[B.kb.sgp.product(i, j)] != T.product(out[i], out[j])) {
        throw Error("NotClosed", "lift failed to be multiplicative");
      }
    }
  }
  for (int s = 0; s < S.size(); ++s) {
    if (out[B.beta[s]] != theta[s]) {
      throw Error("NotClosed", "lift does not extend theta");
    }
  }
  return out;
}

Groupoid universal_groupoid(const InverseSemigroup& S) {
  Groupoid G = filter_groupoid(S);
  std::vector<Topology::Named> sb;
  for (int x = 0; x < S.size(); ++x) {
    for (int y = 0; y < S.size(); ++y) {
      if (!S.leq(y, x)) continue;
      std::vector<int> members;
      for (int i = 0; i < G.arrow_count(); ++i) {
        int base = G.arrows[i].base;
        if (S.leq(base, x) && !S.leq(base, y)) members.push_back(i);
      }
      sb.push_back({"U_" + S.name(x) + ";" + S.name(y), std::move(members)});
    }
  }
  G.topology = Topology::from_subbasis(G.arrow_count(), std::move(sb));
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);
  return G;
}

PatersonResult paterson_bs(const InverseSemigroup& S, int max_bisections) {
  PatersonResult out{distributive_completion(S), {}, {}};
  out.B = booleanize(out.D.sgp, max_bisections);
  out.gamma.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    out.gamma[s] = out.B.beta[out.D.embed[s]];
  }
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (s != t && out.gamma[s] == out.gamma[t]) {
        throw Error("NotClosed", "gamma failed to be injective");
      }
    }
  }
  // gamma pulls prime filters of BS(S) back to filters of S.
  const InverseSemigroup& BS = out.B.kb.sgp;
  for (Filter P : all_filters(BS)) {
    if (!is_prime_filter(BS, P)) continue;
    std::vector<int> pre;
    for (int s = 0; s < S.size(); ++s) {
      if (BS.leq(P.base, out.gamma[s])) pre.push_back(s);
    }
    if (pre.empty()) {
      throw Error("NotClosed", "gamma^-1 of a prime filter is empty");
    }
    bool has_min = false;
    for (int m : pre) {
      bool minimum = true;
      for (int c : pre) minimum &= S.leq(m, c);
      has_min |= minimum;
    }
    if (!has_min) {
      throw Error("NotClosed", "gamma^-1 of a prime filter is not a filter");
    }
  }
  return out;
}

Groupoid exel_tight_groupoid(const InverseSemigroup& S) {
  return patch_spectrum(tight_completion(S).sgp);
}

}  // namespace istone
