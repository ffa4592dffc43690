#include "istone/morphisms.hpp"

#include <algorithm>

#include "istone/coverage.hpp"
#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/ideals.hpp"
#include "istone/util.hpp"

namespace istone {

bool is_homomorphism(const InverseSemigroup& S, const InverseSemigroup& T,
                     const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != S.size() || theta[0] != 0) return false;
  for (int s = 0; s < S.size(); ++s) {
    if (theta[s] < 0 || theta[s] >= T.size()) return false;
    for (int t = 0; t < S.size(); ++t) {
      if (theta[S.product(s, t)] != T.product(theta[s], theta[t])) return false;
    }
  }
  return true;
}

bool is_morphism(const InverseSemigroup& S, const InverseSemigroup& T,
                 const std::vector<int>& theta) {
  if (!is_homomorphism(S, T, theta)) return false;
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (!S.compatible(s, t)) continue;
      auto j = S.join_compatible(s, t);
      if (!j) continue;
      if (!T.compatible(theta[s], theta[t])) return false;
      auto jt = T.join_compatible(theta[s], theta[t]);
      if (!jt || *jt != theta[*j]) return false;
    }
  }
  return true;
}

bool is_proper_by_preimages(const InverseSemigroup& S,
                            const InverseSemigroup& T,
                            const std::vector<int>& theta) {
  for (Filter P : all_filters(T)) {
    if (!is_prime_filter(T, P)) continue;
    bool nonempty = false;
    for (int s = 0; s < S.size() && !nonempty; ++s) {
      nonempty = T.leq(P.base, theta[s]);
    }
    if (!nonempty) return false;
  }
  return true;
}

namespace {

bool is_proper_by_decomposition(const InverseSemigroup& T,
                                const std::vector<int>& theta) {
  // Every t in T must be a compatible join of elements below the image,
  // i.e. the vee-closure of im(theta)-down must be all of T.
  std::vector<int> image(theta.begin(), theta.end());
  Ideal I = vee_closure(T, down(T, set_sorted(std::move(image))));
  return static_cast<int>(I.carrier.size()) == T.size();
}

bool is_weakly_meet_preserving(const InverseSemigroup& S,
                               const InverseSemigroup& T,
                               const std::vector<int>& theta) {
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      for (int t = 0; t < T.size(); ++t) {
        if (!T.leq(t, theta[a]) || !T.leq(t, theta[b])) continue;
        bool found = false;
        for (int c = 0; c < S.size() && !found; ++c) {
          found = S.leq(c, a) && S.leq(c, b) && T.leq(t, theta[c]);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_essential_map(const InverseSemigroup& S,
                      const std::vector<int>& theta) {
  for (int s = 0; s < S.size(); ++s) {
    for (int x = 1; x < S.size(); ++x) {
      if (is_essential(S, x, s) && theta[x] != theta[s]) return false;
    }
  }
  return true;
}

}  // namespace

bool is_tight_map(const InverseSemigroup& S, const InverseSemigroup& T,
                  const std::vector<int>& theta) {
  // theta is tight iff no a in S and t strictly below theta(a) make
  // F = {y <= a, y != 0 : theta(y) <= t} a tight cover of a: a bad cover X
  // would give t = join theta(X) with X inside F, and F is monotone-maximal.
  for (int a = 0; a < S.size(); ++a) {
    for (int t = 0; t < T.size(); ++t) {
      if (!T.leq(t, theta[a]) || t == theta[a]) continue;
      std::vector<int> F;
      for (int y = 1; y < S.size(); ++y) {
        if (S.leq(y, a) && T.leq(theta[y], t)) F.push_back(y);
      }
      if (arrow(S, a, F)) return false;
    }
  }
  return true;
}

MorphismClass classify_morphism(const InverseSemigroup& S,
                                const InverseSemigroup& T,
                                const std::vector<int>& theta) {
  if (!is_homomorphism(S, T, theta)) {
    throw Error("NotAHomomorphism", "classify_morphism needs a homomorphism");
  }
  MorphismClass out;
  out.proper = is_proper_by_decomposition(T, theta);
  out.weakly_meet_preserving = is_weakly_meet_preserving(S, T, theta);
  out.callitic = out.proper && out.weakly_meet_preserving;
  out.tight = T.classify().is_distributive && is_tight_map(S, T, theta);
  out.essential = is_essential_map(S, theta);
  out.idempotent_pure = true;
  for (int s = 0; s < S.size(); ++s) {
    if (T.idempotent(theta[s]) && !S.idempotent(s)) out.idempotent_pure = false;
  }
  return out;
}

std::vector<std::vector<int>> enumerate_homomorphisms(
    const InverseSemigroup& S, const InverseSemigroup& T, MapClass cls,
    const std::vector<int>& pins) {
  int n = S.size();
  std::vector<int> theta(n, -1);
  theta[0] = 0;
  int free_count = 0;
  for (int i = 1; i < n; ++i) {
    if (i < static_cast<int>(pins.size()) && pins[i] >= 0) {
      theta[i] = pins[i];
    } else {
      ++free_count;
    }
  }
  if (free_count > 8) {
    throw Error("SearchBoundExceeded",
                "too many free positions for exhaustive search");
  }
  if (!pins.empty() && pins[0] > 0) {
    throw Error("SearchBoundExceeded", "maps must send zero to zero");
  }

  std::vector<std::vector<int>> out;
  auto consistent = [&](int i) {
    for (int a = 0; a <= i; ++a) {
      if (theta[a] < 0) continue;
      for (int b = 0; b <= i; ++b) {
        if (theta[b] < 0) continue;
        int ab = S.product(a, b);
        if (theta[ab] >= 0 && T.product(theta[a], theta[b]) != theta[ab]) {
          return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      switch (cls) {
        case MapClass::Homomorphism:
          if (!is_homomorphism(S, T, theta)) return;
          break;
        case MapClass::Morphism:
          if (!is_morphism(S, T, theta)) return;
          break;
        case MapClass::Callitic: {
          if (!is_morphism(S, T, theta)) return;
          MorphismClass c = classify_morphism(S, T, theta);
          if (!c.callitic) return;
          break;
        }
        case MapClass::Tight:
          if (!is_homomorphism(S, T, theta) || !is_tight_map(S, T, theta)) {
            return;
          }
          break;
      }
      out.push_back(theta);
      return;
    }
    if (theta[i] >= 0) {
      if (consistent(i)) self(self, i + 1);
      return;
    }
    for (int v = 0; v < T.size(); ++v) {
      theta[i] = v;
      if (consistent(i)) self(self, i + 1);
      theta[i] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> dual_functor(const InverseSemigroup& S,
                              const InverseSemigroup& T,
                              const std::vector<int>& theta,
                              const Groupoid& GT, const Groupoid& GS) {
  MorphismClass c = classify_morphism(S, T, theta);
  if (!c.callitic || !is_morphism(S, T, theta)) {
    throw Error("NotCallitic", "the dual functor needs a callitic morphism");
  }
  std::vector<int> phi(GT.arrow_count(), -1);
  for (int p = 0; p < GT.arrow_count(); ++p) {
    std::vector<int> pre;
    for (int s = 0; s < S.size(); ++s) {
      if (T.leq(GT.arrows[p].base, theta[s])) pre.push_back(s);
    }
    int base = -1;
    for (int m : pre) {
      bool minimum = true;
      for (int x : pre) minimum &= S.leq(m, x);
      if (minimum) {
        base = m;
        break;
      }
    }
    if (base < 0) {
      throw Error("NotCallitic", "preimage of a prime filter is not a filter");
    }
    phi[p] = GS.arrow_of(base);
    if (phi[p] < 0) {
      throw Error("NotCallitic", "preimage of a prime filter is not prime");
    }
  }
  return phi;
}

}  // namespace istone
