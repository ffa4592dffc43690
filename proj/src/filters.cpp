#include "istone/filters.hpp"

#include "istone/error.hpp"
#include "istone/ideals.hpp"

namespace istone {

std::vector<Filter> all_filters(const InverseSemigroup& S) {
  std::vector<Filter> out;
  for (int x = 1; x < S.size(); ++x) out.push_back(Filter{x});
  return out;
}

std::vector<int> filter_members(const InverseSemigroup& S, Filter F) {
  return S.up_set(F.base);
}

bool is_prime_filter(const InverseSemigroup& S, Filter F) {
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      if (!S.compatible(a, b)) continue;
      auto j = S.join_compatible(a, b);
      if (!j || !S.leq(F.base, *j)) continue;
      if (!S.leq(F.base, a) && !S.leq(F.base, b)) return false;
    }
  }
  return true;
}

bool is_ultrafilter(const InverseSemigroup& S, Filter F) {
  for (int x = 1; x < S.size(); ++x) {
    if (S.leq(x, F.base) && x != F.base) return false;
  }
  return true;
}

bool is_ultrafilter_meet_criterion(const InverseSemigroup& S, Filter F) {
  for (int a = 0; a < S.size(); ++a) {
    if (S.leq(F.base, a)) continue;  // already in F
    bool meets_all = true;
    for (int x = 0; x < S.size() && meets_all; ++x) {
      if (S.leq(F.base, x) && !S.meets_nonzero(a, x)) meets_all = false;
    }
    if (meets_all) return false;
  }
  return true;
}

bool is_idempotent_filter(const InverseSemigroup& S, Filter F) {
  return S.idempotent(F.base);
}

Filter filter_d(const InverseSemigroup& S, Filter F) {
  return Filter{S.d(F.base)};
}

Filter filter_r(const InverseSemigroup& S, Filter F) {
  return Filter{S.r(F.base)};
}

Filter filter_inverse(const InverseSemigroup& S, Filter F) {
  return Filter{S.inverse(F.base)};
}

std::optional<Filter> filter_product(const InverseSemigroup& S, Filter F,
                                     Filter G) {
  if (S.d(F.base) != S.r(G.base)) return std::nullopt;
  return Filter{S.product(F.base, G.base)};
}

Filter separating_prime_filter(const InverseSemigroup& S, int a, int b) {
  if (b == 0 || S.leq(b, a)) {
    throw Error("BelowViolation", "need b nonzero with b not below a");
  }
  Ideal J = maximal_disjoint_ideal(S, down(S, {a}), Filter{b});
  // S \ J is a prime filter; being finite and directed it has a minimum.
  std::vector<int> complement;
  for (int x = 0; x < S.size(); ++x) {
    if (!J.contains(x)) complement.push_back(x);
  }
  for (int m : complement) {
    bool minimum = true;
    for (int c : complement) {
      if (!S.leq(m, c)) {
        minimum = false;
        break;
      }
    }
    if (minimum) {
      Filter P{m};
      if (is_prime_filter(S, P) && S.leq(m, b) && !S.leq(m, a)) return P;
      break;
    }
  }
  throw Error("NotSeparable",
              "no prime filter separates " + S.name(b) + " from " + S.name(a));
}

}  // namespace istone
