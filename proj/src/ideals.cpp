#include "istone/ideals.hpp"

#include "istone/error.hpp"

namespace istone {

namespace {

// Canonicalize a down-closed member set into an Ideal.
Ideal from_carrier(const InverseSemigroup& S, std::vector<int> carrier) {
  carrier = set_sorted(std::move(carrier));
  Ideal out;
  for (int x : carrier) {
    if (x == 0) continue;
    bool maximal = true;
    for (int y : carrier) {
      if (y != x && S.leq(x, y)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.generators.push_back(x);
  }
  out.carrier = std::move(carrier);
  return out;
}

}  // namespace

Ideal down(const InverseSemigroup& S, const std::vector<int>& A) {
  std::vector<int> carrier{0};
  for (int y = 0; y < S.size(); ++y) {
    for (int a : A) {
      if (S.leq(y, a)) {
        carrier.push_back(y);
        break;
      }
    }
  }
  return from_carrier(S, std::move(carrier));
}

std::vector<int> up(const InverseSemigroup& S, const std::vector<int>& A) {
  std::vector<int> out;
  for (int y = 0; y < S.size(); ++y) {
    for (int a : A) {
      if (S.leq(a, y)) {
        out.push_back(y);
        break;
      }
    }
  }
  return out;
}

bool is_order_ideal(const InverseSemigroup& S, const std::vector<int>& A) {
  for (int a : A) {
    for (int y = 0; y < S.size(); ++y) {
      if (S.leq(y, a) && !set_contains(A, y)) return false;
    }
  }
  return set_contains(A, 0);
}

bool is_compatible_ideal(const InverseSemigroup& S, const Ideal& A) {
  for (int a : A.carrier) {
    for (int b : A.carrier) {
      if (!S.compatible(a, b)) return false;
    }
  }
  return true;
}

bool is_proper_ideal(const InverseSemigroup& S, const Ideal& A) {
  return static_cast<int>(A.carrier.size()) < S.size();
}

Ideal vee_closure(const InverseSemigroup& S, const Ideal& A) {
  std::vector<char> in(S.size(), 0);
  for (int x : A.carrier) in[x] = 1;
  in[0] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < S.size(); ++a) {
      if (!in[a]) continue;
      for (int b = a + 1; b < S.size(); ++b) {
        if (!in[b] || !S.compatible(a, b)) continue;
        auto j = S.join_compatible(a, b);
        if (!j) continue;
        if (!in[*j]) {
          in[*j] = 1;
          changed = true;
        }
        for (int y = 0; y < S.size(); ++y) {
          if (!in[y] && S.leq(y, *j)) {
            in[y] = 1;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<int> carrier;
  for (int x = 0; x < S.size(); ++x) {
    if (in[x]) carrier.push_back(x);
  }
  return from_carrier(S, std::move(carrier));
}

bool is_vee_closed(const InverseSemigroup& S, const Ideal& A) {
  return vee_closure(S, A) == A;
}

Ideal ideal_product(const InverseSemigroup& S, const Ideal& A, const Ideal& B) {
  std::vector<int> gens;
  for (int a : A.carrier) {
    for (int b : B.carrier) gens.push_back(S.product(a, b));
  }
  return down(S, set_sorted(std::move(gens)));
}

bool is_prime_ideal(const InverseSemigroup& S, const Ideal& P) {
  for (int a = 0; a < S.size(); ++a) {
    if (P.contains(a)) continue;
    for (int b = 0; b < S.size(); ++b) {
      if (P.contains(b)) continue;
      // a-down ^ b-down subset of P?
      bool inside = true;
      for (int z = 0; z < S.size() && inside; ++z) {
        if (S.leq(z, a) && S.leq(z, b) && !P.contains(z)) inside = false;
      }
      if (inside) return false;
    }
  }
  return true;
}

Ideal maximal_disjoint_ideal(const InverseSemigroup& S, const Ideal& I,
                             Filter F) {
  for (int x : I.carrier) {
    if (S.leq(F.base, x)) {
      throw Error("NotDisjoint", "seed ideal meets the filter");
    }
  }
  Ideal J = vee_closure(S, I);
  auto disjoint = [&](const Ideal& K) {
    for (int x : K.carrier) {
      if (S.leq(F.base, x)) return false;
    }
    return true;
  };
  if (!disjoint(J)) {
    throw Error("NotDisjoint", "vee-closure of the seed meets the filter");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 1; x < S.size(); ++x) {
      if (J.contains(x)) continue;
      std::vector<int> carrier = J.carrier;
      for (int y = 0; y < S.size(); ++y) {
        if (S.leq(y, x)) carrier.push_back(y);
      }
      Ideal K = vee_closure(S, from_carrier(S, set_sorted(std::move(carrier))));
      if (disjoint(K)) {
        J = K;
        changed = true;
      }
    }
  }
  return J;
}

}  // namespace istone
