#include "istone/semigroup.hpp"

#include <string>

#include "istone/error.hpp"

namespace istone {

InverseSemigroup InverseSemigroup::validate(int n, std::vector<int> table,
                                            std::vector<std::string> names) {
  if (n < 1) {
    throw Error("Malformed", "element count must be at least 1");
  }
  if (static_cast<int>(table.size()) != n * n) {
    throw Error("Malformed", "table must have n*n entries");
  }
  for (int v : table) {
    if (v < 0 || v >= n) {
      throw Error("Malformed", "table entry out of range");
    }
  }

  InverseSemigroup S;
  S.n_ = n;
  S.table_ = std::move(table);

  auto mul = [&](int s, int t) { return S.table_[s * n + t]; };

  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (int u = 0; u < n; ++u) {
        if (mul(mul(s, t), u) != mul(s, mul(t, u))) {
          throw Error("NotAssociative",
                      "(" + std::to_string(s) + "," + std::to_string(t) + "," +
                          std::to_string(u) + ") violates associativity");
        }
      }
    }
  }

  S.inv_.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    int count = 0;
    for (int t = 0; t < n; ++t) {
      if (mul(mul(s, t), s) == s && mul(mul(t, s), t) == t) {
        S.inv_[s] = t;
        ++count;
      }
    }
    if (count != 1) {
      throw Error("NotInverseSemigroup",
                  "element " + std::to_string(s) + " has " +
                      std::to_string(count) + " inverses");
    }
  }

  S.idem_.assign(n, 0);
  for (int s = 0; s < n; ++s) {
    S.idem_[s] = (mul(s, s) == s);
  }
  for (int e = 0; e < n; ++e) {
    if (!S.idem_[e]) continue;
    for (int f = 0; f < n; ++f) {
      if (S.idem_[f] && mul(e, f) != mul(f, e)) {
        throw Error("NotInverseSemigroup", "idempotents " + std::to_string(e) +
                                               " and " + std::to_string(f) +
                                               " do not commute");
      }
    }
  }

  for (int s = 0; s < n; ++s) {
    if (mul(0, s) != 0 || mul(s, 0) != 0) {
      throw Error("NoZero", "element 0 is not absorbing");
    }
  }

  if (names.empty()) {
    names.resize(n);
    for (int s = 0; s < n; ++s) names[s] = std::to_string(s);
  }
  if (static_cast<int>(names.size()) != n) {
    throw Error("Malformed", "names must have one entry per element");
  }
  S.names_ = std::move(names);

  S.precompute();
  return S;
}

InverseSemigroup InverseSemigroup::adjoin_zero(
    int n, const std::vector<int>& table, const std::vector<std::string>& names) {
  int m = n + 1;
  std::vector<int> t(m * m, 0);
  for (int s = 0; s < n; ++s) {
    for (int u = 0; u < n; ++u) {
      t[(s + 1) * m + (u + 1)] = table[s * n + u] + 1;
    }
  }
  std::vector<std::string> nm;
  if (!names.empty()) {
    nm.push_back("0");
    nm.insert(nm.end(), names.begin(), names.end());
  }
  return validate(m, std::move(t), std::move(nm));
}

void InverseSemigroup::precompute() {
  int n = n_;
  leq_.assign(n * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      leq_[s * n + t] = (s == product(t, product(inv_[s], s)));
    }
  }

  meets_nz_.assign(n * n, 0);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      for (int z = 1; z < n; ++z) {
        if (leq(z, s) && leq(z, t)) {
          meets_nz_[s * n + t] = 1;
          break;
        }
      }
    }
  }

  meet_.assign(n * n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      int m = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq(z, s) || !leq(z, t)) continue;
        bool greatest = true;
        for (int w = 0; w < n; ++w) {
          if (leq(w, s) && leq(w, t) && !leq(w, z)) {
            greatest = false;
            break;
          }
        }
        if (greatest) {
          m = z;
          break;
        }
      }
      meet_[s * n + t] = m;
    }
  }

  join_.assign(n * n, -2);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (!compatible(s, t)) continue;
      int j = -1;
      for (int z = 0; z < n; ++z) {
        if (!leq(s, z) || !leq(t, z)) continue;
        bool least = true;
        for (int w = 0; w < n; ++w) {
          if (leq(s, w) && leq(t, w) && !leq(z, w)) {
            least = false;
            break;
          }
        }
        if (least) {
          j = z;
          break;
        }
      }
      join_[s * n + t] = j;
    }
  }

  // Classification.
  for (int e = 0; e < n; ++e) {
    if (idem_[e]) cls_.idempotents.push_back(e);
  }

  cls_.is_meet_semigroup = true;
  for (int i = 0; i < n * n; ++i) {
    if (meet_[i] < 0) {
      cls_.is_meet_semigroup = false;
      break;
    }
  }

  // Distributive: every compatible pair has a join, and multiplication
  // distributes over every existing binary compatible join. n-ary compatible
  // joins then exist by induction in the finite case.
  cls_.is_distributive = true;
  for (int s = 0; s < n && cls_.is_distributive; ++s) {
    for (int t = 0; t < n && cls_.is_distributive; ++t) {
      int j = join_[s * n + t];
      if (j == -2) continue;
      if (j == -1) {
        cls_.is_distributive = false;
        break;
      }
      for (int u = 0; u < n; ++u) {
        if (join_[product(u, s) * n + product(u, t)] != product(u, j) ||
            join_[product(s, u) * n + product(t, u)] != product(j, u)) {
          cls_.is_distributive = false;
          break;
        }
      }
    }
  }

  // Boolean: distributive and every principal ideal of E(S) is a
  // complemented lattice.
  cls_.is_boolean = cls_.is_distributive;
  for (int e = 0; e < n && cls_.is_boolean; ++e) {
    if (!idem_[e]) continue;
    for (int b = 0; b < n && cls_.is_boolean; ++b) {
      if (!idem_[b] || !leq(b, e)) continue;
      bool complemented = false;
      for (int x = 0; x < n; ++x) {
        if (!idem_[x] || !leq(x, e)) continue;
        if (meets_nz_[x * n + b]) continue;
        if (join_[x * n + b] == e) {
          complemented = true;
          break;
        }
      }
      if (!complemented) cls_.is_boolean = false;
    }
  }

  cls_.is_boolean_meet_semigroup = cls_.is_boolean && cls_.is_meet_semigroup;
}

std::optional<int> InverseSemigroup::join_compatible(int s, int t) const {
  if (!compatible(s, t)) {
    throw Error("NotCompatible", name(s) + " and " + name(t) +
                                     " are not compatible");
  }
  int j = join_[s * n_ + t];
  return j < 0 ? std::nullopt : std::optional<int>(j);
}

int InverseSemigroup::join_all(const std::vector<int>& elems) const {
  if (elems.empty()) return 0;
  int acc = elems[0];
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (!compatible(acc, elems[i])) {
      throw Error("JoinMissing", "set is not compatible");
    }
    int j = join_[acc * n_ + elems[i]];
    if (j < 0) {
      throw Error("JoinMissing", "no join of " + name(acc) + " and " +
                                     name(elems[i]));
    }
    acc = j;
  }
  return acc;
}

int InverseSemigroup::relative_complement(int a, int b) const {
  if (!cls_.is_boolean) {
    throw Error("NotBoolean", "relative complements need a Boolean semigroup");
  }
  if (!leq(b, a)) {
    throw Error("NotBelow", name(b) + " is not below " + name(a));
  }
  for (int x = 0; x < n_; ++x) {
    if (!leq(x, a) || meets_nz_[x * n_ + b]) continue;
    if (compatible(x, b) && join_[x * n_ + b] == a) return x;
  }
  throw Error("NotBoolean", "no relative complement found; table is corrupt");
}

std::vector<int> InverseSemigroup::down_set(int s) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y) {
    if (leq(y, s)) out.push_back(y);
  }
  return out;
}

std::vector<int> InverseSemigroup::up_set(int s) const {
  std::vector<int> out;
  for (int y = 0; y < n_; ++y) {
    if (leq(s, y)) out.push_back(y);
  }
  return out;
}

}  // namespace istone
