#include "istone/coverage.hpp"

#include <algorithm>

#include "istone/error.hpp"
#include "istone/util.hpp"

namespace istone {

bool arrow(const InverseSemigroup& S, int a, const std::vector<int>& B) {
  for (int x = 1; x < S.size(); ++x) {
    if (!S.leq(x, a)) continue;
    bool hit = false;
    for (int b : B) {
      if (S.meets_nonzero(x, b)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

Cover make_cover(const InverseSemigroup& S, int target, std::vector<int> parts) {
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  parts = set_sorted(std::move(parts));
  for (int p : parts) {
    if (!S.leq(p, target)) {
      throw Error("Malformed", "cover part " + S.name(p) + " is not below " +
                                   S.name(target));
    }
  }
  return Cover{target, std::move(parts)};
}

bool is_tight_cover(const InverseSemigroup& S, const Cover& c) {
  for (int p : c.parts) {
    if (p == 0 || !S.leq(p, c.target)) return false;
  }
  return arrow(S, c.target, c.parts);
}

bool is_essential(const InverseSemigroup& S, int x, int s) {
  return x != 0 && S.leq(x, s) && arrow(S, s, {x});
}

bool tight_equiv(const InverseSemigroup& S, int a, int b) {
  std::vector<int> M;
  for (int z = 1; z < S.size(); ++z) {
    if (S.leq(z, a) && S.leq(z, b)) M.push_back(z);
  }
  return arrow(S, a, M) && arrow(S, b, M);
}

bool is_separative(const InverseSemigroup& S) {
  for (int a = 0; a < S.size(); ++a) {
    for (int b = a + 1; b < S.size(); ++b) {
      if (tight_equiv(S, a, b)) return false;
    }
  }
  return true;
}

TightQuotient tight_quotient(const InverseSemigroup& S) {
  int n = S.size();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < n; ++a) {
    if (cls[a] >= 0) continue;
    int id = static_cast<int>(classes.size());
    classes.push_back({});
    for (int b = a; b < n; ++b) {
      if (cls[b] < 0 && tight_equiv(S, a, b)) {
        cls[b] = id;
        classes[id].push_back(b);
      }
    }
  }
  int m = static_cast<int>(classes.size());
  std::vector<int> table(m * m, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int& slot = table[cls[a] * m + cls[b]];
      int v = cls[S.product(a, b)];
      if (slot >= 0 && slot != v) {
        throw Error("NotACongruence",
                    "tight equivalence failed to be a congruence");
      }
      slot = v;
    }
  }
  std::vector<std::string> names(m);
  for (int c = 0; c < m; ++c) names[c] = S.name(classes[c][0]);
  TightQuotient out{InverseSemigroup::validate(m, std::move(table), std::move(names)),
                    std::move(cls), std::move(classes)};
  if (!is_separative(out.sgp)) {
    throw Error("NotSeparative", "tight quotient failed to be separative");
  }
  return out;
}

bool is_tight_filter(const InverseSemigroup& S, Filter F) {
  for (int y = 0; y < S.size(); ++y) {
    if (!S.leq(F.base, y)) continue;  // y must lie in F
    std::vector<int> M;
    for (int z = 1; z < S.size(); ++z) {
      if (S.leq(z, y) && !S.leq(F.base, z)) M.push_back(z);
    }
    if (arrow(S, y, M)) return false;
  }
  return true;
}

std::vector<std::vector<int>> tight_covers(const InverseSemigroup& S, int a,
                                           int max_parts) {
  std::vector<int> below;
  for (int z = 1; z < S.size(); ++z) {
    if (S.leq(z, a)) below.push_back(z);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> picked;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (max_parts >= 0 && static_cast<int>(picked.size()) > max_parts) return;
    if (i == below.size()) {
      if (arrow(S, a, picked)) out.push_back(picked);
      return;
    }
    self(self, i + 1);
    picked.push_back(below[i]);
    self(self, i + 1);
    picked.pop_back();
  };
  rec(rec, 0);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

CoverageReport coverage_axioms_check(const InverseSemigroup& S, int max_parts) {
  CoverageReport rep;
  int n = S.size();

  std::vector<std::vector<std::vector<int>>> covers(n);
  for (int a = 0; a < n; ++a) covers[a] = tight_covers(S, a, max_parts);

  // The pairwise sections below are quadratic in the total cover count, so
  // they run on a deterministic per-element sample (first covers in
  // canonical order).
  constexpr std::size_t kPairCap = 12;
  std::vector<std::vector<std::vector<int>>> sampled(n);
  for (int a = 0; a < n; ++a) {
    sampled[a].assign(covers[a].begin(),
                      covers[a].begin() +
                          std::min(kPairCap, covers[a].size()));
  }

  auto show = [&](int a, const std::vector<int>& X) {
    std::string s = S.name(a) + " <- {";
    for (std::size_t i = 0; i < X.size(); ++i) {
      if (i) s += ",";
      s += S.name(X[i]);
    }
    return s + "}";
  };

  // (R): {a} covers a (for a = 0 the normalized cover is empty).
  for (int a = 0; a < n; ++a) {
    Cover c = make_cover(S, a, {a});
    ++rep.checked;
    if (!is_tight_cover(S, c)) rep.fail("(R) fails at " + S.name(a));
  }

  for (int a = 0; a < n; ++a) {
    for (const auto& X : covers[a]) {
      // (I): X^-1 covers a^-1.
      std::vector<int> Xi;
      for (int x : X) Xi.push_back(S.inverse(x));
      ++rep.checked;
      if (!is_tight_cover(S, make_cover(S, S.inverse(a), Xi))) {
        rep.fail("(I) fails at " + show(a, X));
      }

      // Lemma: d(X) covers a^-1 a, and conversely for X inside a-down.
      std::vector<int> dX;
      for (int x : X) dX.push_back(S.d(x));
      ++rep.checked;
      if (!is_tight_cover(S, make_cover(S, S.d(a), dX))) {
        rep.fail("d(X) cover fails at " + show(a, X));
      }
    }
  }

  // (MS) over sampled cover pairs.
  for (int a = 0; a < n; ++a) {
    for (const auto& X : sampled[a]) {
      for (int b = 0; b < n; ++b) {
        for (const auto& Y : sampled[b]) {
          std::vector<int> XY;
          for (int x : X) {
            for (int y : Y) XY.push_back(S.product(x, y));
          }
          ++rep.checked;
          if (!is_tight_cover(S, make_cover(S, S.product(a, b), XY))) {
            rep.fail("(MS) fails at " + show(a, X) + " * " + show(b, Y));
            break;
          }
        }
      }
    }
  }

  // (T): refine one part at a time, keeping {x} covers elsewhere.
  for (int a = 0; a < n; ++a) {
    for (const auto& X : covers[a]) {
      for (std::size_t i = 0; i < X.size(); ++i) {
        for (const auto& Xi : covers[X[i]]) {
          std::vector<int> uni;
          for (std::size_t j = 0; j < X.size(); ++j) {
            if (j == i) {
              uni.insert(uni.end(), Xi.begin(), Xi.end());
            } else {
              uni.push_back(X[j]);
            }
          }
          ++rep.checked;
          if (!is_tight_cover(S, make_cover(S, a, uni))) {
            rep.fail("(T) fails at " + show(a, X));
          }
        }
      }
    }
  }

  // Cover meets: X ^ Y = X d(Y) = Y d(X) stays a cover (parts of a common
  // target are compatible, so the meets exist). When X also covers some b,
  // so does X ^ Y.
  for (int a = 0; a < n; ++a) {
    for (const auto& X : sampled[a]) {
      for (const auto& Y : sampled[a]) {
        std::vector<int> XmY, XdY, YdX;
        for (int x : X) {
          for (int y : Y) {
            auto m = S.meet(x, y);
            if (!m) {
              rep.fail("missing meet inside " + show(a, X));
              continue;
            }
            XmY.push_back(*m);
            XdY.push_back(S.product(x, S.d(y)));
            YdX.push_back(S.product(y, S.d(x)));
          }
        }
        ++rep.checked;
        if (set_sorted(XmY) != set_sorted(XdY) ||
            set_sorted(XmY) != set_sorted(YdX)) {
          rep.fail("X^Y identities fail at " + show(a, X));
        }
        if (!is_tight_cover(S, make_cover(S, a, XmY))) {
          rep.fail("X^Y cover fails at " + show(a, X));
        }
        // Lemma part (4): if X covers b as well, X ^ Y covers b.
        for (int b = 0; b < n; ++b) {
          if (b == a) continue;
          bool x_covers_b = true;
          for (int x : X) x_covers_b &= S.leq(x, b);
          if (!x_covers_b || !arrow(S, b, X)) continue;
          ++rep.checked;
          if (!is_tight_cover(S, make_cover(S, b, XmY))) {
            rep.fail("X^Y transfer fails at " + show(b, X));
          }
        }
      }
    }
  }

  return rep;
}

}  // namespace istone
