#ifndef ISTONE_TESTS_PINJ_ORACLE_HPP_
#define ISTONE_TESTS_PINJ_ORACLE_HPP_

// Test-only model of the symmetric inverse monoid: partial injections as
// explicit maps. The library computes order, compatibility, meets and joins
// algebraically from the multiplication table; this model recomputes them
// from the partial-map semantics (restriction, union, graph intersection),
// so the two routes are independent.

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pinj {

struct Map {
  std::vector<int> img;  // img[x] = image of x, or -1 when undefined

  friend bool operator==(const Map&, const Map&) = default;
  friend bool operator<(const Map& a, const Map& b) { return a.img < b.img; }
};

inline Map compose(const Map& s, const Map& t) {
  Map out{std::vector<int>(s.img.size(), -1)};
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    int y = t.img[x];
    if (y >= 0 && s.img[y] >= 0) out.img[x] = s.img[y];
  }
  return out;
}

inline Map inverse(const Map& s) {
  Map out{std::vector<int>(s.img.size(), -1)};
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    if (s.img[x] >= 0) out.img[s.img[x]] = static_cast<int>(x);
  }
  return out;
}

// s <= t iff s is a restriction of t.
inline bool restriction_leq(const Map& s, const Map& t) {
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    if (s.img[x] >= 0 && s.img[x] != t.img[x]) return false;
  }
  return true;
}

// s ~ t iff the union of their graphs is again a partial injection.
inline bool union_compatible(const Map& s, const Map& t) {
  Map u{std::vector<int>(s.img.size(), -1)};
  std::vector<char> used(s.img.size(), 0);
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    int a = s.img[x], b = t.img[x];
    if (a >= 0 && b >= 0 && a != b) return false;
    int v = a >= 0 ? a : b;
    if (v >= 0) {
      if (used[v]) return false;
      used[v] = 1;
      u.img[x] = v;
    }
  }
  return true;
}

inline Map graph_union(const Map& s, const Map& t) {
  Map u{std::vector<int>(s.img.size(), -1)};
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    u.img[x] = s.img[x] >= 0 ? s.img[x] : t.img[x];
  }
  return u;
}

inline Map graph_intersection(const Map& s, const Map& t) {
  Map m{std::vector<int>(s.img.size(), -1)};
  for (std::size_t x = 0; x < s.img.size(); ++x) {
    if (s.img[x] >= 0 && s.img[x] == t.img[x]) m.img[x] = s.img[x];
  }
  return m;
}

// All partial injections on n points, in the library's canonical order
// (domain mask, then image tuple).
inline std::vector<Map> all_maps(int n) {
  std::vector<Map> out;
  std::vector<int> img(n, -1);
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      out.push_back(Map{img});
      return;
    }
    self(self, x + 1);
    for (int y = 0; y < n; ++y) {
      bool used = false;
      for (int z = 0; z < x; ++z) used |= (img[z] == y);
      if (used) continue;
      img[x] = y;
      self(self, x + 1);
      img[x] = -1;
    }
  };
  rec(rec, 0);
  auto key = [](const Map& m) {
    int mask = 0;
    for (std::size_t i = 0; i < m.img.size(); ++i) {
      if (m.img[i] >= 0) mask |= 1 << i;
    }
    return std::pair<int, std::vector<int>>(mask, m.img);
  };
  std::sort(out.begin(), out.end(),
            [&](const Map& a, const Map& b) { return key(a) < key(b); });
  return out;
}

// Looks up the id of a map given as 1-based pairs {{1,2},...}.
inline int id_of(const std::vector<Map>& maps,
                 const std::vector<std::pair<int, int>>& pairs) {
  int n = static_cast<int>(maps[0].img.size());
  Map m{std::vector<int>(n, -1)};
  for (auto [a, b] : pairs) m.img[a - 1] = b - 1;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (maps[i] == m) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace pinj

#endif  // ISTONE_TESTS_PINJ_ORACLE_HPP_
