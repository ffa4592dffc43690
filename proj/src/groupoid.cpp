#include "istone/groupoid.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/coverage.hpp"
#include "istone/util.hpp"

namespace istone {

Topology Topology::from_subbasis(int points, std::vector<Named> sb) {
  Topology t;
  t.points = points;
  t.subbasis = std::move(sb);
  t.min_nbhd.resize(points);
  for (int p = 0; p < points; ++p) {
    std::vector<int> nbhd;
    bool first = true;
    for (const auto& b : t.subbasis) {
      if (!set_contains(b.members, p)) continue;
      nbhd = first ? b.members : set_intersect(nbhd, b.members);
      first = false;
    }
    if (first) {
      throw Error("NotCovered", "subbasis does not cover point " +
                                    std::to_string(p));
    }
    t.min_nbhd[p] = std::move(nbhd);
  }
  return t;
}

bool Topology::is_open(const std::vector<int>& U) const {
  for (int p : U) {
    if (!set_subset(min_nbhd[p], U)) return false;
  }
  return true;
}

bool Topology::is_discrete() const {
  for (int p = 0; p < points; ++p) {
    if (min_nbhd[p].size() != 1) return false;
  }
  return true;
}

bool Topology::is_t0() const {
  for (int p = 0; p < points; ++p) {
    for (int q = p + 1; q < points; ++q) {
      if (min_nbhd[p] == min_nbhd[q]) return false;
    }
  }
  return true;
}

int Groupoid::arrow_of(int base) const {
  for (int i = 0; i < arrow_count(); ++i) {
    if (arrows[i].base == base) return i;
  }
  return -1;
}

std::vector<int> Groupoid::set_product(const std::vector<int>& A,
                                       const std::vector<int>& B) const {
  std::vector<int> out;
  for (int x : A) {
    for (int y : B) {
      int z = prod[x][y];
      if (z >= 0) out.push_back(z);
    }
  }
  return set_sorted(std::move(out));
}

std::vector<int> Groupoid::set_inverse(const std::vector<int>& A) const {
  std::vector<int> out;
  for (int x : A) out.push_back(inv[x]);
  return set_sorted(std::move(out));
}

bool Groupoid::is_local_bisection(const std::vector<int>& A) const {
  for (int x : A) {
    for (int y : A) {
      if (x != y && (dmap[x] == dmap[y] || rmap[x] == rmap[y])) return false;
    }
  }
  return true;
}

void assert_groupoid(const Groupoid& G) {
  int n = G.arrow_count();
  for (int x = 0; x < n; ++x) {
    if (!G.identity[G.dmap[x]] || !G.identity[G.rmap[x]]) {
      throw Error("NotAGroupoid", "d/r must land on identities");
    }
    if (G.prod[x][G.inv[x]] != G.rmap[x] || G.prod[G.inv[x]][x] != G.dmap[x]) {
      throw Error("NotAGroupoid", "x x^-1 must be r(x) and x^-1 x must be d(x)");
    }
    if (G.prod[x][G.dmap[x]] != x || G.prod[G.rmap[x]][x] != x) {
      throw Error("NotAGroupoid", "identity laws fail");
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool composable = (G.dmap[x] == G.rmap[y]);
      if (composable != (G.prod[x][y] >= 0)) {
        throw Error("NotAGroupoid", "composability must match d(x) = r(y)");
      }
      if (!composable) continue;
      if (G.dmap[G.prod[x][y]] != G.dmap[y] || G.rmap[G.prod[x][y]] != G.rmap[x]) {
        throw Error("NotAGroupoid", "d/r of a product are wrong");
      }
      for (int z = 0; z < n; ++z) {
        if (G.dmap[y] != G.rmap[z]) continue;
        if (G.prod[G.prod[x][y]][z] != G.prod[x][G.prod[y][z]]) {
          throw Error("NotAGroupoid", "associativity fails");
        }
      }
    }
  }
}

bool is_etale(const Groupoid& G, std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int n = G.arrow_count();
  const Topology& T = G.topology;

  // Inversion and multiplication continuous.
  for (int x = 0; x < n; ++x) {
    if (!set_subset(G.set_inverse(T.min_nbhd[x]), T.min_nbhd[G.inv[x]])) {
      return explain("inversion is not continuous at arrow " + std::to_string(x));
    }
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (G.prod[x][y] < 0) continue;
      if (!set_subset(G.set_product(T.min_nbhd[x], T.min_nbhd[y]),
                      T.min_nbhd[G.prod[x][y]])) {
        return explain("multiplication is not continuous at (" +
                       std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }

  // Identities open.
  std::vector<int> ids;
  for (int x = 0; x < n; ++x) {
    if (G.identity[x]) ids.push_back(x);
  }
  if (!T.is_open(ids)) return explain("identity space is not open");

  // Products of opens are open; products of minimal neighborhoods suffice.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!T.is_open(G.set_product(T.min_nbhd[x], T.min_nbhd[y]))) {
        return explain("product of basic opens is not open at (" +
                       std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return true;
}

namespace {

Groupoid groupoid_from_filters(const InverseSemigroup& S,
                               std::vector<Filter> arrows) {
  Groupoid G;
  G.sgp = S;
  G.arrows = std::move(arrows);
  int n = G.arrow_count();
  std::map<int, int> by_base;
  for (int i = 0; i < n; ++i) by_base[G.arrows[i].base] = i;

  auto need = [&](Filter F, const char* what) {
    auto it = by_base.find(F.base);
    if (it == by_base.end()) {
      throw Error("NotClosed", std::string("arrow class is not closed under ") +
                                   what);
    }
    return it->second;
  };

  G.dmap.resize(n);
  G.rmap.resize(n);
  G.inv.resize(n);
  G.identity.resize(n);
  for (int i = 0; i < n; ++i) {
    G.dmap[i] = need(filter_d(S, G.arrows[i]), "d");
    G.rmap[i] = need(filter_r(S, G.arrows[i]), "r");
    G.inv[i] = need(filter_inverse(S, G.arrows[i]), "inverse");
    G.identity[i] = is_idempotent_filter(S, G.arrows[i]);
  }
  G.prod.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto p = filter_product(S, G.arrows[i], G.arrows[j]);
      if (p) G.prod[i][j] = need(*p, "product");
    }
  }
  return G;
}

std::vector<Topology::Named> element_basis(const InverseSemigroup& S,
                                           const std::vector<Filter>& arrows,
                                           const std::string& prefix) {
  std::vector<Topology::Named> basis;
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> members;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (S.leq(arrows[i].base, s)) members.push_back(static_cast<int>(i));
    }
    basis.push_back({prefix + "_" + S.name(s), std::move(members)});
  }
  return basis;
}

}  // namespace

Groupoid filter_groupoid(const InverseSemigroup& S) {
  Groupoid G = groupoid_from_filters(S, all_filters(S));
  G.topology = Topology::from_subbasis(G.arrow_count(),
                                       element_basis(S, G.arrows, "U"));
  assert_groupoid(G);
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);
  return G;
}

Groupoid prime_spectrum(const InverseSemigroup& S) {
  if (!S.classify().is_distributive) {
    throw Error("NotDistributive", "the prime spectrum needs a distributive semigroup");
  }
  std::vector<Filter> primes;
  for (Filter F : all_filters(S)) {
    if (is_prime_filter(S, F)) primes.push_back(F);
  }
  Groupoid G = groupoid_from_filters(S, std::move(primes));
  G.topology = Topology::from_subbasis(G.arrow_count(),
                                       element_basis(S, G.arrows, "X"));
  assert_groupoid(G);
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);
  return G;
}

Groupoid tight_spectrum(const InverseSemigroup& S) {
  std::vector<Filter> tight;
  for (Filter F : all_filters(S)) {
    if (is_tight_filter(S, F)) tight.push_back(F);
  }
  Groupoid G = groupoid_from_filters(S, std::move(tight));
  G.topology = Topology::from_subbasis(G.arrow_count(),
                                       element_basis(S, G.arrows, "Z"));
  assert_groupoid(G);
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);
  return G;
}

int KbSemigroup::index_of(const std::vector<int>& A) const {
  for (std::size_t i = 0; i < bisections.size(); ++i) {
    if (bisections[i] == A) return static_cast<int>(i);
  }
  return -1;
}

std::vector<std::vector<int>> all_local_bisections(const Groupoid& G,
                                                   int max_bisections) {
  int n = G.arrow_count();
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<char> used_d(n, 0), used_r(n, 0);
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(cur);
    if (static_cast<int>(out.size()) > max_bisections) {
      throw Error("TooLarge", "local bisection count exceeds the bound");
    }
    for (int x = next; x < n; ++x) {
      if (used_d[G.dmap[x]] || used_r[G.rmap[x]]) continue;
      used_d[G.dmap[x]] = used_r[G.rmap[x]] = 1;
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
      used_d[G.dmap[x]] = used_r[G.rmap[x]] = 0;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

KbSemigroup kb_of(const Groupoid& G, int max_bisections) {
  std::string why;
  if (!is_etale(G, &why)) throw Error("NotEtale", why);

  KbSemigroup out;
  for (auto& A : all_local_bisections(G, max_bisections)) {
    if (G.topology.is_open(A)) out.bisections.push_back(std::move(A));
  }

  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < out.bisections.size(); ++i) {
    index[out.bisections[i]] = static_cast<int>(i);
  }
  int m = static_cast<int>(out.bisections.size());
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      auto P = G.set_product(out.bisections[i], out.bisections[j]);
      auto it = index.find(P);
      if (it == index.end()) {
        throw Error("NotClosed", "bisection product escaped the open bisections");
      }
      table[i * m + j] = it->second;
    }
  }
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    std::string nm = "{";
    for (std::size_t k = 0; k < out.bisections[i].size(); ++k) {
      if (k) nm += " ";
      nm += G.sgp.name(G.arrows[out.bisections[i][k]].base);
    }
    names[i] = nm + "}";
  }
  out.sgp = InverseSemigroup::validate(m, std::move(table), std::move(names));
  return out;
}

IsoReport epsilon_check(const InverseSemigroup& S) {
  IsoReport rep;
  Groupoid G = prime_spectrum(S);
  KbSemigroup KB = kb_of(G);

  rep.map.assign(S.size(), -1);
  std::vector<char> hit(KB.bisections.size(), 0);
  for (int s = 0; s < S.size(); ++s) {
    std::vector<int> Xs;
    for (int i = 0; i < G.arrow_count(); ++i) {
      if (S.leq(G.arrows[i].base, s)) Xs.push_back(i);
    }
    int k = KB.index_of(Xs);
    if (k < 0) {
      rep.ok = false;
      rep.detail = "X_" + S.name(s) + " is not a compact-open bisection";
      return rep;
    }
    if (hit[k]) {
      rep.ok = false;
      rep.detail = "epsilon is not injective at " + S.name(s);
      return rep;
    }
    hit[k] = 1;
    rep.map[s] = k;
  }
  for (std::size_t k = 0; k < hit.size(); ++k) {
    if (!hit[k]) {
      rep.ok = false;
      rep.detail = "a compact-open bisection is not of the form X_s";
      return rep;
    }
  }
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (KB.sgp.product(rep.map[s], rep.map[t]) != rep.map[S.product(s, t)]) {
        rep.ok = false;
        rep.detail = "epsilon is not multiplicative at (" + S.name(s) + "," +
                     S.name(t) + ")";
        return rep;
      }
    }
  }
  rep.detail = "isomorphism on " + std::to_string(S.size()) + " elements";
  return rep;
}

IsoReport eta_check(const Groupoid& G) {
  IsoReport rep;
  KbSemigroup KB = kb_of(G);
  Groupoid H = prime_spectrum(KB.sgp);

  rep.map.assign(G.arrow_count(), -1);
  std::vector<char> hit(H.arrow_count(), 0);
  for (int g = 0; g < G.arrow_count(); ++g) {
    // F_g is principal at the intersection of all open bisections holding g.
    std::vector<int> base;
    bool first = true;
    for (std::size_t k = 0; k < KB.bisections.size(); ++k) {
      if (!set_contains(KB.bisections[k], g)) continue;
      base = first ? KB.bisections[k] : set_intersect(base, KB.bisections[k]);
      first = false;
    }
    int kb_elem = KB.index_of(base);
    if (first || kb_elem < 0) {
      rep.ok = false;
      rep.detail = "no minimal open bisection at arrow " + std::to_string(g);
      return rep;
    }
    int h = H.arrow_of(kb_elem);
    if (h < 0) {
      rep.ok = false;
      rep.detail = "F_g is not a prime filter at arrow " + std::to_string(g);
      return rep;
    }
    if (hit[h]) {
      rep.ok = false;
      rep.detail = "eta is not injective";
      return rep;
    }
    hit[h] = 1;
    rep.map[g] = h;
  }
  for (int h = 0; h < H.arrow_count(); ++h) {
    if (!hit[h]) {
      rep.ok = false;
      rep.detail = "a prime filter of KB(G) is not of the form F_g";
      return rep;
    }
  }

  std::string why;
  if (!is_functor(G, H, rep.map, &why)) {
    rep.ok = false;
    rep.detail = "eta is not a functor: " + why;
    return rep;
  }

  // Homeomorphism: minimal neighborhoods must correspond.
  for (int g = 0; g < G.arrow_count(); ++g) {
    std::vector<int> image;
    for (int x : G.topology.min_nbhd[g]) image.push_back(rep.map[x]);
    if (set_sorted(image) != H.topology.min_nbhd[rep.map[g]]) {
      rep.ok = false;
      rep.detail = "eta is not a homeomorphism at arrow " + std::to_string(g);
      return rep;
    }
  }
  rep.detail = "isomorphism of topological groupoids on " +
               std::to_string(G.arrow_count()) + " arrows";
  return rep;
}

bool is_functor(const Groupoid& G, const Groupoid& H,
                const std::vector<int>& phi, std::string* why) {
  auto explain = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (int x = 0; x < G.arrow_count(); ++x) {
    if (H.dmap[phi[x]] != phi[G.dmap[x]] || H.rmap[phi[x]] != phi[G.rmap[x]]) {
      return explain("d/r are not preserved at arrow " + std::to_string(x));
    }
  }
  for (int x = 0; x < G.arrow_count(); ++x) {
    for (int y = 0; y < G.arrow_count(); ++y) {
      if (G.prod[x][y] < 0) continue;
      if (H.prod[phi[x]][phi[y]] != phi[G.prod[x][y]]) {
        return explain("products are not preserved at (" + std::to_string(x) +
                       "," + std::to_string(y) + ")");
      }
    }
  }
  return true;
}

bool is_covering_functor(const Groupoid& G, const Groupoid& H,
                         const std::vector<int>& phi) {
  std::string why;
  if (!is_functor(G, H, phi, &why)) throw Error("NotAFunctor", why);

  // Star injective.
  for (int x = 0; x < G.arrow_count(); ++x) {
    for (int y = 0; y < G.arrow_count(); ++y) {
      if (x != y && G.dmap[x] == G.dmap[y] && phi[x] == phi[y]) return false;
    }
  }
  // Star surjective.
  for (int e = 0; e < G.arrow_count(); ++e) {
    if (!G.identity[e]) continue;
    for (int h = 0; h < H.arrow_count(); ++h) {
      if (H.dmap[h] != phi[e]) continue;
      bool found = false;
      for (int g = 0; g < G.arrow_count(); ++g) {
        if (phi[g] == h && G.dmap[g] == e) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

IsoReport topological_iso_check(const Groupoid& G, const Groupoid& H,
                                const std::vector<int>& phi) {
  IsoReport rep;
  rep.map = phi;
  if (G.arrow_count() != H.arrow_count()) {
    rep.ok = false;
    rep.detail = "arrow counts differ: " + std::to_string(G.arrow_count()) +
                 " vs " + std::to_string(H.arrow_count());
    return rep;
  }
  std::vector<char> hit(H.arrow_count(), 0);
  for (int g = 0; g < G.arrow_count(); ++g) {
    if (phi[g] < 0 || phi[g] >= H.arrow_count() || hit[phi[g]]) {
      rep.ok = false;
      rep.detail = "map is not a bijection";
      return rep;
    }
    hit[phi[g]] = 1;
  }
  std::string why;
  if (!is_functor(G, H, phi, &why)) {
    rep.ok = false;
    rep.detail = "not a functor: " + why;
    return rep;
  }
  for (int g = 0; g < G.arrow_count(); ++g) {
    std::vector<int> image;
    for (int x : G.topology.min_nbhd[g]) image.push_back(phi[x]);
    if (set_sorted(image) != H.topology.min_nbhd[phi[g]]) {
      rep.ok = false;
      rep.detail = "topologies do not correspond at arrow " + std::to_string(g);
      return rep;
    }
  }
  rep.detail = "isomorphism on " + std::to_string(G.arrow_count()) + " arrows";
  return rep;
}

bool is_continuous(const Groupoid& G, const Groupoid& H,
                   const std::vector<int>& phi) {
  for (int p = 0; p < G.arrow_count(); ++p) {
    std::vector<int> image;
    for (int x : G.topology.min_nbhd[p]) image.push_back(phi[x]);
    if (!set_subset(set_sorted(image), H.topology.min_nbhd[phi[p]])) {
      return false;
    }
  }
  return true;
}

std::string to_dot(const Groupoid& G) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (int i = 0; i < G.arrow_count(); ++i) {
    if (G.identity[i]) {
      out << "  n" << i << " [shape=box,label=\""
          << G.sgp.name(G.arrows[i].base) << "\"];\n";
    }
  }
  for (int i = 0; i < G.arrow_count(); ++i) {
    if (G.identity[i]) continue;
    out << "  n" << G.dmap[i] << " -> n" << G.rmap[i] << " [label=\""
        << G.sgp.name(G.arrows[i].base) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const Groupoid& G) {
  nlohmann::json j;
  j["arrows"] = nlohmann::json::array();
  for (int i = 0; i < G.arrow_count(); ++i) {
    j["arrows"].push_back({{"base", G.arrows[i].base},
                           {"name", G.sgp.name(G.arrows[i].base)},
                           {"d", G.dmap[i]},
                           {"r", G.rmap[i]},
                           {"inverse", G.inv[i]},
                           {"identity", static_cast<bool>(G.identity[i])}});
  }
  j["product"] = G.prod;
  j["basis"] = nlohmann::json::object();
  for (const auto& b : G.topology.subbasis) {
    j["basis"][b.label] = b.members;
  }
  return j.dump(2);
}

}  // namespace istone
