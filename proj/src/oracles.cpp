#include "istone/oracles.hpp"

#include <algorithm>

#include "istone/error.hpp"

namespace istone {
namespace oracle {

namespace {

// The arrow relation straight from the definition.
bool arrow_def(const InverseSemigroup& S, int a, const std::vector<int>& B) {
  for (int x = 1; x < S.size(); ++x) {
    if (!S.leq(x, a)) continue;
    bool hit = false;
    for (int b : B) {
      for (int z = 1; z < S.size() && !hit; ++z) {
        hit = S.leq(z, x) && S.leq(z, b);
      }
      if (hit) break;
    }
    if (!hit) return false;
  }
  return true;
}

// All subsets of pool, via bitmasks. Guard: |pool| <= 20.
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, Fn&& fn) {
  if (pool.size() > 20) {
    throw Error("SearchBoundExceeded", "oracle subset space too large");
  }
  for (unsigned mask = 0; mask < (1u << pool.size()); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(pool[i]);
    }
    fn(sub);
  }
}

std::vector<int> nonzero_below(const InverseSemigroup& S, int a) {
  std::vector<int> out;
  for (int z = 1; z < S.size(); ++z) {
    if (S.leq(z, a)) out.push_back(z);
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> directed_upsets(const InverseSemigroup& S) {
  if (S.size() > 20) {
    throw Error("SearchBoundExceeded", "oracle subset space too large");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> nonzero;
  for (int x = 1; x < S.size(); ++x) nonzero.push_back(x);
  for_each_subset(nonzero, [&](const std::vector<int>& F) {
    if (F.empty()) return;
    for (int a : F) {
      for (int y = 0; y < S.size(); ++y) {
        if (S.leq(a, y) && !std::binary_search(F.begin(), F.end(), y)) return;
      }
    }
    for (int a : F) {
      for (int b : F) {
        bool lower = false;
        for (int c : F) lower |= (S.leq(c, a) && S.leq(c, b));
        if (!lower) return;
      }
    }
    out.push_back(F);
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool tight_equiv(const InverseSemigroup& S, int a, int b) {
  std::vector<int> pool;
  for (int z = 1; z < S.size(); ++z) {
    if (S.leq(z, a) && S.leq(z, b)) pool.push_back(z);
  }
  bool found = false;
  for_each_subset(pool, [&](const std::vector<int>& X) {
    if (found) return;
    found = arrow_def(S, a, X) && arrow_def(S, b, X);
  });
  return found;
}

bool is_tight_filter(const InverseSemigroup& S, Filter F) {
  for (int y = 0; y < S.size(); ++y) {
    if (!S.leq(F.base, y)) continue;
    bool bad = false;
    for_each_subset(nonzero_below(S, y), [&](const std::vector<int>& X) {
      if (bad || !arrow_def(S, y, X)) return;
      for (int x : X) {
        if (S.leq(F.base, x)) return;  // cover meets F
      }
      bad = true;
    });
    if (bad) return false;
  }
  return true;
}

bool is_tight_map(const InverseSemigroup& S, const InverseSemigroup& T,
                  const std::vector<int>& theta) {
  for (int a = 0; a < S.size(); ++a) {
    bool bad = false;
    for_each_subset(nonzero_below(S, a), [&](const std::vector<int>& X) {
      if (bad || X.empty() || !arrow_def(S, a, X)) return;
      std::vector<int> images;
      for (int x : X) images.push_back(theta[x]);
      if (T.join_all(images) != theta[a]) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

}  // namespace oracle
}  // namespace istone
