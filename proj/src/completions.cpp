#include "istone/completions.hpp"

#include <algorithm>
#include <map>

#include "istone/error.hpp"
#include "istone/filters.hpp"
#include "istone/util.hpp"

namespace istone {

namespace {

// Canonical ordering of completion elements.
bool ideal_before(const Ideal& A, const Ideal& B) {
  if (A.carrier.size() != B.carrier.size()) {
    return A.carrier.size() < B.carrier.size();
  }
  return A.generators < B.generators;
}

// All compatible order ideals: down-closures of pairwise-compatible
// antichains, enumerated over antichains in ascending id order.
std::vector<Ideal> compatible_ideals(const InverseSemigroup& S,
                                     int max_elements) {
  std::vector<Ideal> out;
  std::vector<int> antichain;
  auto rec = [&](auto&& self, int next) -> void {
    out.push_back(down(S, antichain));
    if (static_cast<int>(out.size()) > max_elements) {
      throw Error("TooLarge", "completion exceeds the element bound");
    }
    for (int x = next; x < S.size(); ++x) {
      bool ok = true;
      for (int a : antichain) {
        if (!S.compatible(a, x) || S.leq(a, x) || S.leq(x, a)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      antichain.push_back(x);
      self(self, x + 1);
      antichain.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(),
            [](const Ideal& A, const Ideal& B) { return ideal_before(A, B); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Builds the completion table from an element list and a product map.
template <typename Product>
InverseSemigroup table_from_ideals(const InverseSemigroup& S,
                                   const std::vector<Ideal>& elems,
                                   Product&& product) {
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    index[elems[i].carrier] = static_cast<int>(i);
  }
  int m = static_cast<int>(elems.size());
  std::vector<int> table(m * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Ideal P = product(elems[i], elems[j]);
      auto it = index.find(P.carrier);
      if (it == index.end()) {
        throw Error("NotClosed", "ideal product escaped the element list");
      }
      table[i * m + j] = it->second;
    }
  }
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    std::string nm = "[";
    for (std::size_t g = 0; g < elems[i].generators.size(); ++g) {
      if (g) nm += " ";
      nm += S.name(elems[i].generators[g]);
    }
    names[i] = nm + "]";
  }
  return InverseSemigroup::validate(m, std::move(table), std::move(names));
}

}  // namespace

int Completion::element_of(const Ideal& I) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == I) return static_cast<int>(i);
  }
  return -1;
}

Completion distributive_completion(const InverseSemigroup& S,
                                   int max_elements) {
  Completion out;
  out.kind = Completion::Kind::D;
  out.elements = compatible_ideals(S, max_elements);
  out.sgp = table_from_ideals(S, out.elements, [&](const Ideal& A, const Ideal& B) {
    return ideal_product(S, A, B);
  });
  if (!out.sgp.classify().is_distributive) {
    throw Error("NotClosed", "distributive completion failed to be distributive");
  }
  out.embed.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    out.embed[s] = out.element_of(down(S, {s}));
  }
  for (int s = 0; s < S.size(); ++s) {
    for (int t = 0; t < S.size(); ++t) {
      if (out.sgp.product(out.embed[s], out.embed[t]) !=
          out.embed[S.product(s, t)]) {
        throw Error("NotClosed", "iota failed to be a homomorphism");
      }
    }
  }
  return out;
}

Completion idl_completion(const InverseSemigroup& S, int max_elements) {
  if (!S.classify().is_distributive) {
    throw Error("NotDistributive", "Idl needs a distributive semigroup");
  }
  Completion out;
  out.kind = Completion::Kind::Idl;
  for (const Ideal& A : compatible_ideals(S, max_elements)) {
    if (is_vee_closed(S, A)) out.elements.push_back(A);
  }
  out.sgp = table_from_ideals(S, out.elements, [&](const Ideal& A, const Ideal& B) {
    return vee_closure(S, ideal_product(S, A, B));
  });
  out.embed.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    out.embed[s] = out.element_of(down(S, {s}));
    if (out.embed[s] < 0) {
      throw Error("NotClosed", "principal ideal missing from Idl");
    }
  }
  // Finite distributive case: every vee-closed compatible ideal is principal,
  // so the embedding is onto.
  if (out.elements.size() != static_cast<std::size_t>(S.size())) {
    throw Error("NotClosed", "Idl escaped the principal ideals");
  }
  return out;
}

std::vector<int> lift_through_D(const Completion& D, const InverseSemigroup& T,
                                const std::vector<int>& theta) {
  std::vector<int> out(D.elements.size());
  for (std::size_t i = 0; i < D.elements.size(); ++i) {
    std::vector<int> images;
    for (int g : D.elements[i].generators) images.push_back(theta[g]);
    out[i] = T.join_all(images);
  }
  return out;
}

namespace {

Ideal tight_closure_unchecked(const InverseSemigroup& S, const Ideal& A) {
  std::vector<int> carrier;
  for (int x = 0; x < S.size(); ++x) {
    std::vector<int> inside;
    for (int z : A.carrier) {
      if (z != 0 && S.leq(z, x)) inside.push_back(z);
    }
    if (arrow(S, x, inside)) carrier.push_back(x);
  }
  return down(S, carrier);
}

}  // namespace

Ideal tight_closure(const InverseSemigroup& S, const Ideal& A,
                    bool check_separative) {
  if (check_separative && !is_separative(S)) {
    throw Error("NotSeparative", "tight closure needs a separative semigroup");
  }
  return tight_closure_unchecked(S, A);
}

Completion tight_completion(const InverseSemigroup& S, int max_elements) {
  Completion out;
  out.kind = Completion::Kind::Dt;
  out.quotient = tight_quotient(S);
  const InverseSemigroup& Q = out.quotient->sgp;

  std::vector<Ideal> closed;
  for (const Ideal& A : compatible_ideals(Q, max_elements)) {
    Ideal C = tight_closure_unchecked(Q, A);
    bool seen = false;
    for (const Ideal& other : closed) seen |= (other == C);
    if (!seen) closed.push_back(C);
  }
  std::sort(closed.begin(), closed.end(),
            [](const Ideal& A, const Ideal& B) { return ideal_before(A, B); });
  out.elements = std::move(closed);

  out.sgp = table_from_ideals(Q, out.elements, [&](const Ideal& A, const Ideal& B) {
    return tight_closure_unchecked(Q, ideal_product(Q, A, B));
  });
  if (!out.sgp.classify().is_distributive) {
    throw Error("NotClosed", "tight completion failed to be distributive");
  }

  out.embed.resize(S.size());
  for (int s = 0; s < S.size(); ++s) {
    Ideal principal = down(Q, {out.quotient->sigma[s]});
    if (!(tight_closure_unchecked(Q, principal) == principal)) {
      throw Error("NotClosed", "principal ideal not tightly closed");
    }
    out.embed[s] = out.element_of(principal);
  }
  return out;
}

bool is_pre_boolean(const InverseSemigroup& S) {
  bool via_completion = tight_completion(S).sgp.classify().is_boolean;
  bool via_filters = true;
  for (Filter F : all_filters(S)) {
    if (is_tight_filter(S, F) && !is_ultrafilter(S, F)) via_filters = false;
  }
  if (via_completion != via_filters) {
    throw Error("RouteMismatch",
                "pre-Boolean verdicts disagree between completion and filters");
  }
  return via_completion;
}

}  // namespace istone
