#ifndef ISTONE_SEMIGROUP_HPP_
#define ISTONE_SEMIGROUP_HPP_

#include <optional>
#include <string>
#include <vector>

namespace istone {

struct Classification {
  bool is_distributive = false;
  bool is_boolean = false;
  bool is_meet_semigroup = false;
  bool is_boolean_meet_semigroup = false;
  std::vector<int> idempotents;
};

// A finite inverse semigroup with zero, given by its full multiplication
// table over element ids 0..n-1. Element 0 is always the zero.
//
// Construction goes through validate(), which rejects tables that are not
// associative, not inverse semigroups, or have no zero at index 0, and
// precomputes inverses, the natural partial order, meets, compatible joins
// and the structural classification. Instances are immutable afterwards and
// safe to share across threads; every query is pure.
class InverseSemigroup {
 public:
  // Default-constructed instances are empty placeholders; real instances
  // come from validate().
  InverseSemigroup() = default;

  static InverseSemigroup validate(int n, std::vector<int> table,
                                   std::vector<std::string> names = {});

  // Wraps a zero-free table: shifts all ids up by one and installs a fresh
  // absorbing element at index 0, then validates.
  static InverseSemigroup adjoin_zero(int n, const std::vector<int>& table,
                                      const std::vector<std::string>& names = {});

  int size() const { return n_; }
  int product(int s, int t) const { return table_[s * n_ + t]; }
  int inverse(int s) const { return inv_[s]; }
  bool idempotent(int s) const { return idem_[s] != 0; }

  // d(s) = s^-1 s and r(s) = s s^-1.
  int d(int s) const { return product(inv_[s], s); }
  int r(int s) const { return product(s, inv_[s]); }

  // The natural partial order: s <= t iff s = t * s^-1 s.
  bool leq(int s, int t) const { return leq_[s * n_ + t] != 0; }

  // s ~ t iff s^-1 t and s t^-1 are both idempotent.
  bool compatible(int s, int t) const {
    return idem_[product(inv_[s], t)] && idem_[product(s, inv_[t])];
  }

  // True iff some nonzero z lies below both s and t.
  bool meets_nonzero(int s, int t) const { return meets_nz_[s * n_ + t] != 0; }

  // Greatest lower bound, when it exists.
  std::optional<int> meet(int s, int t) const {
    int m = meet_[s * n_ + t];
    return m < 0 ? std::nullopt : std::optional<int>(m);
  }

  // Least upper bound of a compatible pair, when it exists.
  // Throws NotCompatible if s and t are not compatible.
  std::optional<int> join_compatible(int s, int t) const;

  // Fold of join_compatible over a nonempty set; throws JoinMissing if some
  // intermediate join does not exist. join_all({}) is the zero.
  int join_all(const std::vector<int>& elems) const;

  const Classification& classify() const { return cls_; }

  // Relative complement a \ b for b <= a in a Boolean semigroup: the unique
  // x with x v b = a and x ^ b = 0. Throws NotBoolean / NotBelow.
  int relative_complement(int a, int b) const;

  std::vector<int> down_set(int s) const;  // {y : y <= s}, ascending
  std::vector<int> up_set(int s) const;    // {y : y >= s}, ascending

  const std::string& name(int s) const { return names_[s]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& table() const { return table_; }

 private:
  void precompute();

  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::vector<char> idem_;
  std::vector<char> leq_;       // n x n
  std::vector<char> meets_nz_;  // n x n
  std::vector<int> meet_;       // n x n, -1 = absent
  std::vector<int> join_;       // n x n, -1 = absent, -2 = not compatible
  std::vector<std::string> names_;
  Classification cls_;
};

// A proper filter of a finite inverse semigroup. Every filter of a finite
// semigroup is principal (the directed set has a minimum), so a filter is
// stored by its base element; it denotes base^up = {y : y >= base}.
struct Filter {
  int base = 0;
  friend bool operator==(const Filter&, const Filter&) = default;
};

}  // namespace istone

#endif  // ISTONE_SEMIGROUP_HPP_
