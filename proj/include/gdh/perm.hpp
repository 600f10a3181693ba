#pragma once

#include <compare>
#include <vector>

namespace gdh {

// A bijection on {0..r-1}. images()[i] is where position i is sent.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // throws if not a bijection
  static Perm identity(int r);

  int arity() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<int> images_;
};

// result(i) = p(q(i)); q is applied first.
Perm compose(const Perm& p, const Perm& q);

// out[i] = t[p(i)] -- a permutation read through tuple positions.
std::vector<int> apply_to_positions(const Perm& p, const std::vector<int>& t);

// A set of permutations on r points, stored by full element enumeration.
// Instances produced by closure()/enumerate_subgroups() are genuine groups.
class PermGroup {
public:
  PermGroup() = default;
  PermGroup(int r, std::vector<Perm> elements);

  static PermGroup trivial(int r);
  static PermGroup symmetric(int r);

  int arity() const { return r_; }
  int order() const { return static_cast<int>(elems_.size()); }
  const std::vector<Perm>& elements() const { return elems_; }

  bool contains(const Perm& p) const;
  bool is_subgroup_of(const PermGroup& other) const;
  // Exhaustive check: identity present, closed under composition.
  bool verify_closed() const;

  friend bool operator==(const PermGroup&, const PermGroup&) = default;

private:
  int r_ = 0;
  std::vector<Perm> elems_;  // sorted, unique
};

// Smallest group containing the generators. Empty generator set gives the
// trivial group.
PermGroup closure(int r, const std::vector<Perm>& generators);

// All subgroups of S_r, sorted by order then by element list. r <= 5.
std::vector<PermGroup> enumerate_subgroups(int r);

// Orbit of a distinct-entry tuple under the position action; the action is
// free, so the orbit has exactly g.order() elements.
std::vector<std::vector<int>> tuple_orbit(const std::vector<int>& t,
                                          const PermGroup& g);

// Lexicographically smallest tuple in the orbit. Idempotent.
std::vector<int> canonical_rep(const std::vector<int>& t, const PermGroup& g);

}  // namespace gdh
