#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gdh/perm.hpp"

namespace gdh {

// An edge theory: arity r together with the permutation subgroup whose
// position action identifies r-tuples into orbit edges.
class Theory {
public:
  Theory() = default;
  explicit Theory(PermGroup group);

  int arity() const { return group_.arity(); }
  int order() const { return group_.order(); }  // m
  const PermGroup& group() const { return group_; }

  // (r!/m) * C(n, r): the number of distinct orbit edges on n vertices.
  std::uint64_t complete_edge_count(int n) const;

  friend bool operator==(const Theory&, const Theory&) = default;

private:
  PermGroup group_;
};

Theory trivial_theory(int r);
Theory symmetric_theory(int r);
// Arity 3, group generated by the swap of the first two positions.
Theory two_to_one_theory();

// Distinct-entry r-tuples over [0, n) are packed base-n, first entry most
// significant, so numeric order equals lexicographic tuple order.
std::uint64_t encode_tuple(std::span<const int> t, int n);
std::vector<int> decode_tuple(std::uint64_t code, int r, int n);

class Gdh;

class GdhBuilder {
public:
  GdhBuilder(Theory theory, int n);
  // Validates range/distinctness, canonicalizes, inserts (set semantics).
  void add(const std::vector<int>& tuple);
  void add_code_unchecked(std::uint64_t code);
  Gdh build();

private:
  Theory theory_;
  int n_;
  std::vector<std::uint64_t> codes_;
};

// A model: n vertices (0..n-1) plus a sorted set of canonical edge codes.
// Immutable; operations return new values.
class Gdh {
public:
  Gdh() = default;
  Gdh(Theory theory, int n);

  const Theory& theory() const { return theory_; }
  int vertex_count() const { return n_; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(codes_.size());
  }
  const std::vector<std::uint64_t>& edge_codes() const { return codes_; }
  std::vector<std::vector<int>> edges() const;

  bool has_edge(const std::vector<int>& tuple) const;  // any orbit member
  bool has_edge_code(std::uint64_t canonical_code) const;

  // New value with the tuple's orbit edge present. Tuples from an already
  // present orbit are a no-op.
  Gdh add_edge(const std::vector<int>& tuple) const;

  // e / ((r!/m) C(n, r)); requires n >= r.
  double density() const;

  // Substructure on S, relabeled 0..|S|-1 preserving vertex order.
  Gdh induced(const std::vector<int>& vertices) const;

  friend bool operator==(const Gdh&, const Gdh&) = default;

private:
  friend class GdhBuilder;
  Theory theory_;
  int n_ = 0;
  std::vector<std::uint64_t> codes_;
};

Gdh complete_gdh(const Theory& theory, int n);

struct Family {
  Theory theory;
  std::vector<Gdh> members;

  Family() = default;
  explicit Family(Theory t) : theory(std::move(t)) {}
  Family(Theory t, std::vector<Gdh> m);  // validates shared theory
  std::size_t size() const { return members.size(); }
};

// Injective homomorphism from pattern into host, or nullopt. Deterministic:
// pattern vertices are assigned in index order, host candidates tried in
// increasing id, pruned by per-vertex edge participation counts.
std::optional<std::vector<int>> find_embedding(const Gdh& pattern,
                                               const Gdh& host);

std::uint64_t count_injective_homs(const Gdh& pattern, const Gdh& host);

// Injective homomorphisms of g into itself (all are isomorphisms).
std::uint64_t automorphism_count(const Gdh& g);

// count_injective_homs / |Aut(pattern)|.
std::uint64_t count_copies(const Gdh& pattern, const Gdh& host);

// Distinct edge-image sets over all injective homomorphisms, each a sorted
// vector of host edge codes; the list itself is sorted.
std::vector<std::vector<std::uint64_t>> copy_edge_code_sets(const Gdh& pattern,
                                                            const Gdh& host);

bool is_family_free(const Gdh& g, const Family& family);

bool isomorphic(const Gdh& a, const Gdh& b);

}  // namespace gdh
