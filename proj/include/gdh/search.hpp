#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gdh/gdh.hpp"

namespace gdh {

struct SearchConfig {
  std::uint64_t budget = 100'000'000;  // node cap
  int threads = 0;                     // <= 0: machine parallelism
  bool symmetry = true;                // shallow vertex-relabeling pruning
};

struct SearchResult {
  int n = 0;
  std::int64_t best_edge_count = 0;
  Gdh witness;
  bool exhaustive = true;
  std::uint64_t nodes_explored = 0;
  double density_bound = 0.0;  // best / ((r!/m) C(n, r))
};

// Maximum edge count over family-free graphs on n vertices, by depth-first
// include/exclude branch and bound over the canonical candidate edges.
// Deterministic for any thread count: the tree splits into independent
// subtrees at depth two and each subtree starts from the same greedy bound.
SearchResult extremal_number(const Theory& theory, int n, const Family& family,
                             const SearchConfig& config = {});

// Exact extremal densities for n in [n_lo, n_hi]; throws if any search is not
// exhaustive. n_lo must be at least the arity.
std::vector<std::pair<int, double>> density_bound_sequence(
    const Theory& theory, const Family& family, int n_lo, int n_hi,
    const SearchConfig& config = {});

// Head/body split construction over the 2->1 theory: bodies B of size
// ceil(2n/3) first, heads H of size floor(n/3) after; edges {b1,b2} -> h.
// Edge count is floor(n/3) * C(ceil(2n/3), 2).
Gdh langlois_construction(int n);

// The two-edge 2->1 pattern whose head of one edge is a tail of the other:
// {01->2, 23->4} on five vertices.
Gdh langlois_forbidden();

// Members with at most k vertices.
Family restrict_family(const Family& family, int k);

}  // namespace gdh
