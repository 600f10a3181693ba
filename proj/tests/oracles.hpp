// Independent brute-force oracles used by the tests. Everything here avoids
// the library's search/embedding fast paths: plain enumeration over all
// injective maps, down-set enumeration over edge subsets, memoized maximum
// independent set over precomputed conflict pairs, and exact big-integer
// arithmetic.
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdh/gdh.hpp"

namespace oracles {

// Every injective map from pattern vertices to host vertices, checked edge by
// edge with no pruning.
inline std::uint64_t naive_injective_homs(const gdh::Gdh& pattern,
                                          const gdh::Gdh& host) {
  const int k = pattern.vertex_count();
  const int n = host.vertex_count();
  if (k > n) return 0;
  const auto pattern_edges = pattern.edges();
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  std::uint64_t count = 0;
  std::vector<int> image(pattern.theory().arity());
  auto rec = [&](auto&& self, int v) -> void {
    if (v == k) {
      for (const auto& t : pattern_edges) {
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = map[t[i]];
        if (!host.has_edge(image)) return;
      }
      ++count;
      return;
    }
    for (int g = 0; g < n; ++g) {
      if (used[g]) continue;
      used[g] = 1;
      map[v] = g;
      self(self, v + 1);
      used[g] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

inline bool naive_contains(const gdh::Gdh& pattern, const gdh::Gdh& host) {
  return naive_injective_homs(pattern, host) > 0;
}

// Distinct edge-image sets of the pattern inside the host, via the same naive
// enumeration. Each set is a sorted vector of host edge codes.
inline std::vector<std::vector<std::uint64_t>> naive_copy_sets(
    const gdh::Gdh& pattern, const gdh::Gdh& host) {
  const int k = pattern.vertex_count();
  const int n = host.vertex_count();
  std::set<std::vector<std::uint64_t>> sets;
  if (k > n) return {};
  const auto pattern_edges = pattern.edges();
  std::vector<int> map(k, -1);
  std::vector<char> used(n, 0);
  std::vector<int> image(pattern.theory().arity());
  auto rec = [&](auto&& self, int v) -> void {
    if (v == k) {
      std::vector<std::uint64_t> codes;
      for (const auto& t : pattern_edges) {
        for (std::size_t i = 0; i < t.size(); ++i) image[i] = map[t[i]];
        if (!host.has_edge(image)) return;
        codes.push_back(gdh::encode_tuple(
            gdh::canonical_rep(image, host.theory().group()),
            host.vertex_count()));
      }
      std::sort(codes.begin(), codes.end());
      sets.insert(std::move(codes));
      return;
    }
    for (int g = 0; g < n; ++g) {
      if (used[g]) continue;
      used[g] = 1;
      map[v] = g;
      self(self, v + 1);
      used[g] = 0;
    }
  };
  rec(rec, 0);
  return {sets.begin(), sets.end()};
}

// Enumerates every family-free subset of the candidate edges by depth-first
// extension, using precomputed naive copies; returns the maximum size.
// Feasible only while the number of free subsets stays small.
struct DownsetResult {
  std::int64_t best = 0;
  std::uint64_t visited = 0;
};

inline DownsetResult downset_max_free(const gdh::Theory& theory, int n,
                                      const gdh::Family& family,
                                      std::uint64_t visit_cap = 400'000'000) {
  const gdh::Gdh host = gdh::complete_gdh(theory, n);
  const auto& candidates = host.edge_codes();
  const int m = static_cast<int>(candidates.size());
  auto index_of = [&](std::uint64_t code) {
    return static_cast<int>(
        std::lower_bound(candidates.begin(), candidates.end(), code) -
        candidates.begin());
  };

  std::vector<std::vector<int>> copies;
  for (const auto& member : family.members)
    for (const auto& codes : naive_copy_sets(member, host)) {
      std::vector<int> idxs;
      for (std::uint64_t c : codes) idxs.push_back(index_of(c));
      std::sort(idxs.begin(), idxs.end());
      copies.push_back(std::move(idxs));
    }
  std::sort(copies.begin(), copies.end());
  copies.erase(std::unique(copies.begin(), copies.end()), copies.end());
  std::vector<std::vector<int>> with_edge(m);
  for (std::size_t c = 0; c < copies.size(); ++c)
    for (int e : copies[c]) with_edge[e].push_back(static_cast<int>(c));

  std::vector<int> missing(copies.size());
  for (std::size_t c = 0; c < copies.size(); ++c)
    missing[c] = static_cast<int>(copies[c].size());

  DownsetResult out;
  std::int64_t size = 0;
  auto rec = [&](auto&& self, int next) -> void {
    ++out.visited;
    if (out.visited > visit_cap)
      throw std::runtime_error("down-set oracle visit cap exceeded");
    out.best = std::max(out.best, size);
    for (int e = next; e < m; ++e) {
      bool completes = false;
      for (int c : with_edge[e])
        if (missing[c] == 1) {
          completes = true;
          break;
        }
      if (completes) continue;
      for (int c : with_edge[e]) --missing[c];
      ++size;
      self(self, e + 1);
      --size;
      for (int c : with_edge[e]) ++missing[c];
    }
  };
  rec(rec, 0);
  return out;
}

// Maximum family-free subset when every member has exactly two edges:
// freeness is then a pairwise condition, so the answer is the maximum
// independent set of the conflict graph over candidate edges. Solved by a
// memoized branch-on-max-degree recursion over bitmasks (<= 64 candidates).
inline std::int64_t conflict_mis_max_free(const gdh::Theory& theory, int n,
                                          const gdh::Family& family) {
  const gdh::Gdh host = gdh::complete_gdh(theory, n);
  const auto& candidates = host.edge_codes();
  const int m = static_cast<int>(candidates.size());
  if (m > 64) throw std::invalid_argument("conflict oracle needs <= 64 edges");
  auto index_of = [&](std::uint64_t code) {
    return static_cast<int>(
        std::lower_bound(candidates.begin(), candidates.end(), code) -
        candidates.begin());
  };

  std::vector<std::uint64_t> adj(m, 0);
  for (const auto& member : family.members) {
    if (member.edge_count() != 2)
      throw std::invalid_argument("conflict oracle needs two-edge members");
    for (const auto& codes : naive_copy_sets(member, host)) {
      const int a = index_of(codes[0]);
      const int b = index_of(codes[1]);
      adj[a] |= 1ull << b;
      adj[b] |= 1ull << a;
    }
  }

  std::map<std::uint64_t, std::int64_t> memo;
  auto mis = [&](auto&& self, std::uint64_t rem) -> std::int64_t {
    if (rem == 0) return 0;
    auto it = memo.find(rem);
    if (it != memo.end()) return it->second;
    // Pick the remaining vertex with the most remaining neighbours.
    int pick = -1, deg = -1;
    std::uint64_t scan = rem;
    while (scan) {
      const int v = std::countr_zero(scan);
      scan &= scan - 1;
      const int d = std::popcount(adj[v] & rem);
      if (d > deg) {
        deg = d;
        pick = v;
      }
    }
    std::int64_t result;
    if (deg == 0) {
      result = std::popcount(rem);
    } else {
      const std::int64_t with_pick =
          1 + self(self, rem & ~(adj[pick] | (1ull << pick)));
      const std::int64_t without_pick = self(self, rem & ~(1ull << pick));
      result = std::max(with_pick, without_pick);
    }
    memo.emplace(rem, result);
    return result;
  };
  return mis(mis, m == 64 ? ~0ull : (1ull << m) - 1);
}

// Grid maximum of the complete-graph polynomial sum_{i<j} x_i x_j over the
// simplex, times two (the group order at r = 2). The polynomial is symmetric,
// so only nondecreasing integer compositions of the resolution are visited;
// at each point the value is (1 - sum x_i^2) / 2.
inline double kclique_grid_density(int k, int resolution) {
  double best = 0.0;
  std::vector<int> part(k, 0);
  auto rec = [&](auto&& self, int pos, int lo, int left) -> void {
    if (pos == k - 1) {
      if (left < lo) return;
      part[pos] = left;
      double sumsq = 0.0;
      for (int a : part) {
        const double x = static_cast<double>(a) / resolution;
        sumsq += x * x;
      }
      best = std::max(best, 1.0 - sumsq);
      return;
    }
    const int remaining_slots = k - pos;
    for (int a = lo; a * remaining_slots <= left; ++a) {
      part[pos] = a;
      self(self, pos + 1, a, left - a);
    }
  };
  rec(rec, 0, 0, resolution);
  return best;
}

// Exact edge density of the (t,...,t)-blowup of a single edge, computed with
// full factorials rather than a falling product.
inline std::pair<std::string, std::string> sequence_fraction_factorials(
    int m, int r, int t) {
  using boost::multiprecision::cpp_int;
  auto fact = [](int v) {
    cpp_int f = 1;
    for (int i = 2; i <= v; ++i) f *= i;
    return f;
  };
  cpp_int num = m;
  for (int i = 0; i < r; ++i) num *= t;
  num *= fact(t * r - r);
  cpp_int den = fact(t * r);
  const cpp_int g = boost::multiprecision::gcd(num, den);
  const cpp_int rn = num / g;
  const cpp_int rd = den / g;
  return {rn.str(), rd.str()};
}

// Number of subsets of S_r that contain the identity and are closed under
// composition, by direct scan over all subsets. r <= 4.
inline int subset_closure_subgroup_count(int r) {
  std::vector<gdh::Perm> all;
  {
    std::vector<int> img(r);
    std::iota(img.begin(), img.end(), 0);
    do {
      all.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
  }
  const int sz = static_cast<int>(all.size());
  if (sz > 24) throw std::invalid_argument("subset scan needs r <= 4");
  std::vector<std::vector<int>> table(sz, std::vector<int>(sz));
  for (int i = 0; i < sz; ++i)
    for (int j = 0; j < sz; ++j) {
      const gdh::Perm p = gdh::compose(all[i], all[j]);
      table[i][j] = static_cast<int>(
          std::lower_bound(all.begin(), all.end(), p) - all.begin());
    }
  int id = 0;
  for (int i = 0; i < sz; ++i)
    if (all[i].is_identity()) id = i;

  int count = 0;
  const std::uint32_t limit = 1u << sz;
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (!(mask >> id & 1)) continue;
    bool closed = true;
    for (int i = 0; i < sz && closed; ++i) {
      if (!(mask >> i & 1)) continue;
      for (int j = 0; j < sz; ++j) {
        if (!(mask >> j & 1)) continue;
        if (!(mask >> table[i][j] & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

// Seeded random graph over a theory: edge tuples drawn until `edges` distinct
// orbit edges exist (or the graph is complete).
inline gdh::Gdh random_gdh(const gdh::Theory& theory, int n, int edges,
                           std::mt19937_64& rng) {
  const gdh::Gdh full = gdh::complete_gdh(theory, n);
  const auto& codes = full.edge_codes();
  std::vector<std::uint64_t> pool(codes);
  for (std::size_t i = pool.size(); i > 1; --i)
    std::swap(pool[i - 1], pool[rng() % i]);
  gdh::GdhBuilder b(theory, n);
  const std::size_t take =
      std::min<std::size_t>(pool.size(), static_cast<std::size_t>(edges));
  for (std::size_t i = 0; i < take; ++i) b.add_code_unchecked(pool[i]);
  return b.build();
}

}  // namespace oracles
