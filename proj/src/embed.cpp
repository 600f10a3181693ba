#include <algorithm>
#include <set>
#include <stdexcept>

#include "gdh/gdh.hpp"

namespace gdh {

namespace {

void check_shared_theory(const Gdh& a, const Gdh& b) {
  if (!(a.theory() == b.theory()))
    throw std::invalid_argument("graphs are over different theories");
}

// Backtracking injective-homomorphism search. Pattern vertices are assigned
// in index order; a pattern edge is verified as soon as its last vertex is
// mapped. Candidates are pruned by edge-participation counts.
class Embedder {
 public:
  Embedder(const Gdh& pattern, const Gdh& host)
      : pattern_(pattern),
        host_(host),
        k_(pattern.vertex_count()),
        n_(host.vertex_count()) {
    pdeg_.assign(std::max(k_, 1), 0);
    hdeg_.assign(std::max(n_, 1), 0);
    check_at_.resize(std::max(k_, 1));
    for (const auto& t : pattern_.edges()) {
      int mx = 0;
      for (int v : t) {
        ++pdeg_[v];
        mx = std::max(mx, v);
      }
      check_at_[mx].push_back(t);
    }
    for (const auto& t : host_.edges())
      for (int v : t) ++hdeg_[v];
    map_.assign(k_, -1);
    used_.assign(std::max(n_, 1), 0);
    image_.resize(pattern_.theory().arity());
  }

  // on_found gets the complete vertex map and returns true to keep going.
  template <class OnFound>
  bool search(OnFound&& on_found) {
    return descend(0, on_found);
  }

 private:
  template <class OnFound>
  bool descend(int v, OnFound& on_found) {
    if (v == k_) return on_found(map_);
    for (int g = 0; g < n_; ++g) {
      if (used_[g] || hdeg_[g] < pdeg_[v]) continue;
      map_[v] = g;
      used_[g] = 1;
      bool ok = true;
      for (const auto& t : check_at_[v]) {
        for (std::size_t i = 0; i < t.size(); ++i) image_[i] = map_[t[i]];
        if (!host_.has_edge(image_)) {
          ok = false;
          break;
        }
      }
      if (ok && !descend(v + 1, on_found)) return false;
      used_[g] = 0;
      map_[v] = -1;
    }
    return true;
  }

  const Gdh& pattern_;
  const Gdh& host_;
  int k_, n_;
  std::vector<int> pdeg_, hdeg_;
  std::vector<std::vector<std::vector<int>>> check_at_;
  std::vector<int> map_;
  std::vector<char> used_;
  std::vector<int> image_;
};

}  // namespace

std::optional<std::vector<int>> find_embedding(const Gdh& pattern,
                                               const Gdh& host) {
  check_shared_theory(pattern, host);
  if (pattern.vertex_count() > host.vertex_count()) return std::nullopt;
  std::optional<std::vector<int>> found;
  Embedder e(pattern, host);
  e.search([&](const std::vector<int>& map) {
    found = map;
    return false;
  });
  return found;
}

std::uint64_t count_injective_homs(const Gdh& pattern, const Gdh& host) {
  check_shared_theory(pattern, host);
  if (pattern.vertex_count() > host.vertex_count()) return 0;
  std::uint64_t count = 0;
  Embedder e(pattern, host);
  e.search([&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

std::uint64_t automorphism_count(const Gdh& g) {
  return count_injective_homs(g, g);
}

std::uint64_t count_copies(const Gdh& pattern, const Gdh& host) {
  const std::uint64_t homs = count_injective_homs(pattern, host);
  const std::uint64_t aut = automorphism_count(pattern);
  // Aut acts freely on injective homomorphisms by precomposition.
  return homs / aut;
}

std::vector<std::vector<std::uint64_t>> copy_edge_code_sets(const Gdh& pattern,
                                                            const Gdh& host) {
  check_shared_theory(pattern, host);
  std::set<std::vector<std::uint64_t>> sets;
  if (pattern.vertex_count() > host.vertex_count()) return {};
  const auto pattern_edges = pattern.edges();
  const auto& group = host.theory().group();
  const int n = host.vertex_count();
  Embedder e(pattern, host);
  std::vector<int> image(pattern.theory().arity());
  e.search([&](const std::vector<int>& map) {
    std::vector<std::uint64_t> codes;
    codes.reserve(pattern_edges.size());
    for (const auto& t : pattern_edges) {
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = map[t[i]];
      codes.push_back(encode_tuple(canonical_rep(image, group), n));
    }
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    sets.insert(std::move(codes));
    return true;
  });
  return {sets.begin(), sets.end()};
}

bool is_family_free(const Gdh& g, const Family& family) {
  if (!(family.theory == g.theory()))
    throw std::invalid_argument("family theory mismatch");
  for (const auto& member : family.members)
    if (find_embedding(member, g)) return false;
  return true;
}

bool isomorphic(const Gdh& a, const Gdh& b) {
  if (!(a.theory() == b.theory())) return false;
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  // An injective homomorphism between equal vertex and edge counts is onto
  // the edge set, hence an isomorphism.
  return find_embedding(a, b).has_value();
}

}  // namespace gdh
