#include "gdh/lattice.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "gdh/util.hpp"

namespace gdh {

TheoryPair::TheoryPair(Theory fine_theory, Theory coarse_theory)
    : fine(std::move(fine_theory)), coarse(std::move(coarse_theory)) {
  if (fine.arity() != coarse.arity())
    throw std::invalid_argument("theory pair arity mismatch");
  if (!fine.group().is_subgroup_of(coarse.group()))
    throw std::invalid_argument(
        "fine group is not contained in the coarse group");
  if (coarse.order() % fine.order() != 0)
    throw std::invalid_argument("group orders are not nested");
  ratio = coarse.order() / fine.order();
}

std::vector<std::uint64_t> fine_edges_within(std::uint64_t coarse_code,
                                             const TheoryPair& pair, int n) {
  const int r = pair.coarse.arity();
  const std::vector<int> rep = decode_tuple(coarse_code, r, n);
  std::set<std::uint64_t> fine_codes;
  for (const auto& perm : pair.coarse.group().elements()) {
    const std::vector<int> tuple = apply_to_positions(perm, rep);
    fine_codes.insert(encode_tuple(canonical_rep(tuple, pair.fine.group()), n));
  }
  return {fine_codes.begin(), fine_codes.end()};
}

Gdh min_container(const Gdh& fine_graph, const TheoryPair& pair) {
  if (!(fine_graph.theory() == pair.fine))
    throw std::invalid_argument("input graph is not over the fine theory");
  GdhBuilder b(pair.coarse, fine_graph.vertex_count());
  for (const auto& t : fine_graph.edges()) b.add(t);
  return b.build();
}

Gdh expand_all(const Gdh& coarse_graph, const TheoryPair& pair) {
  if (!(coarse_graph.theory() == pair.coarse))
    throw std::invalid_argument("input graph is not over the coarse theory");
  const int n = coarse_graph.vertex_count();
  GdhBuilder b(pair.fine, n);
  for (std::uint64_t code : coarse_graph.edge_codes())
    for (std::uint64_t f : fine_edges_within(code, pair, n))
      b.add_code_unchecked(f);
  return b.build();
}

Gdh orient_k(const Gdh& coarse_graph, const TheoryPair& pair, int k,
             std::uint64_t seed) {
  if (!(coarse_graph.theory() == pair.coarse))
    throw std::invalid_argument("input graph is not over the coarse theory");
  if (k < 1 || k > pair.ratio)
    throw std::invalid_argument("orientation count k out of range");
  const int n = coarse_graph.vertex_count();
  std::mt19937_64 rng(seed);
  GdhBuilder b(pair.fine, n);
  // Edges are visited in canonical order, so one generator stream is
  // reproducible.
  for (std::uint64_t code : coarse_graph.edge_codes()) {
    const auto fine = fine_edges_within(code, pair, n);
    std::vector<int> idx(fine.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    for (int j = 0; j < k; ++j) {
      const std::size_t pick =
          j + static_cast<std::size_t>(rng() % (idx.size() - j));
      std::swap(idx[j], idx[pick]);
    }
    for (int j = 0; j < k; ++j) b.add_code_unchecked(fine[idx[j]]);
  }
  return b.build();
}

Family project_family(const Family& family, const TheoryPair& pair,
                      int threads) {
  if (!(family.theory == pair.coarse))
    throw std::invalid_argument("family is not over the coarse theory");
  Family out(pair.fine);
  for (const auto& member : family.members) {
    const int n = member.vertex_count();
    const auto codes = member.edge_codes();
    const std::size_t e = codes.size();
    double total_d = 1.0;
    for (std::size_t i = 0; i < e; ++i) total_d *= pair.ratio;
    if (total_d > 1e6)
      throw std::invalid_argument(
          "family projection would enumerate more than 10^6 choices");
    const std::size_t total = static_cast<std::size_t>(total_d);

    std::vector<std::vector<std::uint64_t>> options;
    options.reserve(e);
    for (std::uint64_t code : codes)
      options.push_back(fine_edges_within(code, pair, n));

    // Candidates are generated per choice index, so chunked generation and
    // sequential generation agree.
    std::vector<Gdh> candidates(total);
    parallel_for(resolve_threads(threads), total, [&](std::size_t idx) {
      GdhBuilder b(pair.fine, n);
      std::size_t rest = idx;
      for (std::size_t j = 0; j < e; ++j) {
        b.add_code_unchecked(options[j][rest % pair.ratio]);
        rest /= pair.ratio;
      }
      candidates[idx] = b.build();
    });

    for (auto& cand : candidates) {
      bool fresh = true;
      for (const auto& seen : out.members) {
        if (isomorphic(seen, cand)) {
          fresh = false;
          break;
        }
      }
      if (fresh) out.members.push_back(std::move(cand));
    }
  }
  return out;
}

}  // namespace gdh
