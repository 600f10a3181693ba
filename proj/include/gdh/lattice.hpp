#pragma once

#include <cstdint>

#include "gdh/gdh.hpp"

namespace gdh {

// A pair of theories whose groups are nested: fine.group() is a subgroup of
// coarse.group(). One coarse edge splits into exactly ratio fine edges.
struct TheoryPair {
  Theory fine;
  Theory coarse;
  int ratio = 1;  // m_coarse / m_fine

  TheoryPair(Theory fine_theory, Theory coarse_theory);
};

// Each fine edge replaced by the coarse orbit edge containing it; no coarse
// edge appears without a fine edge inside it.
Gdh min_container(const Gdh& fine_graph, const TheoryPair& pair);

// Each coarse edge replaced by all ratio fine edges inside it.
Gdh expand_all(const Gdh& coarse_graph, const TheoryPair& pair);

// Each coarse edge replaced by k distinct fine edges inside it, chosen by the
// seeded generator; 1 <= k <= ratio. k == ratio reproduces expand_all.
Gdh orient_k(const Gdh& coarse_graph, const TheoryPair& pair, int k,
             std::uint64_t seed);

// All fine graphs with exactly one edge inside every edge of some member,
// deduplicated up to isomorphism. Refuses when ratio^edges exceeds 10^6.
Family project_family(const Family& family, const TheoryPair& pair,
                      int threads = 0);

// The ratio fine edges inside one coarse edge, as sorted fine canonical codes.
std::vector<std::uint64_t> fine_edges_within(std::uint64_t coarse_code,
                                             const TheoryPair& pair, int n);

}  // namespace gdh
