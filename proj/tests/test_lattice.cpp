#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gdh/lagrangian.hpp"
#include "gdh/lattice.hpp"
#include "oracles.hpp"

using namespace gdh;

namespace {

Gdh single_edge(const Theory& theory) {
  const int r = theory.arity();
  std::vector<int> t(r);
  for (int i = 0; i < r; ++i) t[i] = i;
  Gdh g(theory, r);
  return g.add_edge(t);
}

}  // namespace

TEST_CASE("theory pair validation") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  CHECK(pair.ratio == 3);
  CHECK(TheoryPair(trivial_theory(3), symmetric_theory(3)).ratio == 6);
  CHECK_THROWS_AS(TheoryPair(symmetric_theory(3), two_to_one_theory()),
                  std::invalid_argument);
  CHECK_THROWS_AS(TheoryPair(symmetric_theory(2), symmetric_theory(3)),
                  std::invalid_argument);
}

TEST_CASE("minimum containers") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  CHECK(min_container(single_edge(pair.fine), pair) ==
        single_edge(pair.coarse));

  Gdh all_orient(pair.fine, 3);
  all_orient =
      all_orient.add_edge({0, 1, 2}).add_edge({0, 2, 1}).add_edge({1, 2, 0});
  CHECK(all_orient.edge_count() == 3);
  CHECK(min_container(all_orient, pair) == single_edge(pair.coarse));

  CHECK(min_container(Gdh(pair.fine, 4), pair) == Gdh(pair.coarse, 4));
  CHECK_THROWS_AS(min_container(single_edge(pair.coarse), pair),
                  std::invalid_argument);
}

TEST_CASE("expanding a coarse edge into all fine edges") {
  const TheoryPair to21(two_to_one_theory(), symmetric_theory(3));
  CHECK(expand_all(single_edge(to21.coarse), to21).edge_count() == 3);

  const TheoryPair totriv(trivial_theory(3), symmetric_theory(3));
  CHECK(expand_all(single_edge(totriv.coarse), totriv).edge_count() == 6);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Gdh coarse =
        oracles::random_gdh(to21.coarse, 5, 1 + (int)(rng() % 6), rng);
    const Gdh fine = expand_all(coarse, to21);
    CHECK(fine.edge_count() == to21.ratio * coarse.edge_count());
    CHECK(min_container(fine, to21) == coarse);  // round trip
  }
}

TEST_CASE("min container then expand dominates the original") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const Gdh fine =
        oracles::random_gdh(pair.fine, 5, 1 + (int)(rng() % 8), rng);
    const Gdh expanded = expand_all(min_container(fine, pair), pair);
    for (std::uint64_t code : fine.edge_codes())
      CHECK(expanded.has_edge_code(code));
  }
}

TEST_CASE("orient-k") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  const Gdh coarse = single_edge(pair.coarse);

  CHECK(orient_k(coarse, pair, pair.ratio, 9) == expand_all(coarse, pair));
  CHECK(orient_k(coarse, pair, 1, 9).edge_count() == 1);
  CHECK_THROWS_AS(orient_k(coarse, pair, 0, 9), std::invalid_argument);
  CHECK_THROWS_AS(orient_k(coarse, pair, 4, 9), std::invalid_argument);

  // Same seed, same result.
  std::mt19937_64 rng(13);
  const Gdh big = oracles::random_gdh(pair.coarse, 5, 6, rng);
  CHECK(orient_k(big, pair, 2, 123) == orient_k(big, pair, 2, 123));

  // One fine edge per coarse edge is the scaled blowup density.
  const double single_density =
      blowup_density(orient_k(coarse, pair, 1, 1)).value;
  CHECK(single_density == doctest::Approx(2.0 / 27).epsilon(1e-9));
  const double double_density =
      blowup_density(orient_k(coarse, pair, 2, 1)).value;
  CHECK(double_density == doctest::Approx(4.0 / 27).epsilon(1e-9));
}

TEST_CASE("container scaling law on random coarse graphs") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  std::mt19937_64 rng(17);
  OptimizerConfig cfg;
  cfg.starts = 60;
  for (int trial = 0; trial < 8; ++trial) {
    const Gdh coarse =
        oracles::random_gdh(pair.coarse, 5, 1 + (int)(rng() % 6), rng);
    if (coarse.edge_count() == 0) continue;
    const double base = blowup_density(coarse, cfg).value;
    for (int k = 1; k <= pair.ratio; ++k) {
      const Gdh fine = orient_k(coarse, pair, k, 1000 + trial);
      const double expect =
          static_cast<double>(k) * pair.fine.order() / pair.coarse.order() *
          base;
      CHECK(blowup_density(fine, cfg).value ==
            doctest::Approx(expect).epsilon(2e-6));
    }
  }
}

TEST_CASE("container sandwich for arbitrary fine graphs") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 8; ++trial) {
    const Gdh fine =
        oracles::random_gdh(pair.fine, 5, 1 + (int)(rng() % 8), rng);
    if (fine.edge_count() == 0) continue;
    const Gdh container = min_container(fine, pair);
    const double bf = blowup_density(fine).value;
    const double bc = blowup_density(container).value;
    const double lo = bc * pair.fine.order() / pair.coarse.order();
    CHECK(bf >= lo - 1e-6);
    CHECK(bf <= bc + 1e-6);
  }
}

TEST_CASE("containment transports to containers") {
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const Gdh host = oracles::random_gdh(pair.fine, 5, 4 + (int)(rng() % 8), rng);
    const Gdh pattern = oracles::random_gdh(pair.fine, 4, 2, rng);
    if (!find_embedding(pattern, host)) continue;
    CHECK(find_embedding(min_container(pattern, pair),
                         min_container(host, pair))
              .has_value());
  }
}

TEST_CASE("family projection counts and dedup") {
  const TheoryPair to21(two_to_one_theory(), symmetric_theory(3));
  const Family single_s3(to21.coarse, {single_edge(to21.coarse)});
  const Family projected = project_family(single_s3, to21);
  CHECK(projected.theory == to21.fine);
  CHECK(projected.members.size() == 1);  // three choices, one up to iso
  CHECK(projected.members[0].edge_count() == 1);

  const TheoryPair totriv(trivial_theory(3), symmetric_theory(3));
  CHECK(project_family(single_s3, totriv).members.size() == 1);

  Gdh two(to21.coarse, 4);
  two = two.add_edge({0, 1, 2}).add_edge({1, 2, 3});
  const Family two_fam(to21.coarse, {two});
  const auto projected2 = project_family(two_fam, to21);
  CHECK(projected2.members.size() <= 9);  // ratio^edges before dedup
  for (const auto& member : projected2.members) {
    CHECK(member.edge_count() == 2);
    CHECK(min_container(member, to21) == two);
  }
}

TEST_CASE("family projection explosion guard") {
  const TheoryPair totriv(trivial_theory(3), symmetric_theory(3));
  const Gdh big = complete_gdh(totriv.coarse, 6);  // 6^20 choices
  CHECK_THROWS_AS(project_family(Family(totriv.coarse, {big}), totriv),
                  std::invalid_argument);
}

TEST_CASE("freeness transports through projection") {
  // If a fine graph avoids the projected family, collapsing it to its
  // minimum container avoids the original family.
  const TheoryPair pair(two_to_one_theory(), symmetric_theory(3));
  std::mt19937_64 rng(29);

  std::vector<Family> fams;
  fams.emplace_back(pair.coarse, std::vector<Gdh>{single_edge(pair.coarse)});
  Gdh two(pair.coarse, 4);
  two = two.add_edge({0, 1, 2}).add_edge({1, 2, 3});
  fams.emplace_back(pair.coarse, std::vector<Gdh>{two});

  for (const auto& fam : fams) {
    const Family projected = project_family(fam, pair);
    // All two-edge fine graphs on four vertices, exhaustively.
    const Gdh full = complete_gdh(pair.fine, 4);
    const auto& codes = full.edge_codes();
    for (std::size_t i = 0; i < codes.size(); ++i) {
      for (std::size_t j = i; j < codes.size(); ++j) {
        GdhBuilder b(pair.fine, 4);
        b.add_code_unchecked(codes[i]);
        b.add_code_unchecked(codes[j]);
        const Gdh fine = b.build();
        if (!is_family_free(fine, projected)) continue;
        CHECK(is_family_free(min_container(fine, pair), fam));
      }
    }
    // Random graphs at n = 5.
    for (int trial = 0; trial < 20; ++trial) {
      const Gdh fine =
          oracles::random_gdh(pair.fine, 5, 1 + (int)(rng() % 10), rng);
      if (!is_family_free(fine, projected)) continue;
      CHECK(is_family_free(min_container(fine, pair), fam));
    }
  }
}
