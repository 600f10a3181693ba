#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "gdh/perm.hpp"
#include "gdh/util.hpp"
#include "oracles.hpp"

using namespace gdh;

TEST_CASE("compose applies the right factor first") {
  const Perm swap01({1, 0, 2});
  const Perm cycle({1, 2, 0});
  CHECK(compose(swap01, swap01) == Perm::identity(3));
  CHECK(compose(cycle, cycle) == Perm({2, 0, 1}));
  CHECK(compose(Perm::identity(3), Perm({2, 0, 1})) == Perm({2, 0, 1}));
  CHECK_THROWS_AS(compose(Perm::identity(2), swap01), std::invalid_argument);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Perm({0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Perm({0, 3, 1}), std::invalid_argument);
  CHECK(Perm({2, 0, 1}).inverse() == Perm({1, 2, 0}));
}

TEST_CASE("closure of generator sets") {
  CHECK(closure(3, {}).order() == 1);  // totally directed edges
  CHECK(closure(3, {Perm({1, 0, 2})}).order() == 2);
  CHECK(closure(3, {Perm({1, 0, 2}), Perm({1, 2, 0})}).order() == 6);
  CHECK(closure(3, {Perm({1, 2, 0})}).order() == 3);
}

TEST_CASE("closure is idempotent and closed") {
  for (int r = 2; r <= 4; ++r) {
    const PermGroup g = closure(r, {Perm::identity(r)});
    CHECK(g.verify_closed());
  }
  const PermGroup g = closure(4, {Perm({1, 0, 2, 3}), Perm({0, 1, 3, 2})});
  CHECK(g.verify_closed());
  CHECK(closure(4, g.elements()) == g);
}

TEST_CASE("subgroup enumeration matches known counts") {
  CHECK(enumerate_subgroups(2).size() == 2);

  const auto subs3 = enumerate_subgroups(3);
  REQUIRE(subs3.size() == 6);
  std::multiset<int> orders;
  for (const auto& g : subs3) orders.insert(g.order());
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 6});

  CHECK(enumerate_subgroups(4).size() == 30);
  CHECK_THROWS_AS(enumerate_subgroups(6), std::invalid_argument);
}

TEST_CASE("subgroup count agrees with the subset-closure scan") {
  CHECK(oracles::subset_closure_subgroup_count(3) == 6);
  CHECK(static_cast<int>(enumerate_subgroups(4).size()) ==
        oracles::subset_closure_subgroup_count(4));
}

TEST_CASE("every enumerated subgroup is a genuine subgroup") {
  for (int r = 2; r <= 4; ++r) {
    for (const auto& g : enumerate_subgroups(r)) {
      CHECK(g.verify_closed());
      CHECK(factorial(r) % static_cast<std::uint64_t>(g.order()) == 0);
    }
  }
}

TEST_CASE("tuple orbits") {
  const PermGroup s3 = PermGroup::symmetric(3);
  CHECK(tuple_orbit({0, 1, 2}, s3).size() == 6);

  const PermGroup swap = closure(3, {Perm({1, 0, 2})});
  const auto orbit = tuple_orbit({0, 1, 2}, swap);
  CHECK(orbit == std::vector<std::vector<int>>{{0, 1, 2}, {1, 0, 2}});

  CHECK(tuple_orbit({5, 7}, PermGroup::trivial(2)) ==
        std::vector<std::vector<int>>{{5, 7}});
  CHECK_THROWS_AS(tuple_orbit({0, 0, 1}, s3), std::invalid_argument);
}

TEST_CASE("canonical representatives") {
  const PermGroup s3 = PermGroup::symmetric(3);
  const PermGroup swap = closure(3, {Perm({1, 0, 2})});
  CHECK(canonical_rep({2, 1, 0}, s3) == std::vector<int>{0, 1, 2});
  CHECK(canonical_rep({1, 0, 2}, swap) == std::vector<int>{0, 1, 2});
  CHECK(canonical_rep({1, 0, 2}, PermGroup::trivial(3)) ==
        std::vector<int>{1, 0, 2});
  CHECK_THROWS_AS(canonical_rep({1, 1, 0}, s3), std::invalid_argument);
}

namespace {

void all_distinct_tuples(int n, int r, std::vector<int>& t,
                         std::vector<std::vector<int>>& out) {
  if (static_cast<int>(t.size()) == r) {
    out.push_back(t);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (std::find(t.begin(), t.end(), v) != t.end()) continue;
    t.push_back(v);
    all_distinct_tuples(n, r, t, out);
    t.pop_back();
  }
}

}  // namespace

TEST_CASE("orbit size is the group order and canonical reps classify orbits") {
  // Exhaustive over every subgroup and every distinct-entry tuple on up to
  // six vertices, r = 3 and r = 4.
  for (int r = 3; r <= 4; ++r) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> scratch;
    all_distinct_tuples(6, r, scratch, tuples);
    for (const auto& g : enumerate_subgroups(r)) {
      for (const auto& t : tuples) {
        const auto orbit = tuple_orbit(t, g);
        CHECK(orbit.size() == static_cast<std::size_t>(g.order()));
        const auto rep = canonical_rep(t, g);
        CHECK(std::find(orbit.begin(), orbit.end(), rep) != orbit.end());
        CHECK(canonical_rep(rep, g) == rep);  // idempotent
        for (const auto& s : orbit) CHECK(canonical_rep(s, g) == rep);
      }
      // Reps partition the tuples into orbits of equal size.
      std::set<std::vector<int>> reps;
      for (const auto& t : tuples) reps.insert(canonical_rep(t, g));
      CHECK(reps.size() * static_cast<std::size_t>(g.order()) == tuples.size());
    }
  }
}
