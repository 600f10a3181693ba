#include "gdh/search.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gdh/util.hpp"

namespace gdh {

namespace {

// Copies of forbidden members inside the complete host, each stored as a
// sorted list of candidate-edge indices. Freeness of an edge subset is
// equivalent to containing no copy in full.
struct SearchContext {
  Theory theory;
  int n = 0;
  std::vector<std::uint64_t> candidates;       // sorted canonical codes
  std::vector<std::vector<int>> copies;        // candidate indices per copy
  std::vector<std::vector<int>> copies_with;   // candidate -> copy ids
  // Vertex relabelings as candidate-index maps, for shallow symmetry pruning.
  std::vector<std::vector<int>> relabelings;
  std::int64_t greedy_bound = 0;
  std::vector<int> greedy_set;
};

int candidate_index(const SearchContext& ctx, std::uint64_t code) {
  return static_cast<int>(
      std::lower_bound(ctx.candidates.begin(), ctx.candidates.end(), code) -
      ctx.candidates.begin());
}

void build_relabelings(SearchContext& ctx) {
  if (ctx.n > 7 || ctx.n < 1) return;
  const int r = ctx.theory.arity();
  const int m = static_cast<int>(ctx.candidates.size());
  std::vector<int> sigma(ctx.n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<int> tuple, mapped(r);
  do {
    std::vector<int> map(m);
    for (int c = 0; c < m; ++c) {
      tuple = decode_tuple(ctx.candidates[c], r, ctx.n);
      for (int i = 0; i < r; ++i) mapped[i] = sigma[tuple[i]];
      map[c] = candidate_index(
          ctx, encode_tuple(canonical_rep(mapped, ctx.theory.group()), ctx.n));
    }
    ctx.relabelings.push_back(std::move(map));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

// Per-subtree search state; tasks never share mutable state.
struct TaskState {
  const SearchContext* ctx = nullptr;
  std::vector<char> included, excluded;
  std::vector<int> missing;   // per copy: edges not yet included
  std::vector<int> shut;      // per copy: edges excluded
  std::vector<int> chosen;    // included candidate indices, ascending
  std::vector<std::int64_t> mark;  // scratch for the disjoint-copy bound
  std::int64_t mark_epoch = 0;
  std::int64_t best = 0;
  std::vector<int> best_set;
  bool improved = false;
  std::uint64_t nodes = 0;
  std::uint64_t node_cap = 0;
  bool capped = false;

  explicit TaskState(const SearchContext& c) : ctx(&c) {
    const int m = static_cast<int>(c.candidates.size());
    included.assign(m, 0);
    excluded.assign(m, 0);
    mark.assign(m, 0);
    missing.resize(c.copies.size());
    shut.assign(c.copies.size(), 0);
    for (std::size_t i = 0; i < c.copies.size(); ++i)
      missing[i] = static_cast<int>(c.copies[i].size());
  }

  bool can_include(int e) const {
    for (int c : ctx->copies_with[e])
      if (shut[c] == 0 && missing[c] == 1) return false;
    return true;
  }
  void include(int e) {
    included[e] = 1;
    chosen.push_back(e);
    for (int c : ctx->copies_with[e]) --missing[c];
  }
  void undo_include(int e) {
    included[e] = 0;
    chosen.pop_back();
    for (int c : ctx->copies_with[e]) ++missing[c];
  }
  void exclude(int e) {
    excluded[e] = 1;
    for (int c : ctx->copies_with[e]) ++shut[c];
  }
  void undo_exclude(int e) {
    excluded[e] = 0;
    for (int c : ctx->copies_with[e]) --shut[c];
  }

  // Greedy count of pairwise-disjoint still-live copies; each forces at
  // least one future exclusion, tightening the cardinality bound.
  int forced_exclusions() {
    ++mark_epoch;
    int forced = 0;
    for (std::size_t c = 0; c < ctx->copies.size(); ++c) {
      if (shut[c] != 0 || missing[c] == 0) continue;
      bool disjoint = true;
      for (int e : ctx->copies[c]) {
        if (!included[e] && mark[e] == mark_epoch) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      for (int e : ctx->copies[c])
        if (!included[e]) mark[e] = mark_epoch;
      ++forced;
    }
    return forced;
  }

  // The included set must be the lexicographic minimum of its relabeling
  // orbit; every subset has a relabeled copy all of whose prefixes are
  // minimal, so some optimum always survives.
  bool prefix_canonical() const {
    if (ctx->relabelings.empty()) return true;
    const std::size_t k = chosen.size();
    std::array<int, 3> mapped{};
    for (const auto& map : ctx->relabelings) {
      for (std::size_t i = 0; i < k; ++i) mapped[i] = map[chosen[i]];
      std::sort(mapped.begin(), mapped.begin() + k);
      if (std::lexicographical_compare(mapped.begin(), mapped.begin() + k,
                                       chosen.begin(), chosen.end()))
        return false;
    }
    return true;
  }
};

void dfs(TaskState& st, int idx) {
  ++st.nodes;
  if (st.nodes > st.node_cap) {
    st.capped = true;
    return;
  }
  const int m = static_cast<int>(st.ctx->candidates.size());
  if (idx == m) return;
  const std::int64_t current = static_cast<std::int64_t>(st.chosen.size());
  const std::int64_t remaining = m - idx;
  if (current + remaining <= st.best) return;
  if (current + remaining - st.forced_exclusions() <= st.best) return;

  if (st.can_include(idx)) {
    st.include(idx);
    if (st.chosen.size() > 3 || st.prefix_canonical()) {
      if (static_cast<std::int64_t>(st.chosen.size()) > st.best) {
        st.best = static_cast<std::int64_t>(st.chosen.size());
        st.best_set = st.chosen;
        st.improved = true;
      }
      dfs(st, idx + 1);
    }
    st.undo_include(idx);
    if (st.capped) return;
  }
  st.exclude(idx);
  dfs(st, idx + 1);
  st.undo_exclude(idx);
}

struct Task {
  std::vector<std::pair<int, bool>> decisions;  // (candidate, included)
};

}  // namespace

SearchResult extremal_number(const Theory& theory, int n, const Family& family,
                             const SearchConfig& config) {
  if (!(family.theory == theory))
    throw std::invalid_argument("family theory mismatch");
  for (const auto& member : family.members)
    if (member.edge_count() == 0)
      throw std::invalid_argument(
          "family member with no edges forces an empty extremal graph");

  SearchContext ctx;
  ctx.theory = theory;
  ctx.n = n;
  const Gdh host = complete_gdh(theory, n);
  ctx.candidates = host.edge_codes();
  const int m = static_cast<int>(ctx.candidates.size());

  std::vector<std::vector<int>> copy_sets;
  for (const auto& member : family.members) {
    for (const auto& codes : copy_edge_code_sets(member, host)) {
      std::vector<int> idxs;
      idxs.reserve(codes.size());
      for (std::uint64_t code : codes) idxs.push_back(candidate_index(ctx, code));
      std::sort(idxs.begin(), idxs.end());
      copy_sets.push_back(std::move(idxs));
    }
  }
  std::sort(copy_sets.begin(), copy_sets.end());
  copy_sets.erase(std::unique(copy_sets.begin(), copy_sets.end()),
                  copy_sets.end());
  ctx.copies = std::move(copy_sets);
  ctx.copies_with.assign(m, {});
  for (std::size_t c = 0; c < ctx.copies.size(); ++c)
    for (int e : ctx.copies[c]) ctx.copies_with[e].push_back(static_cast<int>(c));

  {
    TaskState greedy(ctx);
    for (int e = 0; e < m; ++e)
      if (greedy.can_include(e)) greedy.include(e);
    ctx.greedy_bound = static_cast<std::int64_t>(greedy.chosen.size());
    ctx.greedy_set = greedy.chosen;
  }

  // Root closure: when the disjoint-copy bound already meets the greedy
  // value, the greedy set is optimal and no tree is explored.
  {
    TaskState root(ctx);
    if (m - root.forced_exclusions() <= ctx.greedy_bound) {
      SearchResult result;
      result.n = n;
      result.best_edge_count = ctx.greedy_bound;
      result.nodes_explored = 1;
      GdhBuilder wb(theory, n);
      for (int e : ctx.greedy_set) wb.add_code_unchecked(ctx.candidates[e]);
      result.witness = wb.build();
      const std::uint64_t full = theory.complete_edge_count(n);
      result.density_bound =
          full == 0 ? 0.0
                    : static_cast<double>(result.best_edge_count) /
                          static_cast<double>(full);
      return result;
    }
  }
  if (config.symmetry) build_relabelings(ctx);

  // Independent subtrees split at depth two; every task starts from the same
  // greedy bound, so results and node counts match for any thread count.
  std::uint64_t root_nodes = 1;
  std::vector<Task> tasks;
  const int split = m >= 4 ? 2 : 0;
  {
    TaskState probe(ctx);
    std::function<void(int)> expand = [&](int idx) {
      if (idx == split) {
        Task t;
        for (int e = 0; e < split; ++e)
          t.decisions.emplace_back(e, probe.included[e] != 0);
        tasks.push_back(std::move(t));
        return;
      }
      ++root_nodes;
      if (probe.can_include(idx)) {
        probe.include(idx);
        if (probe.prefix_canonical()) expand(idx + 1);
        probe.undo_include(idx);
      }
      probe.exclude(idx);
      expand(idx + 1);
      probe.undo_exclude(idx);
    };
    expand(0);
  }

  const std::uint64_t slice =
      std::max<std::uint64_t>(1, config.budget / std::max<std::size_t>(
                                                     1, tasks.size()));
  std::vector<TaskState> states;
  states.reserve(tasks.size());
  for (std::size_t i = 0; i < tasks.size(); ++i) states.emplace_back(ctx);
  parallel_for(resolve_threads(config.threads), tasks.size(),
               [&](std::size_t i) {
                 TaskState& st = states[i];
                 st.best = ctx.greedy_bound;
                 st.node_cap = slice;
                 for (auto [e, inc] : tasks[i].decisions) {
                   if (inc)
                     st.include(e);
                   else
                     st.exclude(e);
                 }
                 dfs(st, split);
               });

  SearchResult result;
  result.n = n;
  result.best_edge_count = ctx.greedy_bound;
  std::vector<int> best_set = ctx.greedy_set;
  result.nodes_explored = root_nodes;
  for (const auto& st : states) {
    result.nodes_explored += st.nodes;
    if (st.capped) result.exhaustive = false;
    if (st.improved && st.best > result.best_edge_count) {
      result.best_edge_count = st.best;
      best_set = st.best_set;
    }
  }

  GdhBuilder wb(theory, n);
  for (int e : best_set) wb.add_code_unchecked(ctx.candidates[e]);
  result.witness = wb.build();
  const std::uint64_t full = theory.complete_edge_count(n);
  result.density_bound =
      full == 0 ? 0.0
                : static_cast<double>(result.best_edge_count) /
                      static_cast<double>(full);
  return result;
}

std::vector<std::pair<int, double>> density_bound_sequence(
    const Theory& theory, const Family& family, int n_lo, int n_hi,
    const SearchConfig& config) {
  if (n_lo < theory.arity())
    throw std::invalid_argument("density sequence starts at n >= r");
  std::vector<std::pair<int, double>> out;
  for (int n = n_lo; n <= n_hi; ++n) {
    SearchResult r = extremal_number(theory, n, family, config);
    if (!r.exhaustive)
      throw std::runtime_error("search budget exhausted; density not exact");
    out.emplace_back(n, r.density_bound);
  }
  return out;
}

Gdh langlois_construction(int n) {
  if (n < 3) throw std::invalid_argument("construction needs n >= 3");
  const int heads = n / 3;
  const int bodies = n - heads;  // ceil(2n/3)
  GdhBuilder b(two_to_one_theory(), n);
  for (int b1 = 0; b1 < bodies; ++b1)
    for (int b2 = b1 + 1; b2 < bodies; ++b2)
      for (int h = bodies; h < n; ++h) b.add({b1, b2, h});
  return b.build();
}

Gdh langlois_forbidden() {
  GdhBuilder b(two_to_one_theory(), 5);
  b.add({0, 1, 2});
  b.add({2, 3, 4});
  return b.build();
}

Family restrict_family(const Family& family, int k) {
  if (k < 0) throw std::invalid_argument("vertex cap must be nonnegative");
  Family out(family.theory);
  for (const auto& g : family.members)
    if (g.vertex_count() <= k) out.members.push_back(g);
  return out;
}

}  // namespace gdh
