#include "gdh/jump.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gdh/util.hpp"

namespace gdh {

std::optional<DegenerateWitness> degenerate_witness(const Family& family,
                                                    int t_cap) {
  const int r = family.theory.arity();
  GdhBuilder sb(family.theory, r);
  std::vector<int> edge(r);
  for (int i = 0; i < r; ++i) edge[i] = i;
  sb.add(edge);
  const Gdh single = sb.build();

  for (std::size_t idx = 0; idx < family.members.size(); ++idx) {
    const Gdh& member = family.members[idx];
    if (member.edge_count() == 0) continue;
    int t = member.vertex_count();
    if (t_cap > 0) t = std::min(t, t_cap);
    if (t < 1) continue;
    const Gdh target = blowup(single, std::vector<int>(r, t));
    auto map = find_embedding(member, target);
    if (!map) continue;
    // Report only the clones actually used, one part per edge position.
    std::vector<int> used(r, 0);
    for (int image : *map) ++used[image / t];
    DegenerateWitness w;
    w.member_index = static_cast<int>(idx);
    w.blowup_vector.resize(r);
    for (int i = 0; i < r; ++i) w.blowup_vector[i] = std::max(used[i], 1);
    return w;
  }
  return std::nullopt;
}

JumpCertificate certify_jump(double alpha, const Family& family, int n_used,
                             const SearchConfig& search_config,
                             const OptimizerConfig& optimizer_config) {
  if (family.members.empty())
    throw std::invalid_argument("jump certificate needs a nonempty family");
  JumpCertificate cert;
  cert.alpha = alpha;
  cert.family = family;
  cert.n_used = n_used;

  const SearchResult found =
      extremal_number(family.theory, n_used, family, search_config);
  cert.pi_upper = found.density_bound;
  if (!found.exhaustive) {
    cert.valid = false;
    cert.inconclusive = true;
    cert.reason = "search budget exhausted; no density upper bound";
    return cert;
  }

  for (const auto& member : family.members)
    cert.member_blowup_lbs.push_back(
        blowup_density(member, optimizer_config).value);

  if (cert.pi_upper > alpha) {
    cert.valid = false;
    cert.reason = "extremal density bound exceeds alpha";
    return cert;
  }
  for (double lb : cert.member_blowup_lbs) {
    if (!(lb > alpha)) {
      cert.valid = false;
      cert.reason = "member blowup-density lower bound does not exceed alpha";
      return cert;
    }
  }
  cert.valid = true;
  return cert;
}

namespace {

std::int64_t int_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> nonjump_catalog_fractions(
    const Theory& theory) {
  const int r = theory.arity();
  if (r == 2)
    throw std::invalid_argument(
        "no nonjump entries at r = 2: every density in [0,1) is a jump");
  if (r < 2) throw std::invalid_argument("catalog needs r >= 3");
  const std::int64_t m = theory.order();
  const std::int64_t kmax =
      static_cast<std::int64_t>(factorial(r)) / m;
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    std::int64_t num = 5 * m * k;
    std::int64_t den = 2 * int_pow(r, r);
    const std::int64_t g = std::gcd(num, den);
    out.emplace_back(num / g, den / g);
  }
  return out;
}

std::vector<double> nonjump_catalog(const Theory& theory) {
  std::vector<double> out;
  for (auto [num, den] : nonjump_catalog_fractions(theory))
    out.push_back(static_cast<double>(num) / static_cast<double>(den));
  return out;
}

double jump_interval_sup(const Theory& theory) {
  const int r = theory.arity();
  return static_cast<double>(theory.order()) /
         static_cast<double>(int_pow(r, r));
}

double supersaturation_constant(double epsilon, int l, int k) {
  if (!(epsilon > 0.0) || epsilon > 1.0)
    throw std::invalid_argument("epsilon must lie in (0, 1]");
  if (k < 1 || l < k) throw std::invalid_argument("need l >= k >= 1");
  return epsilon / 2.0 / static_cast<double>(binomial(l, k));
}

GapClass gap_check(double alpha, double c, double pi_upper) {
  if (pi_upper <= alpha) return GapClass::AtMostAlpha;
  if (pi_upper >= alpha + c) return GapClass::AtLeastAlphaPlusC;
  return GapClass::BoundInGap;
}

std::string_view gap_label(GapClass g) {
  switch (g) {
    case GapClass::AtMostAlpha:
      return "<= alpha";
    case GapClass::AtLeastAlphaPlusC:
      return ">= alpha + c";
    case GapClass::BoundInGap:
      return "bound in gap (inconclusive; only an exact density here refutes "
             "the jump pair)";
  }
  return "";
}

}  // namespace gdh
