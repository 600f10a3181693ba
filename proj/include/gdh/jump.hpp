#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdh/gdh.hpp"
#include "gdh/lagrangian.hpp"
#include "gdh/search.hpp"

namespace gdh {

struct DegenerateWitness {
  int member_index = -1;
  std::vector<int> blowup_vector;  // length r, entries >= 1
};

// Searches each member for an embedding into the (t,...,t)-blowup of a single
// edge, t = min(|V_F|, t_cap); t_cap <= 0 means no cap. A witness certifies
// that the family's Turan density is zero; none (with t_cap uncapped) means it
// is at least m/r^r.
std::optional<DegenerateWitness> degenerate_witness(const Family& family,
                                                    int t_cap = 0);

struct JumpCertificate {
  double alpha = 0.0;
  Family family;
  int n_used = 0;
  double pi_upper = 1.0;  // exhaustive extremal density at n_used
  std::vector<double> member_blowup_lbs;
  bool valid = false;
  bool inconclusive = false;  // search budget exhausted
  std::string reason;
};

// Valid when the exhaustive extremal density at n_used is at most alpha and
// every member's blowup-density lower bound exceeds alpha.
JumpCertificate certify_jump(double alpha, const Family& family, int n_used,
                             const SearchConfig& search_config = {},
                             const OptimizerConfig& optimizer_config = {});

// The values 5mk/(2 r^r) for k = 1..r!/m. Requires r >= 3; for r = 2 every
// density in [0,1) is a jump and there are no entries.
std::vector<double> nonjump_catalog(const Theory& theory);
std::vector<std::pair<std::int64_t, std::int64_t>> nonjump_catalog_fractions(
    const Theory& theory);

// Every alpha in [0, m/r^r) is a jump; returns the right endpoint.
double jump_interval_sup(const Theory& theory);

// (epsilon/2) / C(l, k); requires 0 < epsilon <= 1 and l >= k >= 1.
double supersaturation_constant(double epsilon, int l, int k);

enum class GapClass { AtMostAlpha, AtLeastAlphaPlusC, BoundInGap };

// Classifies a density bound against the pair (alpha, alpha + c). A bound
// inside the open gap is inconclusive on its own; only an exact Turan density
// there refutes the jump pair.
GapClass gap_check(double alpha, double c, double pi_upper);
std::string_view gap_label(GapClass g);

}  // namespace gdh
