#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdh/gdh.hpp"

namespace gdh {

// Multilinear edge polynomial: sum over r-subsets R of e_R * prod_{i in R} x_i.
// Subsets are stored as bitmasks, so the underlying graph may have at most 64
// vertices.
struct EdgePoly {
  int n = 0;
  int degree = 0;
  std::vector<std::uint64_t> masks;  // sorted
  std::vector<int> coeffs;           // e_R >= 1
};

EdgePoly edge_polynomial(const Gdh& g);

double eval_poly(const EdgePoly& p, std::span<const double> x);
void poly_gradient(const EdgePoly& p, std::span<const double> x,
                   std::span<double> grad);

// Euclidean projection onto {x >= 0, sum x = 1}.
void project_to_simplex(std::vector<double>& v);

// Vertex i replaced by parts[i] clones, with all induced edges.
Gdh blowup(const Gdh& g, const std::vector<int>& parts);

struct OptimizerConfig {
  int starts = 100;            // uniform start + Dirichlet(1) random starts
  std::uint64_t seed = 1;
  int threads = 0;             // <= 0: machine parallelism
  int max_iters = 100000;      // per start
  double move_tol = 1e-12;     // stop when the iterate moves less than this
  double agree_tol = 1e-9;     // top-10 start agreement for the converged flag
  double support_drop = 1e-10; // weights below this are zeroed before polish
  bool support_scan = true;    // uniform-on-support probing for n <= 12
};

struct LagrangianResult {
  double value = 0.0;          // best found m * p(x); a lower bound on b(G)
  std::vector<double> argmax;
  int starts_used = 0;
  bool converged = true;
  double max_simplex_violation = 0.0;
  std::uint64_t iterations = 0;
};

// Multi-start projected gradient ascent of m * p_G over the simplex. Starts
// are generated up front from the seed; the outcome is identical for any
// thread count.
LagrangianResult blowup_density(const Gdh& g, OptimizerConfig config = {});

// m * p_G(1/n, ..., 1/n).
double uniform_lower_bound(const Gdh& g);

// Edge density of the (t,...,t)-blowup of a single edge:
// m * t^r * (tr-r)!/(tr)!, evaluated in exact integer arithmetic.
double blowup_density_sequence(const Theory& theory, int t);
// The same value as a reduced fraction, decimal strings {num, den}.
std::pair<std::string, std::string> blowup_density_sequence_fraction(
    const Theory& theory, int t);

}  // namespace gdh
