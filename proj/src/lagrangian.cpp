#include "gdh/lagrangian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "gdh/util.hpp"

namespace gdh {

EdgePoly edge_polynomial(const Gdh& g) {
  if (g.vertex_count() > 64)
    throw std::invalid_argument(
        "edge polynomial supports at most 64 vertices");
  std::map<std::uint64_t, int> terms;
  for (const auto& t : g.edges()) {
    std::uint64_t mask = 0;
    for (int v : t) mask |= 1ull << v;
    ++terms[mask];
  }
  EdgePoly p;
  p.n = g.vertex_count();
  p.degree = g.theory().arity();
  p.masks.reserve(terms.size());
  p.coeffs.reserve(terms.size());
  for (const auto& [mask, c] : terms) {
    p.masks.push_back(mask);
    p.coeffs.push_back(c);
  }
  return p;
}

double eval_poly(const EdgePoly& p, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p.n)
    throw std::invalid_argument("eval: weight length mismatch");
  double total = 0.0;
  for (std::size_t k = 0; k < p.masks.size(); ++k) {
    double prod = p.coeffs[k];
    std::uint64_t m = p.masks[k];
    while (m) {
      prod *= x[std::countr_zero(m)];
      m &= m - 1;
    }
    total += prod;
  }
  return total;
}

void poly_gradient(const EdgePoly& p, std::span<const double> x,
                   std::span<double> grad) {
  if (static_cast<int>(x.size()) != p.n ||
      static_cast<int>(grad.size()) != p.n)
    throw std::invalid_argument("gradient: length mismatch");
  std::fill(grad.begin(), grad.end(), 0.0);
  int vars[64];
  for (std::size_t k = 0; k < p.masks.size(); ++k) {
    int cnt = 0;
    std::uint64_t m = p.masks[k];
    while (m) {
      vars[cnt++] = std::countr_zero(m);
      m &= m - 1;
    }
    for (int i = 0; i < cnt; ++i) {
      double prod = p.coeffs[k];
      for (int j = 0; j < cnt; ++j)
        if (j != i) prod *= x[vars[j]];
      grad[vars[i]] += prod;
    }
  }
}

void project_to_simplex(std::vector<double>& v) {
  const int n = static_cast<int>(v.size());
  if (n == 0) return;
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double css = 0.0, tau = 0.0;
  for (int i = 0; i < n; ++i) {
    css += u[i];
    const double t = (css - 1.0) / (i + 1);
    if (u[i] - t > 0.0) tau = t;
  }
  for (double& x : v) x = std::max(x - tau, 0.0);
}

Gdh blowup(const Gdh& g, const std::vector<int>& parts) {
  if (static_cast<int>(parts.size()) != g.vertex_count())
    throw std::invalid_argument("blowup: parts length must equal vertex count");
  for (int t : parts)
    if (t < 1) throw std::invalid_argument("blowup: part sizes must be >= 1");
  std::vector<int> offset(parts.size() + 1, 0);
  for (std::size_t i = 0; i < parts.size(); ++i)
    offset[i + 1] = offset[i] + parts[i];
  const int total = offset.back();

  GdhBuilder b(g.theory(), total);
  const int r = g.theory().arity();
  std::vector<int> choice(r), image(r);
  for (const auto& t : g.edges()) {
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      for (int i = 0; i < r; ++i) image[i] = offset[t[i]] + choice[i];
      b.add(image);
      int pos = r - 1;
      while (pos >= 0 && choice[pos] + 1 == parts[t[pos]]) {
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++choice[pos];
    }
  }
  return b.build();
}

namespace {

double feasibility_violation(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return std::abs(s - 1.0);
}

struct AscendOutcome {
  double value = 0.0;
  std::vector<double> x;
  std::uint64_t iters = 0;
  double violation = 0.0;
};

// Projected gradient ascent of m*p from one start, with backtracking on the
// step and a doubling warm restart. Monotone in the objective.
AscendOutcome ascend(const EdgePoly& p, double m, std::vector<double> x,
                     const OptimizerConfig& cfg) {
  AscendOutcome out;
  project_to_simplex(x);
  out.violation = feasibility_violation(x);
  double f = m * eval_poly(p, x);
  std::vector<double> g(p.n), y(p.n);

  auto climb = [&](std::uint64_t iter_budget) {
    double eta = 1.0;
    for (std::uint64_t it = 0; it < iter_budget; ++it) {
      poly_gradient(p, x, g);
      bool accepted = false;
      double move = 0.0;
      while (eta >= 1e-14) {
        for (int i = 0; i < p.n; ++i) y[i] = x[i] + eta * m * g[i];
        project_to_simplex(y);
        const double fy = m * eval_poly(p, y);
        if (fy > f) {
          move = 0.0;
          for (int i = 0; i < p.n; ++i)
            move = std::max(move, std::abs(y[i] - x[i]));
          x.swap(y);
          f = fy;
          out.violation = std::max(out.violation, feasibility_violation(x));
          eta = std::min(eta * 2.0, 1e6);
          accepted = true;
          break;
        }
        eta *= 0.5;
      }
      ++out.iters;
      if (!accepted || move < cfg.move_tol) break;
    }
  };

  climb(static_cast<std::uint64_t>(cfg.max_iters));

  // Drop negligible weights and polish on the smaller support.
  bool dropped = false;
  for (double& v : x)
    if (v > 0.0 && v < cfg.support_drop) {
      v = 0.0;
      dropped = true;
    }
  if (dropped) {
    project_to_simplex(x);
    out.violation = std::max(out.violation, feasibility_violation(x));
    f = m * eval_poly(p, x);
    climb(static_cast<std::uint64_t>(cfg.max_iters));
  }

  out.value = f;
  out.x = std::move(x);
  return out;
}

std::vector<double> dirichlet_point(std::mt19937_64& rng, int n) {
  std::vector<double> x(n);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    // 53-bit uniform in (0, 1]; exponential via -log.
    const double u =
        (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
    x[i] = -std::log(u);
    sum += x[i];
  }
  for (double& v : x) v /= sum;
  return x;
}

}  // namespace

LagrangianResult blowup_density(const Gdh& g, OptimizerConfig cfg) {
  const int n = g.vertex_count();
  LagrangianResult res;
  res.argmax.assign(n, n > 0 ? 1.0 / n : 0.0);
  if (g.edge_count() == 0) return res;

  const EdgePoly p = edge_polynomial(g);
  const double m = static_cast<double>(g.theory().order());

  std::vector<std::vector<double>> starts;
  starts.reserve(static_cast<std::size_t>(std::max(cfg.starts, 1)) + 5);
  starts.emplace_back(n, 1.0 / n);
  std::mt19937_64 rng(cfg.seed);
  for (int s = 1; s < cfg.starts; ++s) starts.push_back(dirichlet_point(rng, n));

  if (cfg.support_scan && n <= 12) {
    // Probe every support at its uniform point; the best few become extra
    // polish starts.
    std::vector<std::pair<double, std::uint64_t>> best_supports;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
      const int k = std::popcount(mask);
      std::vector<double> x(n, 0.0);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) x[i] = 1.0 / k;
      best_supports.emplace_back(-m * eval_poly(p, x), mask);
    }
    std::sort(best_supports.begin(), best_supports.end());
    const std::size_t keep = std::min<std::size_t>(5, best_supports.size());
    for (std::size_t i = 0; i < keep; ++i) {
      const std::uint64_t mask = best_supports[i].second;
      const int k = std::popcount(mask);
      std::vector<double> x(n, 0.0);
      for (int j = 0; j < n; ++j)
        if (mask >> j & 1) x[j] = 1.0 / k;
      starts.push_back(std::move(x));
    }
  }

  std::vector<AscendOutcome> outcomes(starts.size());
  parallel_for(resolve_threads(cfg.threads), starts.size(),
               [&](std::size_t i) { outcomes[i] = ascend(p, m, starts[i], cfg); });

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i)
    if (outcomes[i].value > outcomes[best].value) best = i;

  res.argmax = outcomes[best].x;
  res.value = m * eval_poly(p, res.argmax);
  res.starts_used = static_cast<int>(starts.size());
  for (const auto& o : outcomes) {
    res.iterations += o.iters;
    res.max_simplex_violation =
        std::max(res.max_simplex_violation, o.violation);
  }
  std::vector<double> values;
  values.reserve(outcomes.size());
  for (const auto& o : outcomes) values.push_back(o.value);
  std::sort(values.begin(), values.end(), std::greater<>());
  const std::size_t last = std::min<std::size_t>(9, values.size() - 1);
  res.converged = values.front() - values[last] <= cfg.agree_tol;
  return res;
}

double uniform_lower_bound(const Gdh& g) {
  const int n = g.vertex_count();
  if (n == 0 || g.edge_count() == 0) return 0.0;
  const EdgePoly p = edge_polynomial(g);
  std::vector<double> x(n, 1.0 / n);
  return static_cast<double>(g.theory().order()) * eval_poly(p, x);
}

namespace {

using boost::multiprecision::cpp_int;

std::pair<cpp_int, cpp_int> sequence_fraction(const Theory& theory, int t) {
  if (t < 1) throw std::invalid_argument("blowup sequence needs t >= 1");
  const int r = theory.arity();
  cpp_int num = theory.order();
  for (int i = 0; i < r; ++i) num *= t;
  cpp_int den = 1;
  for (int i = 0; i < r; ++i) den *= static_cast<std::int64_t>(t) * r - i;
  const cpp_int g = boost::multiprecision::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

double blowup_density_sequence(const Theory& theory, int t) {
  auto [num, den] = sequence_fraction(theory, t);
  return num.convert_to<double>() / den.convert_to<double>();
}

std::pair<std::string, std::string> blowup_density_sequence_fraction(
    const Theory& theory, int t) {
  auto [num, den] = sequence_fraction(theory, t);
  return {num.str(), den.str()};
}

}  // namespace gdh
