#include "harper/diffusion.hpp"

#include <cmath>
#include <algorithm>
#include <stdexcept>

#include "harper/parallel.hpp"
#include "harper/rng.hpp"

namespace harper {

PixelVerdict classify_with_seeds(const Params& p, std::span<const Vec2> seeds, long n_iters) {
  PixelVerdict out;
  out.params = p;
  for (const Vec2& seed : seeds) {
    ++out.seeds_used;
    Vec2 z = seed;
    for (long k = 0; k < n_iters; ++k) {
      z = lift(p, z);
      ++out.iterations_used;
      out.dx_max = std::max(out.dx_max, std::abs(z.x() - seed.x()));
      out.dy_max = std::max(out.dy_max, std::abs(z.y() - seed.y()));
      if (out.dx_max >= 1.0 && out.dy_max >= 1.0) {
        out.verdict = Verdict::NDetected;
        return out;
      }
    }
  }
  return out;
}

PixelVerdict classify_pixel(const Params& p, const PixelBudget& budget, std::uint64_t seed) {
  if (budget.n_seeds < 1 || budget.n_iters < 1) {
    throw std::invalid_argument("classify_pixel: budget must be positive");
  }
  std::vector<Vec2> seeds;
  seeds.reserve(budget.n_seeds);
  R2Sequence seq(seed);
  for (int i = 0; i < budget.n_seeds; ++i) seeds.push_back(seq.next());
  return classify_with_seeds(p, seeds, budget.n_iters);
}

ScanGrid scan(const ScanSpec& spec, const PixelBudget& budget, std::uint64_t master_seed) {
  if (!spec.valid()) throw std::invalid_argument("scan: invalid grid spec");
  ScanGrid grid;
  grid.spec = spec;
  grid.verdicts.resize(static_cast<std::size_t>(spec.nx) * spec.ny);
  parallel_for(grid.verdicts.size(), [&](std::size_t idx) {
    const int r = static_cast<int>(idx) / spec.nx;
    const int c = static_cast<int>(idx) % spec.nx;
    grid.verdicts[idx] =
        classify_pixel(spec.params_at(c, r), budget, pixel_seed(master_seed, c, r));
  });
  return grid;
}

BetaThresholds estimate_beta_minus_upper(double alpha, double beta_lo, double beta_hi,
                                         int bisection_steps, const PixelBudget& budget,
                                         std::uint64_t seed) {
  if (alpha < 0.5) {
    throw std::invalid_argument(
        "estimate_beta_minus_upper: alpha must be >= 1/2 (horizontal diffusion is free there)");
  }
  if (!(beta_lo >= 0.0 && beta_lo < beta_hi)) {
    throw std::invalid_argument("estimate_beta_minus_upper: need 0 <= beta_lo < beta_hi");
  }

  BetaThresholds result;
  result.alpha = alpha;

  PixelVerdict top = classify_pixel({alpha, beta_hi}, budget, seed);
  result.iterations_spent += top.iterations_used;
  if (top.verdict != Verdict::NDetected) {
    throw UpperEndpointNotDiffusive("estimate_beta_minus_upper: no detection at beta_hi");
  }

  // Invariant: hi is always verified NDetected; lo is inconclusive.
  double lo = beta_lo, hi = beta_hi;
  for (int step = 0; step < bisection_steps; ++step) {
    const double mid = 0.5 * (lo + hi);
    const PixelVerdict v = classify_pixel({alpha, mid}, budget, seed);
    result.iterations_spent += v.iterations_used;
    if (v.verdict == Verdict::NDetected) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.beta_minus_upper = hi;
  return result;
}

}  // namespace harper
