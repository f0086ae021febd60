#include "harper/nontwist.hpp"

#include <cmath>
#include <stdexcept>

#include "harper/parallel.hpp"
#include "harper/rng.hpp"

namespace harper {

Vec2 nontwist_lift(const NontwistParams& q, const Vec2& z) {
  const double x = z.x() + q.a - kappa * z.y() * z.y();
  return {x, z.y() + q.b * sin2pi(x)};
}

Mat2 nontwist_jacobian(const NontwistParams& q, const Vec2& z) {
  const double x = z.x() + q.a - kappa * z.y() * z.y();
  const double kick = two_pi<double> * q.b * cos2pi(x);
  const double twist = -2.0 * kappa * z.y();
  Mat2 d;
  d << 1.0, twist, kick, 1.0 + kick * twist;
  return d;
}

Vec2 rescaled_lift(const Params& p, const Vec2& z) {
  if (!(p.alpha > 0.0)) throw NonpositiveAlpha("rescaled_lift: alpha must be positive");
  const double scale = std::sqrt(kappa * p.alpha);
  const Vec2 w{z.x(), z.y() / scale + 0.25};
  const Vec2 g = lift_swapped(p, w);
  return {g.x(), scale * (g.y() - 0.25)};
}

namespace {

double circle_distance(double x) {
  const double r = reduce_unit(x);
  return std::abs(r);
}

}  // namespace

std::vector<double> rescaling_convergence(double alpha0, std::span<const int> n_list, int grid) {
  if (!(alpha0 >= 0.0 && alpha0 < 1.0)) {
    throw std::invalid_argument("rescaling_convergence: alpha0 must lie in [0, 1)");
  }
  if (grid < 2) throw std::invalid_argument("rescaling_convergence: grid must be >= 2");

  std::vector<double> sup_distances;
  sup_distances.reserve(n_list.size());
  for (const int n : n_list) {
    const double alpha = alpha0 + n;
    const double scale = alpha > 0.0 ? std::sqrt(kappa * alpha) : 0.0;
    double sup = 0.0;
    for (int i = 0; i < grid; ++i) {
      const double x = (i + 0.5) / grid;
      for (int j = 0; j <= grid; ++j) {
        const double y = static_cast<double>(j) / grid;
        // Annulus image of the rescaled shear: x + alpha*cos(2*pi*y/scale).
        const double gx = (alpha > 0.0) ? x + alpha * cos2pi(y / scale) : x;
        // Quadratic limit of the rescaling: x + alpha0 - y^2/2. (The
        // vertical coordinate is untouched by both maps at beta = 0.)
        const double limit_x = x + alpha0 - 0.5 * y * y;
        sup = std::max(sup, circle_distance(gx - limit_x));
      }
    }
    sup_distances.push_back(sup);
  }
  return sup_distances;
}

PixelVerdict classify_nontwist_pixel(const NontwistParams& q, const PixelBudget& budget,
                                     std::uint64_t seed) {
  if (budget.n_seeds < 1 || budget.n_iters < 1) {
    throw std::invalid_argument("classify_nontwist_pixel: budget must be positive");
  }
  PixelVerdict out;
  out.params = {q.a, q.b};
  R2Sequence seq(seed);
  for (int s = 0; s < budget.n_seeds; ++s) {
    ++out.seeds_used;
    const Vec2 seed_pt = seq.next();
    Vec2 z = seed_pt;
    for (long k = 0; k < budget.n_iters; ++k) {
      z = nontwist_lift(q, z);
      ++out.iterations_used;
      out.dx_max = std::max(out.dx_max, std::abs(z.x() - seed_pt.x()));
      out.dy_max = std::max(out.dy_max, std::abs(z.y() - seed_pt.y()));
      if (out.dy_max >= 1.0) {
        out.verdict = Verdict::NDetected;
        return out;
      }
    }
  }
  return out;
}

RescaledSetGrids conjecture_grids(int n, int nx, int ny, const PixelBudget& budget,
                                  std::uint64_t master_seed) {
  if (n < 1) throw std::invalid_argument("conjecture_grids: n must be >= 1");
  if (nx < 1 || ny < 1) throw std::invalid_argument("conjecture_grids: empty grid");

  RescaledSetGrids cmp;
  cmp.n = n;

  // The strip [n, n+1] x [0, 1/sqrt(n)] maps onto [0,1]^2 under
  // (alpha, beta) -> (alpha - n, sqrt(n)*beta).
  ScanSpec strip;
  strip.alpha_lo = n;
  strip.alpha_hi = n + 1.0;
  strip.beta_lo = 0.0;
  strip.beta_hi = 1.0 / std::sqrt(static_cast<double>(n));
  strip.nx = nx;
  strip.ny = ny;
  cmp.harper_grid = scan(strip, budget, master_seed);

  cmp.nontwist_grid.spec = {0.0, 1.0, 0.0, 1.0, nx, ny};
  cmp.nontwist_grid.verdicts.resize(static_cast<std::size_t>(nx) * ny);
  parallel_for(cmp.nontwist_grid.verdicts.size(), [&](std::size_t idx) {
    const int r = static_cast<int>(idx) / nx;
    const int c = static_cast<int>(idx) % nx;
    const Params at = cmp.nontwist_grid.spec.params_at(c, r);
    cmp.nontwist_grid.verdicts[idx] = classify_nontwist_pixel(
        {at.alpha, at.beta}, budget, pixel_seed(master_seed ^ 0x6e740000u, c, r));
  });

  return cmp;
}

double verdict_symmetric_difference(const ScanGrid& a, const ScanGrid& b) {
  if (a.verdicts.size() != b.verdicts.size() || a.verdicts.empty()) {
    throw std::invalid_argument("verdict_symmetric_difference: resolution mismatch");
  }
  std::size_t disagreements = 0;
  for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
    if (a.verdicts[i].verdict != b.verdicts[i].verdict) ++disagreements;
  }
  return static_cast<double>(disagreements) / static_cast<double>(a.verdicts.size());
}

}  // namespace harper
