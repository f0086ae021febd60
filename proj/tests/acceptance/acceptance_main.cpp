// Acceptance suite: one checked claim per criterion, printed as a pass/fail
// line with its runtime. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "harper/certify.hpp"
#include "harper/diffusion.hpp"
#include "harper/flows.hpp"
#include "harper/orbit.hpp"
#include "harper/rng.hpp"
#include "harper/rotset.hpp"

using namespace harper;

namespace {

int g_failures = 0;
double g_square_hausdorff = -1.0;  // criterion 4 feeds criterion 5's equality claim

void criterion(int number, const std::string& label, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > time_limit_s) {
    ok = false;
    detail += detail.empty() ? "" : "; ";
    detail += "over time limit";
  }
  std::printf("[%s] criterion %2d: %s (%.2f s%s%s)\n", ok ? "PASS" : "FAIL", number,
              label.c_str(), elapsed, detail.empty() ? "" : " | ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t s) : gen(s) {}
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen);
  }
};

bool symmetry_suite(std::string& detail) {
  Rng rng(101);
  double worst = 0.0;
  const auto g1 = [](const Params& p, const Vec2& z) {
    return shear_h(p, apply_symmetry(Symmetry::S1, z));
  };
  const auto g2 = [](const Params& p, const Vec2& z) {
    return shear_h(p, apply_symmetry(Symmetry::S2, z));
  };
  const auto g3 = [](const Params& p, const Vec2& z) {
    return apply_symmetry(Symmetry::S1, shear_v(p, z));
  };
  const auto g4 = [](const Params& p, const Vec2& z) {
    return apply_symmetry(Symmetry::S2, shear_v(p, z));
  };
  for (int i = 0; i < 10000; ++i) {
    const Params p{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Params minus{-p.alpha, -p.beta};
    const Vec2 z{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
    const auto track = [&](const Vec2& a, const Vec2& b) {
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    };
    // 1. reversibility through the four shear-reflection involutions
    track(lift(p, g1(p, z)), g1(p, lift_inverse(p, z)));
    track(lift(p, g2(p, z)), g2(p, lift_inverse(p, z)));
    track(lift(p, g3(p, z)), g3(p, lift_inverse(p, z)));
    track(lift(p, g4(p, z)), g4(p, lift_inverse(p, z)));
    track(g1(p, g1(p, z)), z);
    track(g2(p, g2(p, z)), z);
    track(g3(p, g3(p, z)), z);
    track(g4(p, g4(p, z)), z);
    // 2. odd symmetry through the origin
    track(lift(p, apply_symmetry(Symmetry::S, z)), -lift(p, z));
    // 3-4. axis reflections flip both parameters
    track(lift(p, apply_symmetry(Symmetry::S1, z)),
          apply_symmetry(Symmetry::S1, lift(minus, z)));
    track(lift(p, apply_symmetry(Symmetry::S2, z)),
          apply_symmetry(Symmetry::S2, lift(minus, z)));
    // 5. diagonal swap
    track(lift(p, apply_symmetry(Symmetry::D, z)),
          apply_symmetry(Symmetry::D, lift_inverse(Params{-p.beta, -p.alpha}, z)));
    // 6. quarter turn
    track(lift(p, apply_symmetry(Symmetry::R, z)),
          apply_symmetry(Symmetry::R, lift_inverse(Params{p.beta, p.alpha}, z)));
    // 7-8. half translations flip one parameter each
    track(lift(p, apply_symmetry(Symmetry::T1, z)),
          apply_symmetry(Symmetry::T1, lift(Params{p.alpha, -p.beta}, z)));
    track(lift(p, apply_symmetry(Symmetry::T2, z)),
          apply_symmetry(Symmetry::T2, lift(Params{-p.alpha, p.beta}, z)));
  }
  detail = "worst error " + std::to_string(worst);
  return worst < 1e-10;
}

bool fixed_point_formulas(std::string& detail) {
  Rng rng(102);
  double worst = 0.0;
  const double pi2 = pi<double> * pi<double>;
  for (int i = 0; i < 100; ++i) {
    const Params p{rng.uniform(0.05, 2.0), rng.uniform(0.05, 2.0)};
    const double ab = p.alpha * p.beta;
    const auto reports = fixed_point_reports(p);

    const double radical = 2.0 * pi<double> * std::sqrt(ab * (pi2 * ab + 1.0));
    const double l1 = 2.0 * pi2 * ab - radical + 1.0;
    const double l2 = 2.0 * pi2 * ab + radical + 1.0;
    for (const int idx : {0, 3}) {  // origin and (1/2,1/2) share the spectrum
      worst = std::max(worst, std::abs(reports[idx].eigenvalues[0].real() - l1) /
                                  (1.0 + std::abs(l1)));
      worst = std::max(worst, std::abs(reports[idx].eigenvalues[1].real() - l2) /
                                  (1.0 + std::abs(l2)));
      worst = std::max(worst, std::abs(reports[idx].eigenvalues[0].imag()));
      worst = std::max(worst, std::abs(reports[idx].eigenvalues[1].imag()));
    }

    const double trace = 2.0 - 4.0 * pi2 * ab;
    const std::complex<double> disc =
        std::sqrt(std::complex<double>(trace * trace - 4.0, 0.0));
    const std::complex<double> m1 = (trace - disc) / 2.0;
    const std::complex<double> m2 = (trace + disc) / 2.0;
    for (const int idx : {1, 2}) {  // (0,1/2) and (1/2,0)
      const auto& ev = reports[idx].eigenvalues;
      const double direct = std::min(std::abs(ev[0] - m1) + std::abs(ev[1] - m2),
                                     std::abs(ev[0] - m2) + std::abs(ev[1] - m1));
      worst = std::max(worst, direct / (1.0 + std::abs(m2)));
    }
  }
  detail = "worst relative error " + std::to_string(worst);
  return worst < 1e-10;
}

bool strong_coupling_block(std::string& detail) {
  const ScanGrid grid = scan({0.5, 1.0, 0.5, 1.0, 8, 8}, {32, 100000}, 42);
  int detected = 0;
  for (const auto& v : grid.verdicts) detected += v.verdict == Verdict::NDetected;
  detail = std::to_string(detected) + "/64 detected";
  return detected == 64;
}

bool unit_square_rotation_set(std::string& detail) {
  const ConvexPolygon poly = approx_rotation_set({1.0, 1.0}, {256, 100000, 7});
  const std::vector<Vec2> corners = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
  g_square_hausdorff = hausdorff_distance(poly, ConvexPolygon::hull_of(corners));
  detail = "hausdorff " + std::to_string(g_square_hausdorff);
  return g_square_hausdorff <= 0.05;
}

bool mode_lock_square(std::string& detail) {
  const ModeLockReport report = verify_mode_lock(ModeLockCase::Square11);
  const CertBound& bound = report.center_certificate.bound;
  detail = "rigorous_bound " + std::to_string(bound.rigorous_bound) + ", approx hausdorff " +
           std::to_string(g_square_hausdorff);
  const bool equality_within_tolerance =
      g_square_hausdorff >= 0.0 && g_square_hausdorff <= 0.05;
  return bound.rigorous_bound < 2.0 && report.verdict && equality_within_tolerance;
}

bool mode_lock_diamond(std::string& detail) {
  const CertBound bound = certified_line_max({0.5, 0.5}, 4, {{1.0, 1.0}, 0.0}, 1e-6, 2.0);
  const double l4 = lipschitz_bound({0.5, 0.5}, 4);
  const ModeLockReport report = verify_mode_lock(ModeLockCase::DiamondHalf);
  detail = "grid_max " + std::to_string(bound.grid_max) + ", rigorous " +
           std::to_string(bound.rigorous_bound) + ", L^4 " + std::to_string(l4);
  return bound.grid_max < 1.95 && bound.rigorous_bound < 2.0 && l4 <= 20000.0 &&
         report.verdict;
}

bool scaling_upper_bound(std::string& detail) {
  const PixelBudget budget{8, 100000};
  for (const double alpha : {4.0, 16.0, 64.0}) {
    const double ref = (8.0 / pi<double>) / std::sqrt(alpha);
    const BetaThresholds found =
        estimate_beta_minus_upper(alpha, 0.0, 1.1 * ref, 12, budget, 42);
    if (found.iterations_spent > 10000000L) {
      detail = "budget exceeded at alpha " + std::to_string(alpha);
      return false;
    }
    const PixelVerdict replay = classify_pixel({alpha, found.beta_minus_upper}, budget, 42);
    if (replay.verdict != Verdict::NDetected) {
      detail = "replay not diffusive at alpha " + std::to_string(alpha);
      return false;
    }
    if (found.beta_minus_upper > ref) {
      detail = "bound exceeded at alpha " + std::to_string(alpha);
      return false;
    }
    detail += "a=" + std::to_string(alpha) + ": " + std::to_string(found.beta_minus_upper) +
              " <= " + std::to_string(ref) + "  ";
  }
  return true;
}

bool euler_orders(std::string& detail) {
  const std::vector<double> alphas = {0.02, 0.01, 0.005, 0.0025};
  const ConvergenceReport report = euler_convergence_study(0.5, alphas, 32);
  detail = "c0 order " + std::to_string(report.fitted_order_c0) + ", c1 order " +
           std::to_string(report.fitted_order_c1);
  return report.fitted_order_c0 >= 0.8 && report.fitted_order_c0 <= 1.2 &&
         report.fitted_order_c1 >= 0.7 && report.fitted_order_c1 <= 1.3;
}

bool variation_inequality(std::string& detail) {
  double worst_margin = 1e300;
  for (const double delta : {0.05, 0.1, 0.2, 0.4}) {
    const double value = min_variation(1.0, delta, 1000);
    const double bound = pi<double> * delta * delta;
    worst_margin = std::min(worst_margin, value / bound);
    if (value < bound) {
      detail = "violated at delta " + std::to_string(delta);
      return false;
    }
  }
  detail = "smallest ratio to the bound " + std::to_string(worst_margin);
  return true;
}

bool threshold_soundness(std::string& detail) {
  R2Sequence seq(0xace5);
  int detected = 0;
  for (int i = 0; i < 100; ++i) {
    const Vec2 u = seq.next();
    const Params p{1.5 * u.x(), 1.5 * u.y()};
    const PixelBudget budget{8, 20000};
    const PixelVerdict v = classify_pixel(p, budget, 5000 + i);
    if (v.verdict != Verdict::NDetected) continue;
    ++detected;
    const PixelVerdict replay = classify_pixel(p, budget, 5000 + i);
    if (replay.verdict != Verdict::NDetected || replay.dx_max < 1.0 || replay.dy_max < 1.0) {
      detail = "false positive at alpha " + std::to_string(p.alpha) + ", beta " +
               std::to_string(p.beta);
      return false;
    }
  }
  detail = std::to_string(detected) + "/100 detections, all replayed";
  return true;
}

bool cusp_qualitative(std::string& detail) {
  const std::vector<double> shallow = {0.02, 0.04, 0.06, 0.08, 0.10};
  const PixelBudget budget{32, 100000};
  for (const auto& row : ray_onset_study(0.2, shallow, budget, 42)) {
    if (row.verdict != Verdict::EPresumed) {
      detail = "unexpected detection on the shallow ray at alpha " + std::to_string(row.alpha);
      return false;
    }
  }
  const std::vector<double> diagonal = {0.45};
  const auto rows = ray_onset_study(1.0, diagonal, budget, 42);
  detail = "shallow ray all bounded; diagonal at 0.45 " +
           std::string(rows[0].verdict == Verdict::NDetected ? "detected" : "missed");
  return rows[0].verdict == Verdict::NDetected;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");

  criterion(1, "symmetry identities (1e4 random pairs, 8 families, < 1e-10)", 10.0,
            symmetry_suite);
  criterion(2, "fixed-point eigenvalue closed forms (100 random pairs, < 1e-10 rel)", 1.0,
            fixed_point_formulas);
  criterion(3, "8x8 scan of [0.5,1]^2 fully diffusive at 32 x 1e5", 60.0,
            strong_coupling_block);
  criterion(4, "rotation set at (1,1) within 0.05 of the unit square", 120.0,
            unit_square_rotation_set);
  criterion(5, "certified vertical confinement at (1,1) and square equality", 60.0,
            mode_lock_square);
  criterion(6, "certified antidiagonal maximum at (1/2,1/2): 1.95 / 2.0 / 20000", 120.0,
            mode_lock_diamond);
  criterion(7, "diffusion onset below (8/pi)/sqrt(alpha) for alpha in {4,16,64}", 600.0,
            scaling_upper_bound);
  criterion(8, "euler convergence orders: C0 in [0.8,1.2], C1 in [0.7,1.3]", 120.0,
            euler_orders);
  criterion(9, "minimal sine variation above pi*delta^2", 10.0, variation_inequality);
  criterion(10, "no false positives over a 100-pixel random sample", 60.0,
            threshold_soundness);
  criterion(11, "shallow ray bounded, diagonal detected at 0.45", 120.0, cusp_qualitative);

  std::printf(
      "[INFO] criterion 12: full-resolution parameter figures (4e6 iterations/pixel), exact "
      "onset curves and the rescaled-set limit are declared outside desk scale; the property "
      "suites above and the experiment subcommands cover them without pass/fail targets.\n");

  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
