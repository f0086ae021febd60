#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harper/core.hpp"

namespace harper {

enum class Verdict { NDetected, EPresumed };

/// Displacement-threshold classification of one parameter pair. NDetected is
/// conclusive (a witness orbit moved by >= 1 in each axis); EPresumed only
/// says the budget did not suffice.
struct PixelVerdict {
  Params params;
  Verdict verdict = Verdict::EPresumed;
  double dx_max = 0.0;
  double dy_max = 0.0;
  long iterations_used = 0;
  int seeds_used = 0;
};

struct PixelBudget {
  int n_seeds = 32;
  long n_iters = 100000;
};

/// Iterates low-discrepancy seeds, early-exiting the moment the running
/// maxima satisfy dx_max >= 1 and dy_max >= 1 (threshold exactly 1). The
/// maxima may come from different seeds; both are recorded either way.
PixelVerdict classify_pixel(const Params& p, const PixelBudget& budget, std::uint64_t seed);

/// Same classification with an explicit seed list (used for the mirrored-seed
/// symmetry checks).
PixelVerdict classify_with_seeds(const Params& p, std::span<const Vec2> seeds, long n_iters);

struct ScanSpec {
  double alpha_lo = 0.0, alpha_hi = 1.0;
  double beta_lo = 0.0, beta_hi = 1.0;
  int nx = 1, ny = 1;

  bool valid() const {
    return nx >= 1 && ny >= 1 && alpha_lo <= alpha_hi && beta_lo <= beta_hi;
  }
  /// Pixel centers; row r varies beta, column c varies alpha.
  Params params_at(int c, int r) const {
    return {alpha_lo + (c + 0.5) * (alpha_hi - alpha_lo) / nx,
            beta_lo + (r + 0.5) * (beta_hi - beta_lo) / ny};
  }
};

/// Row-major grid of verdicts: verdicts[r*nx + c] with beta increasing in r.
struct ScanGrid {
  ScanSpec spec;
  std::vector<PixelVerdict> verdicts;
};

/// Data-parallel sweep; per-pixel seeds are derived from the master seed and
/// the pixel indices, so the result is independent of scheduling.
ScanGrid scan(const ScanSpec& spec, const PixelBudget& budget, std::uint64_t master_seed);

struct BetaThresholds {
  double alpha = 0.0;
  double beta_minus_upper = 0.0;  // smallest beta with a verified NDetected
  long iterations_spent = 0;
};

/// Bisects beta against the one-sided displacement test. NDetected at the
/// upper endpoint is required (UpperEndpointNotDiffusive otherwise); the
/// result upper-bounds the diffusion onset in the sense that (alpha, result)
/// was verified diffusive.
BetaThresholds estimate_beta_minus_upper(double alpha, double beta_lo, double beta_hi,
                                         int bisection_steps, const PixelBudget& budget,
                                         std::uint64_t seed);

}  // namespace harper
