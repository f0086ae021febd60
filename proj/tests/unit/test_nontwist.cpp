#include <doctest.h>

#include <cmath>
#include <Eigen/LU>

#include "harper/nontwist.hpp"
#include "test_helpers.hpp"

using namespace harper;
using harper::test::RandomStream;

TEST_CASE("non-twist lift evaluation") {
  CHECK(nontwist_lift({0.0, 0.0}, {0.3, 0.0}) == Vec2{0.3, 0.0});

  const Vec2 v = nontwist_lift({0.5, 0.0}, {0.0, 0.5});
  CHECK(v.x() == doctest::Approx(0.5 - pi<double> * pi<double>).epsilon(1e-12));
  CHECK(v.y() == 0.5);

  RandomStream rng(41);
  for (int i = 0; i < 100; ++i) {
    const Vec2 z = rng.point(-1.0, 1.0);
    CHECK(nontwist_lift({rng.uniform(0.0, 1.0), 0.0}, z).y() == z.y());
  }
}

TEST_CASE("unit period in the first parameter") {
  RandomStream rng(42);
  for (int i = 0; i < 100; ++i) {
    const NontwistParams q{rng.uniform(0.0, 1.0), rng.uniform(0.0, 0.8)};
    const Vec2 z = rng.point(-1.0, 1.0);
    const Vec2 a = nontwist_lift(q, z);
    const Vec2 b = nontwist_lift({q.a + 1.0, q.b}, z);
    CHECK(b.x() - a.x() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(b.y() - a.y()) < 1e-12);
  }
}

TEST_CASE("non-twist map preserves area") {
  RandomStream rng(43);
  for (int i = 0; i < 60; ++i) {
    const NontwistParams q{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1.0)};
    const Vec2 z = rng.point(-0.8, 0.8);
    const Mat2 j = nontwist_jacobian(q, z);
    CHECK(j.determinant() == doctest::Approx(1.0).epsilon(1e-10));
    // The analytic derivative is confirmed by central differences; the
    // quadratic twist makes raw difference quotients noisy, hence the
    // looser matrix tolerance.
    const Mat2 numeric = test::fd_jacobian_rich(
        [&](const Vec2& w) { return nontwist_lift(q, w); }, z, 1e-4);
    CHECK((j - numeric).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("rescaled conjugate of the swapped lift") {
  SUBCASE("nonpositive alpha is rejected") {
    CHECK_THROWS_AS(rescaled_lift({0.0, 0.1}, {0.0, 0.0}), NonpositiveAlpha);
    CHECK_THROWS_AS(rescaled_lift({-1.0, 0.1}, {0.0, 0.0}), NonpositiveAlpha);
  }

  SUBCASE("is a genuine conjugacy") {
    // Short horizons for the kicked case (roundoff grows with the orbit's
    // local expansion); the shear-only case stays exact indefinitely.
    RandomStream rng(44);
    for (int i = 0; i < 50; ++i) {
      const bool shear_only = (i % 2 == 0);
      const Params p{rng.uniform(0.2, 3.0), shear_only ? 0.0 : rng.uniform(-0.5, 0.5)};
      const int n = shear_only ? 50 : 6;
      const double scale = std::sqrt(kappa * p.alpha);
      const Vec2 z = rng.point(-1.0, 1.0);
      Vec2 via_rescaled = z;
      for (int k = 0; k < n; ++k) via_rescaled = rescaled_lift(p, via_rescaled);
      Vec2 w{z.x(), z.y() / scale + 0.25};
      for (int k = 0; k < n; ++k) w = lift_swapped(p, w);
      const Vec2 via_plain{w.x(), scale * (w.y() - 0.25)};
      CHECK((via_rescaled - via_plain).cwiseAbs().maxCoeff() < n * 1e-10);
    }
  }

  SUBCASE("kick splits off as a rescaled vertical shear") {
    RandomStream rng(45);
    for (int i = 0; i < 1000; ++i) {
      const Params p{rng.uniform(0.2, 3.0), rng.uniform(-0.5, 0.5)};
      const Vec2 z = rng.point(-1.0, 1.0);
      const Vec2 full = rescaled_lift(p, z);
      const Vec2 shear_only = rescaled_lift({p.alpha, 0.0}, z);
      const ParamsT<double> rescaled_kick{0.0, std::sqrt(kappa * p.alpha) * p.beta};
      const Vec2 split = shear_v(rescaled_kick, shear_only);
      CHECK((full - split).cwiseAbs().maxCoeff() < 1e-10);
    }
  }
}

TEST_CASE("rescaling convergence toward the quadratic limit") {
  const int ns[] = {4, 16, 64};
  const auto distances = rescaling_convergence(0.3, ns, 48);
  REQUIRE(distances.size() == 3);
  CHECK(distances[0] > 0.0);
  CHECK(distances[1] > 0.0);
  CHECK(distances[2] > 0.0);
  CHECK(distances[0] > distances[1]);
  CHECK(distances[1] > distances[2]);
  // The deviation is fourth-order in the annulus height: about 1/(24 alpha).
  CHECK(distances[2] < 1e-3);

  const int edge[] = {0};
  const auto at_zero = rescaling_convergence(0.0, edge, 16);
  CHECK(std::isfinite(at_zero[0]));
}

TEST_CASE("non-twist unbounded-orbit classification") {
  const PixelVerdict strong = classify_nontwist_pixel({0.5, 0.9}, {8, 20000}, 42);
  CHECK(strong.verdict == Verdict::NDetected);

  const PixelVerdict integrable = classify_nontwist_pixel({0.5, 0.0}, {8, 5000}, 42);
  CHECK(integrable.verdict == Verdict::EPresumed);
  CHECK(integrable.dy_max == 0.0);
}

TEST_CASE("rescaled strip grids for the periodic-structure experiment") {
  const RescaledSetGrids grids = conjecture_grids(4, 12, 10, {4, 10000}, 42);
  CHECK(grids.harper_grid.verdicts.size() == 120);
  CHECK(grids.nontwist_grid.verdicts.size() == 120);
  CHECK(grids.harper_grid.spec.alpha_lo == 4.0);
  CHECK(grids.harper_grid.spec.alpha_hi == 5.0);
  CHECK(grids.harper_grid.spec.beta_hi == doctest::Approx(0.5));
  CHECK(grids.nontwist_grid.spec.beta_hi == 1.0);

  const RescaledSetGrids next = conjecture_grids(16, 12, 10, {4, 10000}, 42);
  const double symdiff =
      verdict_symmetric_difference(grids.harper_grid, next.harper_grid);
  CHECK(symdiff >= 0.0);
  CHECK(symdiff <= 1.0);

  CHECK_THROWS(verdict_symmetric_difference(grids.harper_grid, ScanGrid{}));
}
