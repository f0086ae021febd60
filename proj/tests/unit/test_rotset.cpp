#include <doctest.h>

#include <vector>

#include "harper/rotset.hpp"

using namespace harper;

namespace {

ConvexPolygon square(double half) {
  const std::vector<Vec2> corners = {
      {half, -half}, {half, half}, {-half, half}, {-half, -half}};
  return ConvexPolygon::hull_of(corners);
}

ConvexPolygon diamond(double radius) {
  const std::vector<Vec2> corners = {{radius, 0}, {0, radius}, {-radius, 0}, {0, -radius}};
  return ConvexPolygon::hull_of(corners);
}

}  // namespace

TEST_CASE("rotation set approximations at reference parameters") {
  SUBCASE("unit parameters lock the unit square") {
    const ConvexPolygon poly = approx_rotation_set({1.0, 1.0}, {64, 20000, 7});
    CHECK(hausdorff_distance(poly, square(1.0)) < 0.05);
    CHECK(classify_shape(poly, 1e-3) == SetShape::FullDim);
  }

  SUBCASE("zero parameters give the origin") {
    const ConvexPolygon poly = approx_rotation_set({0.0, 0.0}, {16, 500, 7});
    CHECK(classify_shape(poly, 1e-3) == SetShape::Origin);
    CHECK(poly.distance_to({0.0, 0.0}) < 1e-12);
  }

  SUBCASE("pure vertical kick gives the vertical segment") {
    const ConvexPolygon poly = approx_rotation_set({0.0, 0.7}, {128, 20000, 7});
    const std::vector<Vec2> seg = {{0.0, -0.7}, {0.0, 0.7}};
    CHECK(hausdorff_distance(poly, ConvexPolygon::hull_of(seg)) < 0.02);
    CHECK(classify_shape(poly, 1e-3) == SetShape::VerticalSegment);
  }
}

TEST_CASE("approximation invariants") {
  SUBCASE("hull contains the origin and respects the axis symmetries") {
    for (const Params p : {Params{0.8, 0.6}, Params{1.2, 0.4}}) {
      const ConvexPolygon poly = approx_rotation_set(p, {64, 10000, 5});
      CHECK(poly.contains({0.0, 0.0}, 1e-12));
      for (const auto& v : poly.vertices()) {
        CHECK(poly.distance_to({-v.x(), v.y()}) < 1e-9);
        CHECK(poly.distance_to({v.x(), -v.y()}) < 1e-9);
      }
    }
  }

  SUBCASE("diagonal parameters add the quarter-turn symmetry") {
    const ConvexPolygon poly = approx_rotation_set({0.7, 0.7}, {64, 10000, 5});
    for (const auto& v : poly.vertices()) {
      CHECK(poly.distance_to({-v.y(), v.x()}) < 1e-9);
    }
  }

  SUBCASE("a-priori sandwich for amplitudes above 1/2") {
    const Params p{0.6, 0.8};
    const ConvexPolygon poly = approx_rotation_set(p, {64, 10000, 5});
    // Contains the half diamond...
    const ConvexPolygon half_diamond = diamond(0.5);
    for (const auto& corner : half_diamond.vertices()) {
      CHECK(poly.distance_to(corner) < 1e-9);
    }
    // ...and sits inside the per-step bound box.
    for (const auto& v : poly.vertices()) {
      CHECK(std::abs(v.x()) <= p.alpha + 1e-9);
      CHECK(std::abs(v.y()) <= p.beta + 1e-9);
    }
  }

  SUBCASE("hull at integer diagonal parameters equals the bound box") {
    const ConvexPolygon poly = approx_rotation_set({2.0, 2.0}, {32, 5000, 5});
    CHECK(hausdorff_distance(poly, square(2.0)) < 1e-9);
  }

  SUBCASE("doubling the iterate budget never shrinks the hull materially") {
    // Sampled where an exact containment argument pins both hulls.
    for (const Params p : {Params{1.0, 1.0}, Params{2.0, 2.0}, Params{0.0, 0.7}}) {
      const long n = 5000;
      const ConvexPolygon coarse = approx_rotation_set(p, {48, n, 9});
      const ConvexPolygon fine = approx_rotation_set(p, {48, 2 * n, 9});
      for (const auto& v : coarse.vertices()) {
        CHECK(fine.distance_to(v) <= 5.0 / n);
      }
    }
  }
}

TEST_CASE("continuity probe") {
  SUBCASE("zero radius is exactly zero") {
    CHECK(continuity_probe({1.0, 1.0}, 0.0, 4, {16, 2000, 3}) == 0.0);
  }

  SUBCASE("deterministic in the seed") {
    const double a = continuity_probe({0.9, 0.9}, 1e-3, 4, {16, 2000, 3});
    const double b = continuity_probe({0.9, 0.9}, 1e-3, 4, {16, 2000, 3});
    CHECK(a == b);
  }

  SUBCASE("tiny radius inside the locked square region") {
    // Strictly above (1,1) the corner witnesses persist on the whole circle
    // of perturbations, so the approximated set is locally constant.
    const double probe = continuity_probe({1.05, 1.05}, 1e-3, 8, {32, 5000, 3});
    CHECK(probe < 0.1);
  }
}

TEST_CASE("diagonal monotonicity experiment") {
  const std::vector<double> alphas = {0.5, 1.0, 2.0};
  const auto rows = diagonal_monotonicity_experiment(alphas, {32, 4000, 11});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].alpha == 0.5);
  // These diagonal hulls are exactly nested (diamond in square in square).
  CHECK(rows[0].outside_next < 1e-9);
  CHECK(rows[1].outside_next < 1e-9);
  CHECK(std::isnan(rows[2].outside_next));
}
