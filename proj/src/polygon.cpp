#include "harper/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harper/math.hpp"

namespace harper {

namespace {

double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Collinearity threshold relative to the spanned lengths.
bool turns_left(const Vec2& o, const Vec2& a, const Vec2& b) {
  const double c = cross(o, a, b);
  const double scale = (a - o).norm() * (b - a).norm();
  return c > 1e-12 * std::max(scale, 1e-300);
}

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

}  // namespace

ConvexPolygon ConvexPolygon::hull_of(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const Vec2& a, const Vec2& b) { return a == b; }),
            pts.end());

  ConvexPolygon poly;
  if (pts.size() <= 2) {
    poly.verts_ = pts;
    return poly;
  }

  // Andrew's monotone chain; collinear points are dropped.
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& pt : pts) {
    while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], pt)) --k;
    hull[k++] = pt;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], *it)) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.pop_back();
  poly.verts_ = std::move(hull);
  return poly;
}

double ConvexPolygon::width_x() const {
  if (verts_.empty()) return 0.0;
  double lo = verts_[0].x(), hi = verts_[0].x();
  for (const auto& v : verts_) {
    lo = std::min(lo, v.x());
    hi = std::max(hi, v.x());
  }
  return hi - lo;
}

double ConvexPolygon::width_y() const {
  if (verts_.empty()) return 0.0;
  double lo = verts_[0].y(), hi = verts_[0].y();
  for (const auto& v : verts_) {
    lo = std::min(lo, v.y());
    hi = std::max(hi, v.y());
  }
  return hi - lo;
}

double ConvexPolygon::diameter() const {
  double best = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    for (std::size_t j = i + 1; j < verts_.size(); ++j) {
      best = std::max(best, (verts_[i] - verts_[j]).norm());
    }
  }
  return best;
}

double ConvexPolygon::support(const Vec2& direction) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : verts_) best = std::max(best, v.dot(direction));
  return best;
}

double ConvexPolygon::distance_to(const Vec2& point) const {
  if (verts_.empty()) return std::numeric_limits<double>::infinity();
  if (verts_.size() == 1) return (point - verts_[0]).norm();
  if (contains(point)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const std::size_t j = (i + 1) % verts_.size();
    best = std::min(best, point_segment_distance(point, verts_[i], verts_[j]));
  }
  return best;
}

bool ConvexPolygon::contains(const Vec2& point, double tol) const {
  if (verts_.empty()) return false;
  if (verts_.size() == 1) return (point - verts_[0]).norm() <= tol;
  if (verts_.size() == 2) return point_segment_distance(point, verts_[0], verts_[1]) <= tol;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    const std::size_t j = (i + 1) % verts_.size();
    const Vec2 edge = verts_[j] - verts_[i];
    const double c = cross(verts_[i], verts_[j], point);
    if (c < -tol * std::max(edge.norm(), 1e-300)) return false;
  }
  return true;
}

double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b) {
  if (a.empty() || b.empty()) throw EmptyPolygon("hausdorff_distance: empty polygon");

  double best = 0.0;
  for (const auto& v : a.vertices()) best = std::max(best, b.distance_to(v));
  for (const auto& v : b.vertices()) best = std::max(best, a.distance_to(v));

  // Support-function discrepancy lower-bounds the Hausdorff distance of
  // convex sets; sampled directions cross-check the vertex route.
  constexpr int kDirections = 720;
  for (int i = 0; i < kDirections; ++i) {
    const double theta = two_pi<double> * i / kDirections;
    const Vec2 u{std::cos(theta), std::sin(theta)};
    best = std::max(best, std::abs(a.support(u) - b.support(u)));
  }
  return best;
}

SetShape classify_shape(const ConvexPolygon& poly, double tol) {
  if (poly.empty()) throw EmptyPolygon("classify_shape: empty polygon");
  if (poly.diameter() < tol) return SetShape::Origin;
  const bool thin_x = poly.width_x() < tol;
  const bool thin_y = poly.width_y() < tol;
  if (thin_x && !thin_y) return SetShape::VerticalSegment;
  if (thin_y && !thin_x) return SetShape::HorizontalSegment;
  return SetShape::FullDim;
}

ConvexPolygon symmetrized(const ConvexPolygon& poly, bool diagonal) {
  std::vector<Vec2> points;
  points.reserve(poly.vertices().size() * (diagonal ? 8 : 4));
  for (const auto& v : poly.vertices()) {
    points.push_back(v);
    points.push_back({-v.x(), v.y()});
    points.push_back({v.x(), -v.y()});
    points.push_back({-v.x(), -v.y()});
    if (diagonal) {
      points.push_back({v.y(), v.x()});
      points.push_back({-v.y(), v.x()});
      points.push_back({v.y(), -v.x()});
      points.push_back({-v.y(), -v.x()});
    }
  }
  return ConvexPolygon::hull_of(points);
}

}  // namespace harper
