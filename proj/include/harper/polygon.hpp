#pragma once

#include <span>
#include <vector>

#include "harper/types.hpp"

namespace harper {

/// Convex hull with counterclockwise vertex order. Degenerate hulls (a single
/// point or a segment) keep one or two vertices.
class ConvexPolygon {
 public:
  ConvexPolygon() = default;

  static ConvexPolygon hull_of(std::span<const Vec2> points);

  const std::vector<Vec2>& vertices() const { return verts_; }
  bool empty() const { return verts_.empty(); }

  double width_x() const;
  double width_y() const;
  double diameter() const;

  /// Largest <v, u> over the polygon (support function).
  double support(const Vec2& direction) const;

  /// Euclidean distance from a point to the polygon (0 when inside).
  double distance_to(const Vec2& point) const;
  bool contains(const Vec2& point, double tol = 0.0) const;

 private:
  std::vector<Vec2> verts_;
};

/// Symmetric Hausdorff distance between convex polygons, computed from
/// vertex-to-polygon distances (exact for convex sets) cross-checked against
/// support-function sampling at 720 directions. Throws EmptyPolygon.
double hausdorff_distance(const ConvexPolygon& a, const ConvexPolygon& b);

enum class SetShape { Origin, HorizontalSegment, VerticalSegment, FullDim };

/// Degenerate-shape trichotomy of an approximated rotation set.
SetShape classify_shape(const ConvexPolygon& poly, double tol);

/// Closure of the vertex set under the reflections about both axes (and the
/// quarter-turn rotation when diagonal is set), re-hulled.
ConvexPolygon symmetrized(const ConvexPolygon& poly, bool diagonal);

}  // namespace harper
