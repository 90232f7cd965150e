#pragma once

#include <cstdint>

#include "equiknot/planar_diagram.hpp"
#include "equiknot/polygon.hpp"

namespace equiknot {

struct ProjectionOptions {
  /// Minimum feature separation as a fraction of the polygon diameter:
  /// crossing-to-crossing, crossing-to-vertex and vertex-to-segment
  /// distances in the image must all exceed it.
  double cross_tolerance_rel = 1e-6;
  /// Minimum angle between strands at a crossing, radians.
  double angle_tolerance = 1e-3;
  int retries = 64;
};
// Both tolerances are capped at a fraction of the polygon's own 3D
// clearance: the axis-hugging sticks of a reduced realization pass other
// strands at distances of order spacing*axis_approach, far below the
// nominal tolerances, and every projection of such a polygon has image
// features at that scale. The caps keep the stated defaults for
// ordinary polygons and stay orders of magnitude above double noise.

/// Diagram of the polygon under a seeded random generic projection:
/// directions are drawn until one passes the genericity tests, then
/// over/under is read from depth along the view direction. Throws
/// NotEmbedded for polygons without positive clearance and
/// NoGenericProjection when the retry budget runs out.
PlanarDiagram polygon_to_diagram(const EquilateralPolygon& poly,
                                 std::uint64_t seed,
                                 const ProjectionOptions& opts = {});

}  // namespace equiknot
