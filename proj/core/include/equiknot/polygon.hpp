#pragma once

#include <vector>

#include "equiknot/geometry.hpp"

namespace equiknot {

/// Closed polygonal curve in 3-space. The realization code produces
/// these with every edge of length edge_length up to a small relative
/// tolerance; verify with edge_deviations and check_embedding.
struct EquilateralPolygon {
  std::vector<Vec3> vertices;
  double edge_length = 1.0;

  int edge_count() const { return static_cast<int>(vertices.size()); }
  const Vec3& vertex(int i) const {
    return vertices[((i % edge_count()) + edge_count()) % edge_count()];
  }

  /// |edge i| / edge_length - 1 for every edge, including the closing one.
  std::vector<double> edge_deviations() const;
  double max_abs_edge_deviation() const;
  double diameter() const;
};

struct ClearanceReport {
  double min_clearance = 0.0;
  int witness_a = -1;  // edge indices realizing the minimum
  int witness_b = -1;
  bool adjacent_overlap = false;
  std::vector<double> edge_deviations;

  bool embedded() const { return min_clearance > 0.0 && !adjacent_overlap; }
};

/// Exact minimum distance over all non-adjacent edge pairs, plus a
/// collinear-overlap check for adjacent pairs. Plain O(m^2) scan.
ClearanceReport check_embedding(const EquilateralPolygon& poly);

}  // namespace equiknot
