#include "equiknot/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "equiknot/error.hpp"

namespace equiknot {

std::vector<double> EquilateralPolygon::edge_deviations() const {
  const int m = edge_count();
  std::vector<double> dev(m);
  for (int i = 0; i < m; ++i)
    dev[i] = distance(vertices[i], vertices[(i + 1) % m]) / edge_length - 1.0;
  return dev;
}

double EquilateralPolygon::max_abs_edge_deviation() const {
  double worst = 0.0;
  for (double d : edge_deviations()) worst = std::max(worst, std::fabs(d));
  return worst;
}

double EquilateralPolygon::diameter() const {
  double best = 0.0;
  const int m = edge_count();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      best = std::max(best, distance(vertices[i], vertices[j]));
  return best;
}

namespace {

// Adjacent edges share a vertex; they fail embedding only when the far
// endpoints fold back onto each other along one line through it.
bool adjacent_edges_overlap(const Vec3& shared, const Vec3& p,
                            const Vec3& q) {
  Vec3 u = p - shared;
  Vec3 v = q - shared;
  double nu = norm(u), nv = norm(v);
  if (nu == 0.0 || nv == 0.0) return true;  // degenerate zero-length edge
  double sin_area = norm(cross(u, v)) / (nu * nv);
  double cos_angle = dot(u, v) / (nu * nv);
  return sin_area < 1e-12 && cos_angle > 0.0;
}

}  // namespace

ClearanceReport check_embedding(const EquilateralPolygon& poly) {
  const int m = poly.edge_count();
  if (m < 3) raise(ErrorCode::InvalidParams, "polygon needs >= 3 vertices");

  ClearanceReport report;
  report.edge_deviations = poly.edge_deviations();
  report.min_clearance = std::numeric_limits<double>::infinity();

  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      if (adjacent) {
        const Vec3& shared = (j == i + 1) ? poly.vertices[j]
                                          : poly.vertices[0];
        const Vec3& p = (j == i + 1) ? poly.vertices[i]
                                     : poly.vertices[1];
        const Vec3& q = (j == i + 1) ? poly.vertices[(j + 1) % m]
                                     : poly.vertices[m - 1];
        if (adjacent_edges_overlap(shared, p, q)) {
          report.adjacent_overlap = true;
          report.min_clearance = 0.0;
          report.witness_a = i;
          report.witness_b = j;
          return report;
        }
        continue;
      }
      double dist = segment_distance(poly.vertices[i],
                                     poly.vertices[(i + 1) % m],
                                     poly.vertices[j],
                                     poly.vertices[(j + 1) % m]);
      if (dist < report.min_clearance) {
        report.min_clearance = dist;
        report.witness_a = i;
        report.witness_b = j;
      }
    }
  }
  return report;
}

}  // namespace equiknot
