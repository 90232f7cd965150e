#include "equiknot/projection.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "equiknot/error.hpp"

namespace equiknot {

namespace {

struct Vec2 {
  double x = 0.0, y = 0.0;
};

double cross2(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
double dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
double norm2d(const Vec2& a) { return std::sqrt(dot2(a, a)); }

Vec2 sub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }

double point_segment_distance_2d(const Vec2& p, const Vec2& a,
                                 const Vec2& b) {
  Vec2 d = sub(b, a);
  double len2 = dot2(d, d);
  if (len2 == 0.0) return norm2d(sub(p, a));
  double t = std::clamp((dot2(sub(p, a), d)) / len2, 0.0, 1.0);
  Vec2 q{a.x + d.x * t, a.y + d.y * t};
  return norm2d(sub(p, q));
}

double segment_distance_2d(const Vec2& a0, const Vec2& a1, const Vec2& b0,
                           const Vec2& b1) {
  // Proper intersections are handled by the caller; here the minimum is
  // attained at an endpoint.
  return std::min(std::min(point_segment_distance_2d(a0, b0, b1),
                           point_segment_distance_2d(a1, b0, b1)),
                  std::min(point_segment_distance_2d(b0, a0, a1),
                           point_segment_distance_2d(b1, a0, a1)));
}

struct CrossingHit {
  int edge_over = -1, edge_under = -1;
  double t_over = 0.0, t_under = 0.0;  // parameters along each edge
  Vec2 point;
};

struct Frame {
  Vec3 dir, u, v;
};

Frame make_frame(const Vec3& dir) {
  Vec3 seed = std::fabs(dir.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  Vec3 u = normalized(cross(dir, seed));
  Vec3 v = cross(dir, u);
  return {dir, u, v};
}

}  // namespace

PlanarDiagram polygon_to_diagram(const EquilateralPolygon& poly,
                                 std::uint64_t seed,
                                 const ProjectionOptions& opts) {
  const int m = poly.edge_count();
  ClearanceReport clearance = check_embedding(poly);
  if (!clearance.embedded())
    raise(ErrorCode::NotEmbedded,
          "polygon is not embedded; clearance is zero");

  const double diameter = poly.diameter();
  const double tau =
      std::min(opts.cross_tolerance_rel * diameter,
               0.25 * clearance.min_clearance);
  const double sin_tolerance =
      std::min(std::sin(opts.angle_tolerance),
               0.25 * clearance.min_clearance / diameter);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::string last_reason = "no candidates drawn";
  for (int attempt = 0; attempt < opts.retries; ++attempt) {
    // Mildly tilted directions first: realized polygons stack their
    // structure along the z axis, and nearly axial views keep the
    // crossing count down. Later retries draw from the whole sphere.
    double polar, azimuth = 2.0 * M_PI * unit(rng);
    if (attempt < opts.retries / 2) {
      polar = 0.05 + 0.45 * unit(rng);
    } else {
      polar = std::acos(2.0 * unit(rng) - 1.0);
    }
    Vec3 dir{std::sin(polar) * std::cos(azimuth),
             std::sin(polar) * std::sin(azimuth), std::cos(polar)};
    Frame frame = make_frame(dir);

    std::vector<Vec2> img(m);
    std::vector<double> depth(m);
    for (int i = 0; i < m; ++i) {
      img[i] = {dot(poly.vertices[i], frame.u),
                dot(poly.vertices[i], frame.v)};
      depth[i] = dot(poly.vertices[i], frame.dir);
    }

    bool generic = true;
    std::vector<CrossingHit> hits;
    for (int i = 0; i < m && generic; ++i) {
      for (int j = i + 1; j < m && generic; ++j) {
        bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
        if (adjacent) continue;
        const Vec2 &a0 = img[i], &a1 = img[(i + 1) % m];
        const Vec2 &b0 = img[j], &b1 = img[(j + 1) % m];
        Vec2 da = sub(a1, a0), db = sub(b1, b0);
        double denom = cross2(da, db);
        double la = norm2d(da), lb = norm2d(db);
        if (la == 0.0 || lb == 0.0) {
          generic = false;  // an edge projects to a point
          break;
        }
        double sin_angle = std::fabs(denom) / (la * lb);
        bool proper = false;
        double t = 0.0, s = 0.0;
        if (sin_angle > 0.0) {
          Vec2 r = sub(b0, a0);
          t = cross2(r, db) / denom;
          s = cross2(r, da) / denom;
          proper = t > 0.0 && t < 1.0 && s > 0.0 && s < 1.0;
        }
        if (proper) {
          if (sin_angle < sin_tolerance) {
            generic = false;  // grazing crossing
            break;
          }
          // The crossing must stay clear of all four endpoints.
          double clear_ends =
              std::min(std::min(t, 1.0 - t) * la, std::min(s, 1.0 - s) * lb);
          if (clear_ends < tau) {
            generic = false;
            break;
          }
          CrossingHit hit;
          hit.point = {a0.x + da.x * t, a0.y + da.y * t};
          double depth_i = depth[i] + (depth[(i + 1) % m] - depth[i]) * t;
          double depth_j = depth[j] + (depth[(j + 1) % m] - depth[j]) * s;
          if (depth_i > depth_j) {
            hit.edge_over = i;
            hit.t_over = t;
            hit.edge_under = j;
            hit.t_under = s;
          } else {
            hit.edge_over = j;
            hit.t_over = s;
            hit.edge_under = i;
            hit.t_under = t;
          }
          hits.push_back(hit);
        } else {
          // No transversal intersection: the images must keep their
          // distance (covers near-parallel overlaps and near misses of
          // vertices against far segments).
          if (segment_distance_2d(a0, a1, b0, b1) < tau) {
            generic = false;
            break;
          }
        }
      }
    }
    if (!generic) {
      last_reason = "candidate direction failed a genericity test";
      continue;
    }
    // Crossing points must be pairwise separated.
    for (size_t a = 0; a < hits.size() && generic; ++a)
      for (size_t b = a + 1; b < hits.size(); ++b)
        if (norm2d(sub(hits[a].point, hits[b].point)) < tau) {
          generic = false;
          last_reason = "two crossings nearly coincide";
          break;
        }
    if (!generic) continue;

    // Assemble the walk in strand order.
    struct Event {
      double t;
      int crossing;
      bool over;
    };
    std::vector<std::vector<Event>> per_edge(m);
    for (int h = 0; h < static_cast<int>(hits.size()); ++h) {
      per_edge[hits[h].edge_over].push_back({hits[h].t_over, h, true});
      per_edge[hits[h].edge_under].push_back({hits[h].t_under, h, false});
    }
    std::vector<Passage> walk;
    walk.reserve(2 * hits.size());
    for (int i = 0; i < m; ++i) {
      auto& events = per_edge[i];
      std::sort(events.begin(), events.end(),
                [](const Event& a, const Event& b) { return a.t < b.t; });
      Vec2 d = sub(img[(i + 1) % m], img[i]);
      for (const Event& e : events)
        walk.push_back({e.crossing, e.over, d.x, d.y});
    }
    return build_diagram_from_passages(static_cast<int>(hits.size()), walk,
                                       hits.empty() ? 1 : 0);
  }
  raise(ErrorCode::NoGenericProjection,
        "no generic projection in " + std::to_string(opts.retries) +
            " attempts: " + last_reason);
}

}  // namespace equiknot
