#include "equiknot/geometry.hpp"

#include <algorithm>

namespace equiknot {

double point_segment_distance(const Vec3& p, const Vec3& a0, const Vec3& a1) {
  Vec3 d = a1 - a0;
  double len2 = norm2(d);
  if (len2 == 0.0) return distance(p, a0);
  double t = std::clamp(dot(p - a0, d) / len2, 0.0, 1.0);
  return distance(p, a0 + d * t);
}

// Closest-point parameters by the clamped quadratic method; see Ericson,
// Real-Time Collision Detection, 5.1.9.
double segment_distance(const Vec3& a0, const Vec3& a1, const Vec3& b0,
                        const Vec3& b1) {
  Vec3 d1 = a1 - a0;
  Vec3 d2 = b1 - b0;
  Vec3 r = a0 - b0;
  double a = norm2(d1);
  double e = norm2(d2);
  double f = dot(d2, r);

  if (a == 0.0 && e == 0.0) return distance(a0, b0);
  if (a == 0.0) return point_segment_distance(a0, b0, b1);
  if (e == 0.0) return point_segment_distance(b0, a0, a1);

  double c = dot(d1, r);
  double b = dot(d1, d2);
  double denom = a * e - b * b;

  double s = denom != 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0)
                          : 0.0;
  double t = (b * s + f) / e;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return distance(a0 + d1 * s, b0 + d2 * t);
}

}  // namespace equiknot
