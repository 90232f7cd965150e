#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/polygon.hpp"

namespace equiknot {

/// Numeric knobs of the stick construction. Anything left unset falls
/// back to a value derived from the presentation size n.
struct RealizationParams {
  double stick_length = 1.0;
  std::optional<double> spacing;                   // default 1/(10n)
  std::optional<double> axis_approach;             // default spacing/100
  std::optional<std::vector<double>> page_angles;  // default 2*pi*k/n
  double length_tolerance = 1e-9;                  // relative
  int retries = 32;
  int invariant_max_crossings = 16;  // bracket cutoff for type checks
  std::uint64_t seed = 0;

  double resolved_spacing(int n) const;
  double resolved_axis_approach(int n) const;
  std::vector<double> resolved_page_angles(int n) const;

  /// Throws InvalidParams unless spacing*(n-1) < stick_length,
  /// axis_approach < spacing, and all page angles are distinct.
  void check(int n) const;
};

enum class KnotCheckMethod {
  Jones,        // full Jones comparison of a generic projection
  Determinant,  // Goeritz determinant only (projection too crossing-rich)
};

struct VerifiedRealization {
  EquilateralPolygon polygon;
  ClearanceReport clearance;
  KnotCheckMethod method = KnotCheckMethod::Jones;
  int projection_crossings = 0;
  int attempts = 1;
  double epsilon_used = 0.0;
  bool reduced = true;
};

/// The doubled form: binding index r at height (r-1)*spacing on the
/// axis, each arc realized as two unit sticks meeting at its in-page
/// apex. Exactly 2n edges, verified equilateral and embedded (retried
/// with perturbed page angles on failure).
EquilateralPolygon realize_doubled(const ArcPresentation& p,
                                   const RealizationParams& params);

/// Full construction: doubled form, then one stick saved at each axis
/// extreme by deleting the two sticks at the extreme vertex, swinging
/// their in-page neighbors (one to within axis_approach of the axis),
/// and bridging the free ends with a new unit stick. Exactly 2n-2
/// edges; equilateral, embedded and knot-type checked, with retries on
/// a halved axis_approach. Requires n >= 3.
VerifiedRealization reduce_at_extremes(const ArcPresentation& p,
                                       const RealizationParams& params);

/// Rotation angle psi in [0, pi] placing the point
///   pivot + L*sin(psi)*r(page_angle) + axis_side*L*cos(psi)*z
/// at distance L from fixed_point, within 1e-12. Bisection on the first
/// sign change scanning from the axis-hugging configuration psi = 0.
double solve_unit_gap(const Vec3& fixed_point, const Vec3& pivot,
                      double page_angle, double stick_length, int axis_side);

}  // namespace equiknot
