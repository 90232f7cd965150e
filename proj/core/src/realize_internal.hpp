#pragma once

// Shared machinery between the single-knot and composite realizations.

#include <cstdint>
#include <vector>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/planar_diagram.hpp"
#include "equiknot/polygon.hpp"
#include "equiknot/realize.hpp"

namespace equiknot::detail {

/// Vertex of a realization in progress. axis_row >= 1 marks a binding
/// vertex; page >= 0 marks a point kept inside that page's half-plane.
struct CycleVertex {
  Vec3 pos;
  int axis_row = 0;
  int page = -1;
};

/// The 2n-stick doubled form as a labeled cycle. Row r sits at height
/// (r-1)*spacing; the arc on page k meets its apex at angle angles[k].
std::vector<CycleVertex> doubled_cycle(const ArcPresentation& p,
                                       double spacing, double stick_length,
                                       const std::vector<double>& angles);

/// Delete-two/rotate-two/bridge move at the binding vertex of `row`.
/// axis_side is -1 when the freed endpoints swing below the row and +1
/// when above. Shrinks the cycle by one vertex. Throws NoRootFound when
/// the bridge stick cannot be placed.
void reduce_cycle_at_row(std::vector<CycleVertex>& cycle, int row,
                         int axis_side, double axis_approach,
                         double stick_length,
                         const std::vector<double>& angles);

EquilateralPolygon cycle_to_polygon(const std::vector<CycleVertex>& cycle,
                                    double stick_length);

struct VerifyOutcome {
  ClearanceReport clearance;
  KnotCheckMethod method = KnotCheckMethod::Jones;
  int projection_crossings = 0;
};

/// Equilaterality, embeddedness and knot-type check of a finished
/// polygon against the reference diagram. Falls back from Jones to the
/// Goeritz determinant when the projection exceeds max_crossings.
/// Throws NotEmbedded / KnotTypeChanged / Internal.
VerifyOutcome verify_polygon(const EquilateralPolygon& poly,
                             const PlanarDiagram& reference,
                             double length_tolerance, std::uint64_t seed,
                             int max_crossings);

std::vector<double> perturbed_angles(const std::vector<double>& base,
                                     std::uint64_t seed, int attempt);

}  // namespace equiknot::detail
