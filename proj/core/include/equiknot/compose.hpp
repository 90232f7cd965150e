#pragma once

#include <array>
#include <optional>
#include <vector>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/realize.hpp"

namespace equiknot {

/// Splice layout for a connected sum on a shared axis: which arc of each
/// factor is deleted and where every binding row lands on the merged
/// axis. The factors are stored already normalized (no extremal arc), so
/// both sides can be reduced independently after realization.
struct CompositePlan {
  ArcPresentation factor1;
  ArcPresentation factor2;
  int arc1 = -1;  // page index into factor1
  int arc2 = -1;
  std::vector<int> row_map_1;  // [1..m1] -> merged row, index 0 unused
  std::vector<int> row_map_2;
};

/// Deterministic arc choice: the lowest page index whose endpoints avoid
/// rows 1 and n of its factor. Both factors need n >= 5. Explicit page
/// indices (for the CLI flags) are validated against the same rule.
CompositePlan choose_splice_arcs(const ArcPresentation& p1,
                                 const ArcPresentation& p2,
                                 std::optional<int> forced_arc1 = {},
                                 std::optional<int> forced_arc2 = {});

struct MergedPresentation {
  ArcPresentation presentation;
  std::vector<int> page_side;        // 0 or 1 per merged page
  std::array<int, 2> shared_rows{};  // rows receiving one end per factor
  // Rows at which each side's two reductions act, in merged coordinates.
  std::array<int, 2> side_bottom_row{};
  std::array<int, 2> side_top_row{};
};

/// Arcs of factor 1 minus arc1 followed by arcs of factor 2 minus arc2,
/// rows renumbered through the plan's remaps. Validates the result.
MergedPresentation merge_presentations(const CompositePlan& plan);

/// Angles for the merged pages: factor-1 pages spread uniformly inside
/// (0.1 pi, 0.9 pi), factor-2 pages inside (1.1 pi, 1.9 pi).
std::vector<double> composite_page_angles(const MergedPresentation& merged);

/// Doubled realization of the merged presentation with the two factors
/// on opposite angular sides, then the two-stick reduction applied to
/// each side's extreme rows: exactly 2(m1 + m2 - 2) - 4 edges.
VerifiedRealization realize_composite(const MergedPresentation& merged,
                                      const RealizationParams& params);

}  // namespace equiknot
