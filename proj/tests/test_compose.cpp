#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "equiknot/compose.hpp"
#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/projection.hpp"

using namespace equiknot;

namespace {

ArcPresentation trefoil5() {
  return ArcPresentation::validate({{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}});
}

}  // namespace

TEST_CASE("plan: merged sizes are m1 + m2 - 2") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  MergedPresentation merged = merge_presentations(plan);
  CHECK(merged.presentation.page_count() == 8);
  CHECK(merged.page_side.size() == 8);

  // every merged row has degree 2 by validation; check shared rows exist
  CHECK(merged.shared_rows[0] >= 1);
  CHECK(merged.shared_rows[1] <= 8);
  CHECK(merged.shared_rows[0] != merged.shared_rows[1]);
}

TEST_CASE("plan rejects tiny factors and bad forced arcs") {
  ArcPresentation unknot = ArcPresentation::validate({{1, 2}, {1, 2}});
  CHECK_THROWS_AS(choose_splice_arcs(unknot, trefoil5()), Error);

  // arc 0 of the trefoil presentation touches row 1
  CHECK_THROWS_AS(choose_splice_arcs(trefoil5(), trefoil5(), 0, {}), Error);
}

TEST_CASE("spliced arcs avoid the extreme rows") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  const Arc a1 = plan.factor1.arc(plan.arc1);
  const Arc a2 = plan.factor2.arc(plan.arc2);
  CHECK(a1.lo > 1);
  CHECK(a1.hi < plan.factor1.page_count());
  CHECK(a2.lo > 1);
  CHECK(a2.hi < plan.factor2.page_count());
}

TEST_CASE("granny merged presentation multiplies the Jones polynomials") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  MergedPresentation merged = merge_presentations(plan);

  Laurent factor = jones_polynomial(arcpres_to_diagram(trefoil5()));
  Laurent merged_jones =
      jones_polynomial(arcpres_to_diagram(merged.presentation), 24);
  CHECK(equal_up_to_mirror(merged_jones, factor * factor));
  CHECK(determinant(arcpres_to_diagram(merged.presentation)) == 9);
}

TEST_CASE("structural round trip: dropping factor 2 recovers factor 1") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  MergedPresentation merged = merge_presentations(plan);

  // Keep factor-1 pages, re-close the spliced arc between the shared
  // rows, then compress row labels.
  std::vector<std::pair<int, int>> raw;
  for (int k = 0; k < merged.presentation.page_count(); ++k) {
    if (merged.page_side[k] != 0) continue;
    const Arc& a = merged.presentation.arc(k);
    raw.emplace_back(a.lo, a.hi);
  }
  raw.emplace_back(merged.shared_rows[0], merged.shared_rows[1]);

  std::vector<int> rows;
  for (auto& [a, b] : raw) {
    rows.push_back(a);
    rows.push_back(b);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  for (auto& [a, b] : raw) {
    a = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), a) -
                         rows.begin()) +
        1;
    b = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), b) -
                         rows.begin()) +
        1;
  }
  ArcPresentation recovered = ArcPresentation::validate(raw);
  CHECK(recovered.page_count() == plan.factor1.page_count());
  CHECK(equal_up_to_mirror(
      jones_polynomial(arcpres_to_diagram(recovered)),
      jones_polynomial(arcpres_to_diagram(plan.factor1))));
}

TEST_CASE("granny realization: 12 sticks, verified, factored invariants") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  MergedPresentation merged = merge_presentations(plan);
  VerifiedRealization r = realize_composite(merged, {});

  CHECK(r.polygon.edge_count() == 12);  // 2*5 + 2*5 - 8
  CHECK(r.polygon.max_abs_edge_deviation() < 1e-9);
  CHECK(r.clearance.min_clearance > 0.0);

  Laurent factor = jones_polynomial(arcpres_to_diagram(trefoil5()));
  PlanarDiagram projected = polygon_to_diagram(r.polygon, 31337);
  CHECK(equal_up_to_mirror(jones_polynomial(projected, 24),
                           factor * factor));
  CHECK(determinant(projected) == 9);
}

TEST_CASE("composite page angles live in disjoint sectors") {
  CompositePlan plan = choose_splice_arcs(trefoil5(), trefoil5());
  MergedPresentation merged = merge_presentations(plan);
  std::vector<double> angles = composite_page_angles(merged);
  for (size_t k = 0; k < angles.size(); ++k) {
    if (merged.page_side[k] == 0) {
      CHECK(angles[k] > 0.1 * M_PI);
      CHECK(angles[k] < 0.9 * M_PI);
    } else {
      CHECK(angles[k] > 1.1 * M_PI);
      CHECK(angles[k] < 1.9 * M_PI);
    }
  }
}
