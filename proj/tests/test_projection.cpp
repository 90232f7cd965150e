#include <doctest.h>

#include <cmath>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/projection.hpp"
#include "equiknot/realize.hpp"

using namespace equiknot;

namespace {

ArcPresentation trefoil5() {
  return ArcPresentation::validate({{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}});
}

EquilateralPolygon triangle() {
  EquilateralPolygon p;
  p.vertices = {{0, 0, 0}, {1, 0, 0}, {0.5, std::sqrt(3.0) / 2.0, 0}};
  return p;
}

}  // namespace

TEST_CASE("planar triangle projects without crossings") {
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    PlanarDiagram d = polygon_to_diagram(triangle(), seed);
    CHECK(d.crossing_count() == 0);
    CHECK(jones_polynomial(d) == Laurent::one());
  }
}

TEST_CASE("realized trefoil projects to the trefoil") {
  VerifiedRealization r = reduce_at_extremes(trefoil5(), {});
  Laurent reference = jones_polynomial(arcpres_to_diagram(trefoil5()));

  PlanarDiagram d = polygon_to_diagram(r.polygon, 4242);
  d.check_structure();
  CHECK(equal_up_to_mirror(jones_polynomial(d, 24), reference));
}

TEST_CASE("different seeds may give different diagrams, same Jones") {
  VerifiedRealization r = reduce_at_extremes(trefoil5(), {});
  Laurent first;
  bool have_first = false;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    PlanarDiagram d = polygon_to_diagram(r.polygon, seed);
    Laurent j = jones_polynomial(d, 24).mirror_canonical();
    if (!have_first) {
      first = j;
      have_first = true;
    } else {
      CHECK(j == first);
    }
  }
}

TEST_CASE("non-embedded input is rejected") {
  EquilateralPolygon p;
  p.vertices = {{-1, -0.1, 0}, {1, 0.1, 0}, {1, -1, 0}, {-1, 1, 0}};
  CHECK_THROWS_AS(polygon_to_diagram(p, 1), Error);
}

TEST_CASE("an exhausted retry budget surfaces NoGenericProjection") {
  ProjectionOptions opts;
  opts.retries = 0;
  EquilateralPolygon square;
  square.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
  try {
    polygon_to_diagram(square, 5, opts);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoGenericProjection);
  }
}

TEST_CASE("projection is deterministic in the seed") {
  VerifiedRealization r = reduce_at_extremes(trefoil5(), {});
  PlanarDiagram a = polygon_to_diagram(r.polygon, 777);
  PlanarDiagram b = polygon_to_diagram(r.polygon, 777);
  CHECK(a.crossing_count() == b.crossing_count());
  CHECK(a.pd_code() == b.pd_code());
}
