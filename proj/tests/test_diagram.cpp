#include <doctest.h>

#include <cstdlib>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/planar_diagram.hpp"

using namespace equiknot;

namespace {

ArcPresentation trefoil5() {
  return ArcPresentation::validate({{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}});
}

Laurent trefoil_jones() {
  Laurent p;  // -t^-4 + t^-3 + t^-1 (one chirality)
  p.set_coeff(-4, -1);
  p.set_coeff(-3, 1);
  p.set_coeff(-1, 1);
  return p;
}

// A reducible one-crossing unknot diagram. sign=+1 gives the positive
// kink, sign=-1 the negative one.
PlanarDiagram kink(int sign) {
  std::vector<Passage> walk(2);
  walk[0] = {0, false, 1.0, 0.0};
  walk[1] = {0, true, 0.0, sign > 0 ? -1.0 : 1.0};
  return build_diagram_from_passages(1, walk);
}

}  // namespace

TEST_CASE("two-arc unknot flattens to a crossing-free diagram") {
  PlanarDiagram d =
      arcpres_to_diagram(ArcPresentation::validate({{1, 2}, {1, 2}}));
  CHECK(d.crossing_count() == 0);
  CHECK(d.free_loop_count() == 1);
  CHECK(kauffman_bracket(d) == Laurent::one());
  CHECK(jones_polynomial(d) == Laurent::one());
  CHECK(determinant(d) == 1);
}

TEST_CASE("kink diagrams: bracket, writhe normalization, determinant") {
  PlanarDiagram pos = kink(+1);
  CHECK(pos.crossing_count() == 1);
  CHECK(pos.writhe() == 1);
  // <positive kink> = -A^3
  CHECK(kauffman_bracket(pos) == Laurent::monomial(3, -1));
  CHECK(jones_polynomial(pos) == Laurent::one());
  CHECK(determinant(pos) == 1);

  PlanarDiagram neg = kink(-1);
  CHECK(neg.writhe() == -1);
  CHECK(kauffman_bracket(neg) == Laurent::monomial(-3, -1));
  CHECK(jones_polynomial(neg) == Laurent::one());
  CHECK(determinant(neg) == 1);
}

TEST_CASE("trefoil presentation flattens to a 3-crossing diagram") {
  PlanarDiagram d = arcpres_to_diagram(trefoil5());
  CHECK(d.crossing_count() == 3);
  CHECK(d.edge_count() == 6);
  CHECK(std::abs(d.writhe()) == 3);
  d.check_structure();

  CHECK(equal_up_to_mirror(jones_polynomial(d), trefoil_jones()));
  CHECK(determinant(d) == 3);
  CHECK(std::llabs(jones_polynomial(d).eval_at_minus_one()) == 3);
}

TEST_CASE("crossing count honors the grid bound") {
  for (int m : {0, 1, 2, 3, 4}) {
    ArcPresentation p = binding_rotate(trefoil5(), m);
    PlanarDiagram d = arcpres_to_diagram(p);
    int n = p.page_count();
    CHECK(d.crossing_count() <= n * (n - 1) / 2);
  }
}

TEST_CASE("rotations preserve the Jones polynomial") {
  ArcPresentation p = trefoil5();
  Laurent reference = jones_polynomial(arcpres_to_diagram(p));
  for (int m = 0; m < 5; ++m) {
    CHECK(jones_polynomial(arcpres_to_diagram(page_rotate(p, m))) ==
          reference);
    CHECK(jones_polynomial(arcpres_to_diagram(binding_rotate(p, m))) ==
          reference);
  }
}

TEST_CASE("bracket refuses oversized state sums") {
  PlanarDiagram d = arcpres_to_diagram(trefoil5());
  try {
    kauffman_bracket(d, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooManyCrossings);
  }
}

TEST_CASE("pd code export") {
  PlanarDiagram d = arcpres_to_diagram(trefoil5());
  std::string pd = d.pd_code();
  CHECK(pd.find("X[") == 0);
  int lines = 0;
  for (char ch : pd)
    if (ch == '\n') ++lines;
  CHECK(lines == 3);
}

TEST_CASE("determinant equals |jones(-1)| on assorted diagrams") {
  for (int m = 0; m < 5; ++m) {
    PlanarDiagram d = arcpres_to_diagram(page_rotate(trefoil5(), m));
    CHECK(determinant(d) ==
          std::llabs(jones_polynomial(d).eval_at_minus_one()));
  }
  PlanarDiagram pos = kink(+1);
  CHECK(determinant(pos) ==
        std::llabs(jones_polynomial(pos).eval_at_minus_one()));
}
