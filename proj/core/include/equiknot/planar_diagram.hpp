#pragma once

#include <array>
#include <string>
#include <vector>

#include "equiknot/arc_presentation.hpp"

namespace equiknot {

/// One crossing of a knot diagram. slot_edges holds the ids of the four
/// incident edge ends in counterclockwise order, slot 0 being the edge
/// that enters on the under strand. The under strand runs slot 0 -> 2;
/// the over strand enters at slot 3 for a positive crossing and at
/// slot 1 for a negative one.
struct Crossing {
  std::array<int, 4> slot_edges{-1, -1, -1, -1};
  int sign = 0;
};

/// A knot diagram as a 4-valent plane graph with over/under data.
/// Edges are numbered 0..2c-1 along the knot, so the edge sequence is
/// the circular strand order. A diagram with no crossings stores the
/// component count in free_loops instead.
class PlanarDiagram {
 public:
  PlanarDiagram() = default;
  PlanarDiagram(std::vector<Crossing> crossings, int num_edges,
                int free_loops);

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return num_edges_; }
  int free_loop_count() const { return free_loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }

  int writhe() const;

  /// Faces of the plane graph, each face listed as (crossing, quadrant)
  /// incidences. Quadrant q of a crossing lies between slots q and q+1.
  struct Faces {
    int count = 0;
    // face id for quadrant q of crossing c, indexed [c][q]
    std::vector<std::array<int, 4>> of_quadrant;
    // 2-coloring, color in {0,1}, adjacent faces differ
    std::vector<int> color;
  };
  Faces faces() const;

  /// Structural invariants: every edge id is incident to exactly two
  /// slots, and V - E + F = 2. Throws Internal on violation.
  void check_structure() const;

  /// One crossing per line: X[a,b,c,d], edge labels 1-based, starting at
  /// the incoming under edge and proceeding counterclockwise.
  std::string pd_code() const;

 private:
  std::vector<Crossing> crossings_;
  int num_edges_ = 0;
  int free_loops_ = 0;
};

/// A single step of the knot walk used to assemble a diagram: which
/// crossing is met, on which strand, heading in which planar direction.
struct Passage {
  int crossing = -1;
  bool over = false;
  double dir_x = 0.0;
  double dir_y = 0.0;
};

/// Builds a diagram from the walk of the knot through its crossings,
/// in traversal order. Each crossing must appear exactly once as over
/// and once as under.
PlanarDiagram build_diagram_from_passages(int num_crossings,
                                          const std::vector<Passage>& walk,
                                          int free_loops = 0);

/// Grid flattening of an arc presentation: page k becomes the vertical
/// segment in column k spanning its arc's rows, binding index r the
/// horizontal segment in row r joining its two columns, and verticals
/// cross over horizontals everywhere.
PlanarDiagram arcpres_to_diagram(const ArcPresentation& p);

}  // namespace equiknot
