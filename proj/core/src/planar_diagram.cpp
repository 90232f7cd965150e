#include "equiknot/planar_diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "equiknot/error.hpp"

namespace equiknot {

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int num_edges,
                             int free_loops)
    : crossings_(std::move(crossings)),
      num_edges_(num_edges),
      free_loops_(free_loops) {
  check_structure();
}

int PlanarDiagram::writhe() const {
  int w = 0;
  for (const Crossing& c : crossings_) w += c.sign;
  return w;
}

namespace {

// An edge end is a (crossing, slot) pair; ends are numbered 4c + s.
struct EndMap {
  // the two ends of every edge
  std::vector<std::array<int, 2>> ends_of_edge;

  explicit EndMap(const std::vector<Crossing>& crossings, int num_edges) {
    ends_of_edge.assign(num_edges, {-1, -1});
    for (int c = 0; c < static_cast<int>(crossings.size()); ++c) {
      for (int s = 0; s < 4; ++s) {
        int e = crossings[c].slot_edges[s];
        if (e < 0 || e >= num_edges)
          raise(ErrorCode::Internal, "crossing references missing edge");
        auto& pair = ends_of_edge[e];
        if (pair[0] < 0)
          pair[0] = 4 * c + s;
        else if (pair[1] < 0)
          pair[1] = 4 * c + s;
        else
          raise(ErrorCode::Internal, "edge incident to more than two slots");
      }
    }
    for (const auto& pair : ends_of_edge)
      if (pair[0] < 0 || pair[1] < 0)
        raise(ErrorCode::Internal, "edge incident to fewer than two slots");
  }

  int other_end(int edge, int end) const {
    const auto& pair = ends_of_edge[edge];
    if (pair[0] == end) return pair[1];
    if (pair[1] == end) return pair[0];
    raise(ErrorCode::Internal, "end not incident to edge");
  }
};

}  // namespace

PlanarDiagram::Faces PlanarDiagram::faces() const {
  Faces f;
  const int c = crossing_count();
  f.of_quadrant.assign(c, {-1, -1, -1, -1});
  if (c == 0) {
    // A crossing-free loop bounds two faces.
    f.count = 2;
    f.color = {0, 1};
    return f;
  }

  EndMap em(crossings_, num_edges_);

  // Walk faces: arriving at end (x, s), the face on the left continues
  // through the edge at slot s-1.
  std::vector<int> face_of_end(4 * c, -1);
  int face_count = 0;
  for (int start = 0; start < 4 * c; ++start) {
    if (face_of_end[start] >= 0) continue;
    int id = face_count++;
    int end = start;
    while (face_of_end[end] < 0) {
      face_of_end[end] = id;
      int x = end / 4, s = end % 4;
      int s_next = (s + 3) % 4;
      int e = crossings_[x].slot_edges[s_next];
      end = em.other_end(e, 4 * x + s_next);
    }
  }
  f.count = face_count;
  // Quadrant q of crossing x belongs to the face of arrival end (x, q+1).
  for (int x = 0; x < c; ++x)
    for (int q = 0; q < 4; ++q)
      f.of_quadrant[x][q] = face_of_end[4 * x + (q + 1) % 4];

  // 2-color faces: opposite sides of each edge get opposite colors.
  f.color.assign(face_count, -1);
  std::vector<std::vector<int>> adj(face_count);
  for (int e = 0; e < num_edges_; ++e) {
    int fa = face_of_end[em.ends_of_edge[e][0]];
    int fb = face_of_end[em.ends_of_edge[e][1]];
    adj[fa].push_back(fb);
    adj[fb].push_back(fa);
  }
  std::vector<int> stack{0};
  f.color[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (f.color[w] < 0) {
        f.color[w] = 1 - f.color[v];
        stack.push_back(w);
      } else if (f.color[w] == f.color[v]) {
        raise(ErrorCode::Internal, "diagram faces are not checkerboard");
      }
    }
  }
  return f;
}

void PlanarDiagram::check_structure() const {
  const int c = crossing_count();
  if (c == 0) {
    if (num_edges_ != 0 || free_loops_ < 1)
      raise(ErrorCode::Internal, "crossing-free diagram needs a free loop");
    return;
  }
  if (num_edges_ != 2 * c)
    raise(ErrorCode::Internal, "a knot diagram has 2c edges");
  for (const Crossing& x : crossings_)
    if (x.sign != 1 && x.sign != -1)
      raise(ErrorCode::Internal, "crossing sign must be +-1");
  Faces f = faces();  // EndMap construction checks 4-regularity
  if (c - 2 * c + f.count != 2)
    raise(ErrorCode::Internal, "Euler characteristic is not 2");
}

std::string PlanarDiagram::pd_code() const {
  std::ostringstream os;
  for (const Crossing& x : crossings_) {
    os << "X[" << x.slot_edges[0] + 1 << "," << x.slot_edges[1] + 1 << ","
       << x.slot_edges[2] + 1 << "," << x.slot_edges[3] + 1 << "]\n";
  }
  return os.str();
}

PlanarDiagram build_diagram_from_passages(int num_crossings,
                                          const std::vector<Passage>& walk,
                                          int free_loops) {
  if (num_crossings == 0) {
    if (!walk.empty()) raise(ErrorCode::Internal, "walk without crossings");
    return PlanarDiagram({}, 0, free_loops > 0 ? free_loops : 1);
  }
  const int m = static_cast<int>(walk.size());
  if (m != 2 * num_crossings)
    raise(ErrorCode::Internal, "walk must meet every crossing twice");

  struct Seen {
    int under = -1, over = -1;  // walk positions
  };
  std::vector<Seen> seen(num_crossings);
  for (int i = 0; i < m; ++i) {
    const Passage& p = walk[i];
    if (p.crossing < 0 || p.crossing >= num_crossings)
      raise(ErrorCode::Internal, "passage names a missing crossing");
    int& slot = p.over ? seen[p.crossing].over : seen[p.crossing].under;
    if (slot >= 0)
      raise(ErrorCode::Internal, "crossing met twice on the same strand");
    slot = i;
  }

  // Edge i enters passage i and edge (i+1) mod m leaves it.
  std::vector<Crossing> crossings(num_crossings);
  for (int x = 0; x < num_crossings; ++x) {
    const Seen& s = seen[x];
    if (s.under < 0 || s.over < 0)
      raise(ErrorCode::Internal, "crossing missing a strand");
    const Passage& pu = walk[s.under];
    const Passage& po = walk[s.over];
    Crossing& cr = crossings[x];
    cr.slot_edges[0] = s.under;
    cr.slot_edges[2] = (s.under + 1) % m;
    // Over entering at slot 1 when ccw from the reversed under direction,
    // slot 3 otherwise; slot 3 entry is the positive crossing.
    double cross = pu.dir_x * po.dir_y - pu.dir_y * po.dir_x;
    if (cross == 0.0)
      raise(ErrorCode::Internal, "tangential passage directions");
    if (cross > 0.0) {
      cr.slot_edges[1] = s.over;
      cr.slot_edges[3] = (s.over + 1) % m;
      cr.sign = -1;
    } else {
      cr.slot_edges[3] = s.over;
      cr.slot_edges[1] = (s.over + 1) % m;
      cr.sign = +1;
    }
  }
  return PlanarDiagram(std::move(crossings), m, 0);
}

PlanarDiagram arcpres_to_diagram(const ArcPresentation& p) {
  const int n = p.page_count();

  // Column k spans rows [arc.lo, arc.hi]; row r joins its two columns.
  std::vector<std::pair<int, int>> row_cols(n + 1);
  for (int r = 1; r <= n; ++r) row_cols[r] = p.pages_at(r);

  std::map<std::pair<int, int>, int> crossing_id;  // (column, row) -> id
  for (int k = 0; k < n; ++k) {
    const Arc& a = p.arc(k);
    for (int r = a.lo + 1; r < a.hi; ++r) {
      auto [c1, c2] = row_cols[r];
      if (c1 < k && k < c2) {
        int id = static_cast<int>(crossing_id.size());
        crossing_id[{k, r}] = id;
      }
    }
  }

  std::vector<Passage> walk;
  walk.reserve(2 * crossing_id.size());
  const int start_arc = 0;
  const int start_entry = p.arc(0).lo;
  int arc = start_arc, entry = start_entry;
  do {
    const Arc& a = p.arc(arc);
    int exit = a.other(entry);
    // Vertical run through column `arc` from row `entry` to `exit`.
    int step = exit > entry ? 1 : -1;
    for (int r = entry + step; r != exit; r += step) {
      auto it = crossing_id.find({arc, r});
      if (it != crossing_id.end())
        walk.push_back({it->second, true, 0.0, static_cast<double>(step)});
    }
    // Horizontal run along row `exit` to the other page at that index.
    auto [c1, c2] = row_cols[exit];
    int next_arc = (c1 == arc) ? c2 : c1;
    int hstep = next_arc > arc ? 1 : -1;
    for (int k = arc + hstep; k != next_arc; k += hstep) {
      auto it = crossing_id.find({k, exit});
      if (it != crossing_id.end())
        walk.push_back({it->second, false, static_cast<double>(hstep), 0.0});
    }
    arc = next_arc;
    entry = exit;
  } while (!(arc == start_arc && entry == start_entry));

  return build_diagram_from_passages(static_cast<int>(crossing_id.size()),
                                     walk);
}

}  // namespace equiknot
