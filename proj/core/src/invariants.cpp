#include "equiknot/invariants.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "equiknot/error.hpp"

namespace equiknot {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  void reset() { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns true when the two were already connected (a loop closes)
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    parent[a] = b;
    return false;
  }
};

}  // namespace

Laurent kauffman_bracket(const PlanarDiagram& d, int max_crossings) {
  const int c = d.crossing_count();
  if (c > max_crossings)
    raise(ErrorCode::TooManyCrossings,
          "bracket state sum over " + std::to_string(c) +
              " crossings exceeds the limit of " +
              std::to_string(max_crossings));

  if (c == 0) {
    // d^(free_loops - 1) with d = -A^2 - A^-2
    Laurent acc = Laurent::one();
    Laurent delta =
        Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
    for (int i = 1; i < d.free_loop_count(); ++i) acc = acc * delta;
    return acc;
  }

  // Count states by (A-smoothings minus B-smoothings, loops); expand the
  // powers of d once at the end. An A-smoothing joins slots (0,1) and
  // (2,3), a B-smoothing joins (0,3) and (1,2).
  std::map<std::pair<int, int>, std::int64_t> histogram;
  UnionFind uf(d.edge_count());
  const auto& crossings = d.crossings();
  for (std::uint32_t state = 0; state < (1u << c); ++state) {
    uf.reset();
    int loops = 0;
    int a_count = 0;
    for (int x = 0; x < c; ++x) {
      const auto& e = crossings[x].slot_edges;
      if (state >> x & 1u) {
        ++a_count;
        if (uf.unite(e[0], e[1])) ++loops;
        if (uf.unite(e[2], e[3])) ++loops;
      } else {
        if (uf.unite(e[0], e[3])) ++loops;
        if (uf.unite(e[1], e[2])) ++loops;
      }
    }
    histogram[{2 * a_count - c, loops}] += 1;
  }

  Laurent delta = Laurent::monomial(2, -1) + Laurent::monomial(-2, -1);
  std::vector<Laurent> delta_pow{Laurent::one()};
  Laurent bracket;
  for (const auto& [key, count] : histogram) {
    auto [exp_a, loops] = key;
    while (static_cast<int>(delta_pow.size()) <= loops - 1)
      delta_pow.push_back(delta_pow.back() * delta);
    bracket += Laurent::monomial(exp_a, count) * delta_pow[loops - 1];
  }
  return bracket;
}

Laurent jones_polynomial(const PlanarDiagram& d, int max_crossings) {
  Laurent bracket = kauffman_bracket(d, max_crossings);
  // (-A)^(-3w) = (-1)^w * A^(-3w)
  const int w = d.writhe();
  Laurent norm = Laurent::monomial(-3 * w, (w % 2 == 0) ? 1 : -1);
  Laurent in_a = norm * bracket;
  if (!in_a.exponents_divisible_by(4))
    raise(ErrorCode::Internal,
          "normalized bracket of a knot must live in powers of A^4");
  // t = A^-4
  Laurent t_poly;
  for (const auto& [e, coeff] : in_a.terms())
    t_poly.add_coeff(e / -4, coeff);
  return t_poly;
}

namespace {

std::int64_t abs_det_bareiss(std::vector<std::vector<__int128>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  __int128 prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        __int128 bound = static_cast<__int128>(1) << 96;
        if (m[i][j] > bound || m[i][j] < -bound)
          raise(ErrorCode::Internal, "Goeritz elimination overflow");
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  __int128 det = m[n - 1][n - 1];
  if (det < 0) det = -det;
  if (det > (static_cast<__int128>(1) << 62))
    raise(ErrorCode::Internal, "determinant exceeds 64 bits");
  return static_cast<std::int64_t>(det);
}

}  // namespace

std::int64_t determinant(const PlanarDiagram& d) {
  const int c = d.crossing_count();
  if (c == 0) return 1;

  PlanarDiagram::Faces f = d.faces();

  // White regions are color class 0. Reindex them densely.
  std::vector<int> white_index(f.count, -1);
  int white_count = 0;
  for (int i = 0; i < f.count; ++i)
    if (f.color[i] == 0) white_index[i] = white_count++;

  std::vector<std::vector<__int128>> g(
      white_count, std::vector<__int128>(white_count, 0));
  for (int x = 0; x < c; ++x) {
    const auto& q = f.of_quadrant[x];
    // Quadrants 1 and 3 are the regions merged by the A-smoothing; the
    // crossing type toggles with which pair is white.
    int eta, fa, fb;
    if (f.color[q[1]] == 0) {
      eta = +1;
      fa = q[1];
      fb = q[3];
    } else {
      eta = -1;
      fa = q[0];
      fb = q[2];
    }
    if (fa == fb) continue;
    int i = white_index[fa], j = white_index[fb];
    g[i][j] -= eta;
    g[j][i] -= eta;
  }
  for (int i = 0; i < white_count; ++i) {
    __int128 row = 0;
    for (int j = 0; j < white_count; ++j)
      if (j != i) row += g[i][j];
    g[i][i] = -row;
  }

  // Principal minor: drop the last white region.
  std::vector<std::vector<__int128>> minor(
      white_count - 1, std::vector<__int128>(white_count - 1, 0));
  for (int i = 0; i + 1 < white_count; ++i)
    for (int j = 0; j + 1 < white_count; ++j) minor[i][j] = g[i][j];
  return abs_det_bareiss(std::move(minor));
}

}  // namespace equiknot
