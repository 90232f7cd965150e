#include <doctest.h>

#include <random>

#include "equiknot/geometry.hpp"

using namespace equiknot;

TEST_CASE("point-segment distance") {
  CHECK(point_segment_distance({0, 1, 0}, {-1, 0, 0}, {1, 0, 0}) ==
        doctest::Approx(1.0));
  CHECK(point_segment_distance({5, 0, 0}, {-1, 0, 0}, {1, 0, 0}) ==
        doctest::Approx(4.0));
  CHECK(point_segment_distance({0, 0, 0}, {2, 2, 2}, {2, 2, 2}) ==
        doctest::Approx(std::sqrt(12.0)));
}

TEST_CASE("segment distance, exact cases") {
  // opposite edges of the unit square
  CHECK(segment_distance({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}) ==
        doctest::Approx(1.0));
  // crossing segments meet
  CHECK(segment_distance({-1, 0, 0}, {1, 0, 0}, {0, -1, 0}, {0, 1, 0}) ==
        doctest::Approx(0.0));
  // skew lines: closest points in the middle
  CHECK(segment_distance({-1, 0, 0}, {1, 0, 0}, {0, -1, 1}, {0, 1, 1}) ==
        doctest::Approx(1.0));
  // parallel, offset
  CHECK(segment_distance({0, 0, 0}, {1, 0, 0}, {0, 0, 2}, {1, 0, 2}) ==
        doctest::Approx(2.0));
  // collinear, disjoint
  CHECK(segment_distance({0, 0, 0}, {1, 0, 0}, {3, 0, 0}, {5, 0, 0}) ==
        doctest::Approx(2.0));
  // endpoint to endpoint
  CHECK(segment_distance({0, 0, 0}, {1, 1, 0}, {2, 3, 0}, {4, 4, 0}) ==
        doctest::Approx(std::sqrt(1 + 4)));
  // degenerate: both segments are points
  CHECK(segment_distance({1, 2, 3}, {1, 2, 3}, {1, 2, 7}, {1, 2, 7}) ==
        doctest::Approx(4.0));
}

TEST_CASE("segment distance: symmetry and dense-sampling oracle") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  auto rand_vec = [&] { return Vec3{coord(rng), coord(rng), coord(rng)}; };

  for (int trial = 0; trial < 200; ++trial) {
    Vec3 a0 = rand_vec(), a1 = rand_vec(), b0 = rand_vec(), b1 = rand_vec();
    double d = segment_distance(a0, a1, b0, b1);
    CHECK(d == doctest::Approx(segment_distance(b0, b1, a0, a1))
                   .epsilon(1e-12));
    CHECK(d == doctest::Approx(segment_distance(a1, a0, b0, b1))
                   .epsilon(1e-12));

    // Sampled distances can only overestimate the true minimum.
    const int steps = 40;
    double sampled = 1e300;
    for (int i = 0; i <= steps; ++i) {
      Vec3 pa = a0 + (a1 - a0) * (static_cast<double>(i) / steps);
      for (int j = 0; j <= steps; ++j) {
        Vec3 pb = b0 + (b1 - b0) * (static_cast<double>(j) / steps);
        sampled = std::min(sampled, distance(pa, pb));
      }
    }
    CHECK(d <= sampled + 1e-12);
    // With 40 subdivisions the sampling is within a step diagonal.
    double step_bound =
        (norm(a1 - a0) + norm(b1 - b0)) / steps;
    CHECK(sampled <= d + step_bound);
  }
}

TEST_CASE("vector helpers") {
  Vec3 x{1, 0, 0}, y{0, 1, 0};
  CHECK(cross(x, y) == Vec3{0, 0, 1});
  CHECK(dot(x, y) == 0.0);
  CHECK(norm(Vec3{3, 4, 0}) == doctest::Approx(5.0));
  CHECK(normalized(Vec3{0, 0, 9}) == Vec3{0, 0, 1});
}
