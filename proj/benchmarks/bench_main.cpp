#include <benchmark/benchmark.h>

#include <random>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/knot_table.hpp"
#include "equiknot/planar_diagram.hpp"
#include "equiknot/polygon.hpp"
#include "equiknot/projection.hpp"
#include "equiknot/realize.hpp"

using namespace equiknot;

namespace {

ArcPresentation table_presentation(const char* name) {
  return find_entry(name)->presentation();
}

void BM_bracket(benchmark::State& state, const char* name) {
  PlanarDiagram d = arcpres_to_diagram(table_presentation(name));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kauffman_bracket(d, 26));
  }
  state.counters["crossings"] = d.crossing_count();
}

void BM_determinant(benchmark::State& state, const char* name) {
  PlanarDiagram d = arcpres_to_diagram(table_presentation(name));
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant(d));
  }
}

void BM_realize(benchmark::State& state, const char* name) {
  ArcPresentation p = table_presentation(name);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduce_at_extremes(p, {}));
  }
}

void BM_clearance(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(-1.0, 1.0);
  EquilateralPolygon poly;
  for (int i = 0; i < state.range(0); ++i)
    poly.vertices.push_back({coord(rng), coord(rng), coord(rng)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_embedding(poly));
  }
}

void BM_projection(benchmark::State& state, const char* name) {
  VerifiedRealization r = reduce_at_extremes(table_presentation(name), {});
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygon_to_diagram(r.polygon, seed++));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_bracket, trefoil, "3_1");
BENCHMARK_CAPTURE(BM_bracket, figure_eight, "4_1");
BENCHMARK_CAPTURE(BM_bracket, eight_crossings, "8_12");
BENCHMARK_CAPTURE(BM_determinant, eight_crossings, "8_12");
BENCHMARK_CAPTURE(BM_realize, trefoil, "3_1");
BENCHMARK_CAPTURE(BM_realize, eight_crossings, "8_12");
BENCHMARK(BM_clearance)->Range(8, 512);
BENCHMARK_CAPTURE(BM_projection, trefoil, "3_1");

BENCHMARK_MAIN();
