#include "equiknot/compose.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "realize_internal.hpp"

namespace equiknot {

namespace {

int pick_arc(const ArcPresentation& p, std::optional<int> forced,
             const char* which) {
  const int n = p.page_count();
  if (forced) {
    int k = *forced;
    if (k < 0 || k >= n)
      raise(ErrorCode::InvalidParams,
            std::string(which) + ": page index out of range");
    const Arc& a = p.arc(k);
    if (a.contains(1) || a.contains(n))
      raise(ErrorCode::InvalidParams,
            std::string(which) +
                ": spliced arc may not touch the extreme binding rows");
    return k;
  }
  for (int k = 0; k < n; ++k) {
    const Arc& a = p.arc(k);
    if (!a.contains(1) && !a.contains(n)) return k;
  }
  raise(ErrorCode::NoEligibleArc,
        std::string(which) + ": every arc touches an extreme row");
}

}  // namespace

CompositePlan choose_splice_arcs(const ArcPresentation& p1,
                                 const ArcPresentation& p2,
                                 std::optional<int> forced_arc1,
                                 std::optional<int> forced_arc2) {
  if (p1.page_count() < 5 || p2.page_count() < 5)
    raise(ErrorCode::InvalidParams,
          "composition needs presentations of nontrivial knots "
          "(at least 5 arcs each)");

  CompositePlan plan{normalize_no_extremal_arc(p1),
                     normalize_no_extremal_arc(p2)};
  plan.arc1 = pick_arc(plan.factor1, forced_arc1, "factor 1");
  plan.arc2 = pick_arc(plan.factor2, forced_arc2, "factor 2");

  const int m1 = plan.factor1.page_count();
  const int m2 = plan.factor2.page_count();
  const Arc a1 = plan.factor1.arc(plan.arc1);
  const Arc a2 = plan.factor2.arc(plan.arc2);

  // Bottom-up merged row order: low factor-1 rows, low factor-2 rows,
  // the first shared row, the two middles, the second shared row, then
  // the tops. Order within each factor is preserved and arc2's
  // endpoints land exactly on arc1's.
  plan.row_map_1.assign(m1 + 1, 0);
  plan.row_map_2.assign(m2 + 1, 0);
  int next = 1;
  for (int r = 1; r < a1.lo; ++r) plan.row_map_1[r] = next++;
  for (int r = 1; r < a2.lo; ++r) plan.row_map_2[r] = next++;
  plan.row_map_1[a1.lo] = plan.row_map_2[a2.lo] = next++;
  for (int r = a1.lo + 1; r < a1.hi; ++r) plan.row_map_1[r] = next++;
  for (int r = a2.lo + 1; r < a2.hi; ++r) plan.row_map_2[r] = next++;
  plan.row_map_1[a1.hi] = plan.row_map_2[a2.hi] = next++;
  for (int r = a1.hi + 1; r <= m1; ++r) plan.row_map_1[r] = next++;
  for (int r = a2.hi + 1; r <= m2; ++r) plan.row_map_2[r] = next++;

  if (next - 1 != m1 + m2 - 2)
    raise(ErrorCode::RemapCollision, "merged axis row count is off");
  return plan;
}

MergedPresentation merge_presentations(const CompositePlan& plan) {
  const int m1 = plan.factor1.page_count();
  const int m2 = plan.factor2.page_count();
  const int merged_rows = m1 + m2 - 2;

  std::vector<int> hits(merged_rows + 1, 0);
  for (int r = 1; r <= m1; ++r) {
    if (plan.row_map_1[r] < 1 || plan.row_map_1[r] > merged_rows)
      raise(ErrorCode::RemapCollision, "factor-1 row maps off the axis");
    hits[plan.row_map_1[r]]++;
  }
  for (int r = 1; r <= m2; ++r) {
    if (plan.row_map_2[r] < 1 || plan.row_map_2[r] > merged_rows)
      raise(ErrorCode::RemapCollision, "factor-2 row maps off the axis");
    hits[plan.row_map_2[r]]++;
  }
  const Arc a1 = plan.factor1.arc(plan.arc1);
  for (int h = 1; h <= merged_rows; ++h) {
    int expected = (h == plan.row_map_1[a1.lo] || h == plan.row_map_1[a1.hi])
                       ? 2
                       : 1;
    if (hits[h] != expected)
      raise(ErrorCode::RemapCollision,
            "merged row " + std::to_string(h) + " claimed " +
                std::to_string(hits[h]) + " times");
  }

  // Factor blocks read cyclically starting just past the deleted arc.
  std::vector<std::pair<int, int>> raw;
  std::vector<int> side;
  raw.reserve(merged_rows);
  for (int i = 1; i < m1; ++i) {
    const Arc& a = plan.factor1.arc((plan.arc1 + i) % m1);
    raw.emplace_back(plan.row_map_1[a.lo], plan.row_map_1[a.hi]);
    side.push_back(0);
  }
  for (int i = 1; i < m2; ++i) {
    const Arc& a = plan.factor2.arc((plan.arc2 + i) % m2);
    raw.emplace_back(plan.row_map_2[a.lo], plan.row_map_2[a.hi]);
    side.push_back(1);
  }

  return MergedPresentation{
      ArcPresentation::validate(raw),
      std::move(side),
      {plan.row_map_1[a1.lo], plan.row_map_1[a1.hi]},
      {plan.row_map_1[1], plan.row_map_2[1]},
      {plan.row_map_1[m1], plan.row_map_2[m2]}};
}

std::vector<double> composite_page_angles(const MergedPresentation& merged) {
  const int pages = merged.presentation.page_count();
  int count[2] = {0, 0};
  for (int s : merged.page_side) count[s]++;
  std::vector<double> angles(pages);
  int seen[2] = {0, 0};
  for (int k = 0; k < pages; ++k) {
    int s = merged.page_side[k];
    double base = s == 0 ? 0.1 * M_PI : 1.1 * M_PI;
    angles[k] = base + 0.8 * M_PI * (seen[s] + 0.5) / count[s];
    seen[s]++;
  }
  return angles;
}

VerifiedRealization realize_composite(const MergedPresentation& merged,
                                      const RealizationParams& params) {
  const ArcPresentation& p = merged.presentation;
  const int n = p.page_count();

  RealizationParams local = params;
  if (!local.page_angles) local.page_angles = composite_page_angles(merged);
  local.check(n);

  const PlanarDiagram reference = arcpres_to_diagram(p);
  const double delta = local.resolved_spacing(n);
  const double eps0 = local.resolved_axis_approach(n);
  const std::vector<double> base_angles = *local.page_angles;

  std::string last_error = "no attempts made";
  for (int attempt = 0; attempt < local.retries; ++attempt) {
    double eps = std::ldexp(eps0, -attempt);
    std::vector<double> angles =
        detail::perturbed_angles(base_angles, local.seed, attempt);
    try {
      auto cycle =
          detail::doubled_cycle(p, delta, local.stick_length, angles);
      // Two reductions per side, each acting at that side's own extreme
      // rows and swinging away from its sub-presentation.
      for (int s = 0; s < 2; ++s) {
        detail::reduce_cycle_at_row(cycle, merged.side_bottom_row[s], -1,
                                    eps, local.stick_length, angles);
        detail::reduce_cycle_at_row(cycle, merged.side_top_row[s], +1, eps,
                                    local.stick_length, angles);
      }
      EquilateralPolygon poly =
          detail::cycle_to_polygon(cycle, local.stick_length);
      if (poly.edge_count() != 2 * n - 4)
        raise(ErrorCode::Internal, "composite stick count is off");

      detail::VerifyOutcome outcome = detail::verify_polygon(
          poly, reference, local.length_tolerance,
          local.seed ^ (0xa0761d6478bd642fULL + attempt),
          local.invariant_max_crossings);

      VerifiedRealization result;
      result.polygon = std::move(poly);
      result.clearance = std::move(outcome.clearance);
      result.method = outcome.method;
      result.projection_crossings = outcome.projection_crossings;
      result.attempts = attempt + 1;
      result.epsilon_used = eps;
      result.reduced = true;
      return result;
    } catch (const Error& e) {
      switch (e.code()) {
        case ErrorCode::NoRootFound:
        case ErrorCode::NotEmbedded:
        case ErrorCode::KnotTypeChanged:
        case ErrorCode::NoGenericProjection:
          last_error = std::string(error_code_name(e.code())) + ": " +
                       e.what();
          continue;
        default:
          throw;
      }
    }
  }
  raise(ErrorCode::RetriesExhausted,
        "composite realization failed after " +
            std::to_string(local.retries) + " attempts: " + last_error);
}

}  // namespace equiknot
