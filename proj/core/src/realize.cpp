#include "equiknot/realize.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/projection.hpp"
#include "realize_internal.hpp"

namespace equiknot {

double RealizationParams::resolved_spacing(int n) const {
  return spacing ? *spacing : 1.0 / (10.0 * n);
}

double RealizationParams::resolved_axis_approach(int n) const {
  return axis_approach ? *axis_approach : resolved_spacing(n) / 100.0;
}

std::vector<double> RealizationParams::resolved_page_angles(int n) const {
  if (page_angles) return *page_angles;
  std::vector<double> angles(n);
  for (int k = 0; k < n; ++k) angles[k] = 2.0 * M_PI * k / n;
  return angles;
}

void RealizationParams::check(int n) const {
  if (stick_length <= 0.0)
    raise(ErrorCode::InvalidParams, "stick length must be positive");
  double delta = resolved_spacing(n);
  if (delta <= 0.0)
    raise(ErrorCode::InvalidParams, "spacing must be positive");
  if (delta * (n - 1) >= stick_length)
    raise(ErrorCode::InvalidParams,
          "axis span must stay shorter than one stick "
          "(spacing*(n-1) < stick length)");
  double eps = resolved_axis_approach(n);
  if (eps <= 0.0 || eps >= delta)
    raise(ErrorCode::InvalidParams,
          "axis approach must lie strictly between 0 and the spacing");
  std::vector<double> angles = resolved_page_angles(n);
  if (static_cast<int>(angles.size()) != n)
    raise(ErrorCode::InvalidParams, "need one page angle per arc");
  std::set<double> unique(angles.begin(), angles.end());
  if (static_cast<int>(unique.size()) != n)
    raise(ErrorCode::InvalidParams, "page angles must be distinct");
  if (retries < 1)
    raise(ErrorCode::InvalidParams, "retry budget must be at least 1");
  if (length_tolerance <= 0.0)
    raise(ErrorCode::InvalidParams, "length tolerance must be positive");
}

namespace detail {

std::vector<CycleVertex> doubled_cycle(const ArcPresentation& p,
                                       double spacing, double stick_length,
                                       const std::vector<double>& angles) {
  const int n = p.page_count();
  auto axis_point = [&](int r) {
    return Vec3{0.0, 0.0, (r - 1) * spacing};
  };

  std::vector<CycleVertex> cycle;
  cycle.reserve(2 * n);
  int arc = 0, entry = p.arc(0).lo;
  do {
    const Arc& a = p.arc(arc);
    int exit = a.other(entry);
    cycle.push_back({axis_point(entry), entry, -1});

    double zi = (entry - 1) * spacing, zj = (exit - 1) * spacing;
    double half_gap = std::fabs(zj - zi) / 2.0;
    if (half_gap >= stick_length)
      raise(ErrorCode::ApexImpossible,
            "arc endpoints farther apart than two sticks can reach");
    double radial = std::sqrt(stick_length * stick_length -
                              half_gap * half_gap);
    Vec3 apex{radial * std::cos(angles[arc]), radial * std::sin(angles[arc]),
              (zi + zj) / 2.0};
    cycle.push_back({apex, 0, arc});

    auto [c1, c2] = p.pages_at(exit);
    arc = (c1 == arc) ? c2 : c1;
    entry = exit;
  } while (!(arc == 0 && entry == p.arc(0).lo));

  return cycle;
}

EquilateralPolygon cycle_to_polygon(const std::vector<CycleVertex>& cycle,
                                    double stick_length) {
  EquilateralPolygon poly;
  poly.edge_length = stick_length;
  poly.vertices.reserve(cycle.size());
  for (const CycleVertex& v : cycle) poly.vertices.push_back(v.pos);
  return poly;
}

void reduce_cycle_at_row(std::vector<CycleVertex>& cycle, int row,
                         int axis_side, double axis_approach,
                         double stick_length,
                         const std::vector<double>& angles) {
  const int m = static_cast<int>(cycle.size());
  int at = -1;
  for (int i = 0; i < m; ++i)
    if (cycle[i].axis_row == row) at = i;
  if (at < 0) raise(ErrorCode::Internal, "reduction row not in the cycle");

  auto wrap = [&](int i) { return ((i % m) + m) % m; };
  const CycleVertex& apex_in = cycle[wrap(at - 1)];
  const CycleVertex& apex_out = cycle[wrap(at + 1)];
  const CycleVertex& pivot_in = cycle[wrap(at - 2)];
  const CycleVertex& pivot_out = cycle[wrap(at + 2)];
  if (apex_in.page < 0 || apex_out.page < 0 || pivot_in.axis_row < 1 ||
      pivot_out.axis_row < 1)
    raise(ErrorCode::Internal,
          "reduction site is not two intact doubled arcs");

  const double L = stick_length;
  const double eps = axis_approach;

  // Swing the incoming neighbor stick inside its page until its free end
  // hangs at radial distance eps, on the reduced side of its pivot.
  double theta_in = angles[apex_in.page];
  Vec3 hug{eps * std::cos(theta_in), eps * std::sin(theta_in),
           pivot_in.pos.z + axis_side * std::sqrt(L * L - eps * eps)};

  // Swing the outgoing neighbor stick until the gap closes to one stick.
  double theta_out = angles[apex_out.page];
  double psi = solve_unit_gap(hug, pivot_out.pos, theta_out, L, axis_side);
  Vec3 bridge_end{L * std::sin(psi) * std::cos(theta_out),
                  L * std::sin(psi) * std::sin(theta_out),
                  pivot_out.pos.z + axis_side * L * std::cos(psi)};

  // [pivot_in, apex_in, row, apex_out, pivot_out] becomes
  // [pivot_in, hug, bridge_end, pivot_out]. Walking from pivot_out
  // around to pivot_in and appending the two new vertices yields
  // exactly that cyclic order.
  std::vector<CycleVertex> next;
  next.reserve(m - 1);
  for (int i = 2; i <= m - 2; ++i) next.push_back(cycle[wrap(at + i)]);
  next.push_back({hug, 0, apex_in.page});
  next.push_back({bridge_end, 0, apex_out.page});
  cycle = std::move(next);
}

std::vector<double> perturbed_angles(const std::vector<double>& base,
                                     std::uint64_t seed, int attempt) {
  if (attempt == 0) return base;
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double jitter = 0.1 * (2.0 * M_PI / base.size());
  std::vector<double> out(base.size());
  for (size_t i = 0; i < base.size(); ++i)
    out[i] = base[i] + jitter * unit(rng);
  return out;
}

VerifyOutcome verify_polygon(const EquilateralPolygon& poly,
                             const PlanarDiagram& reference,
                             double length_tolerance, std::uint64_t seed,
                             int max_crossings) {
  VerifyOutcome out;
  if (poly.max_abs_edge_deviation() > length_tolerance)
    raise(ErrorCode::Internal, "stick lengths drifted out of tolerance");
  out.clearance = check_embedding(poly);
  if (!out.clearance.embedded())
    raise(ErrorCode::NotEmbedded, "realized polygon self-intersects");

  PlanarDiagram projected = polygon_to_diagram(poly, seed);
  out.projection_crossings = projected.crossing_count();

  bool jones_feasible =
      projected.crossing_count() <= max_crossings &&
      reference.crossing_count() <= max_crossings;
  if (jones_feasible) {
    out.method = KnotCheckMethod::Jones;
    if (!equal_up_to_mirror(jones_polynomial(projected, max_crossings),
                            jones_polynomial(reference, max_crossings)))
      raise(ErrorCode::KnotTypeChanged,
            "projection Jones differs from the input presentation");
  } else {
    out.method = KnotCheckMethod::Determinant;
    if (determinant(projected) != determinant(reference))
      raise(ErrorCode::KnotTypeChanged,
            "projection determinant differs from the input presentation");
  }
  return out;
}

}  // namespace detail

double solve_unit_gap(const Vec3& fixed_point, const Vec3& pivot,
                      double page_angle, double stick_length,
                      int axis_side) {
  const double L = stick_length;
  Vec3 radial{std::cos(page_angle), std::sin(page_angle), 0.0};
  auto moving = [&](double psi) {
    return pivot + radial * (L * std::sin(psi)) +
           Vec3{0.0, 0.0, axis_side * L * std::cos(psi)};
  };
  auto gap = [&](double psi) {
    return distance(fixed_point, moving(psi)) - L;
  };

  const int scan_steps = 1024;
  double prev_psi = 0.0, prev_gap = gap(0.0);
  for (int i = 1; i <= scan_steps; ++i) {
    double psi = M_PI * i / scan_steps;
    double g = gap(psi);
    if (prev_gap == 0.0) return prev_psi;
    if ((prev_gap < 0.0) != (g < 0.0)) {
      double lo = prev_psi, hi = psi, glo = prev_gap;
      for (int iter = 0; iter < 200; ++iter) {
        double mid = (lo + hi) / 2.0;
        double gm = gap(mid);
        if (std::fabs(gm) < 1e-13) return mid;
        if ((glo < 0.0) != (gm < 0.0)) {
          hi = mid;
        } else {
          lo = mid;
          glo = gm;
        }
      }
      double mid = (lo + hi) / 2.0;
      if (std::fabs(gap(mid)) < 1e-12) return mid;
      raise(ErrorCode::NoRootFound, "bisection failed to settle");
    }
    prev_psi = psi;
    prev_gap = g;
  }
  raise(ErrorCode::NoRootFound,
        "unit gap equation has no sign change over the page rotation");
}

EquilateralPolygon realize_doubled(const ArcPresentation& p,
                                   const RealizationParams& params) {
  const int n = p.page_count();
  params.check(n);
  const double delta = params.resolved_spacing(n);
  const std::vector<double> base_angles = params.resolved_page_angles(n);

  std::string last_error = "no attempts made";
  for (int attempt = 0; attempt < params.retries; ++attempt) {
    std::vector<double> angles =
        detail::perturbed_angles(base_angles, params.seed, attempt);
    try {
      auto cycle =
          detail::doubled_cycle(p, delta, params.stick_length, angles);
      EquilateralPolygon poly =
          detail::cycle_to_polygon(cycle, params.stick_length);
      if (poly.max_abs_edge_deviation() > params.length_tolerance)
        raise(ErrorCode::Internal, "doubled sticks drifted in length");
      if (!check_embedding(poly).embedded())
        raise(ErrorCode::NotEmbedded,
              "doubled polygon self-intersects with these page angles");
      return poly;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotEmbedded) throw;
      last_error = e.what();
    }
  }
  raise(ErrorCode::RetriesExhausted,
        "doubled realization failed after " +
            std::to_string(params.retries) + " attempts: " + last_error);
}

VerifiedRealization reduce_at_extremes(const ArcPresentation& p,
                                       const RealizationParams& params) {
  const int n = p.page_count();
  if (n < 3)
    raise(ErrorCode::InvalidParams,
          "reduction needs at least 3 arcs; realize the doubled form "
          "instead");
  params.check(n);

  ArcPresentation normalized = normalize_no_extremal_arc(p);
  // The four sticks of the top reduction must be disjoint from the four
  // of the bottom one, i.e. no arc may join the two extremes.
  if (normalized.has_arc(Arc(1, n)))
    raise(ErrorCode::Internal, "normalization left an extremal arc");

  const PlanarDiagram reference = arcpres_to_diagram(p);
  const double delta = params.resolved_spacing(n);
  const double eps0 = params.resolved_axis_approach(n);
  const std::vector<double> base_angles = params.resolved_page_angles(n);

  std::string last_error = "no attempts made";
  for (int attempt = 0; attempt < params.retries; ++attempt) {
    double eps = std::ldexp(eps0, -attempt);
    std::vector<double> angles =
        detail::perturbed_angles(base_angles, params.seed, attempt);
    try {
      auto cycle = detail::doubled_cycle(normalized, delta,
                                         params.stick_length, angles);
      detail::reduce_cycle_at_row(cycle, 1, -1, eps, params.stick_length,
                                  angles);
      detail::reduce_cycle_at_row(cycle, n, +1, eps, params.stick_length,
                                  angles);
      EquilateralPolygon poly =
          detail::cycle_to_polygon(cycle, params.stick_length);

      detail::VerifyOutcome outcome = detail::verify_polygon(
          poly, reference, params.length_tolerance,
          params.seed ^ (0xd1b54a32d192ed03ULL + attempt),
          params.invariant_max_crossings);

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
        "reduction failed after " + std::to_string(params.retries) +
            " attempts: " + last_error);
}

}  // namespace equiknot
