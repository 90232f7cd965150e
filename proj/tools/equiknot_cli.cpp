// equiknot: realize arc presentations as equilateral stick knots and
// machine-check what the construction claims.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/compose.hpp"
#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/io.hpp"
#include "equiknot/knot_table.hpp"
#include "equiknot/planar_diagram.hpp"
#include "equiknot/projection.hpp"
#include "equiknot/realize.hpp"
#include "equiknot/report.hpp"

namespace {

using namespace equiknot;

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::optional<double> spacing;
  std::optional<double> epsilon;
  int max_crossings = kDefaultMaxCrossings;
};

RealizationParams make_params(const GlobalOpts& g) {
  RealizationParams p;
  p.seed = g.seed;
  p.spacing = g.spacing;
  p.axis_approach = g.epsilon;
  p.invariant_max_crossings = g.max_crossings;
  return p;
}

struct Input {
  ArcPresentation presentation;
  std::string name;                  // table name or file stem
  const KnotTableEntry* entry = nullptr;
};

Input load_input(const std::string& name_arg, const std::string& file_arg) {
  if (!file_arg.empty()) {
    std::string text = read_file(file_arg);
    ArcPresentation p = text.find('{') != std::string::npos
                            ? parse_json(text)
                            : parse_text(text);
    std::string stem = file_arg;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) stem = stem.substr(slash + 1);
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos) stem = stem.substr(0, dot);
    return {p, stem, nullptr};
  }
  const KnotTableEntry* entry = find_entry(name_arg);
  if (!entry)
    raise(ErrorCode::IoError,
          "unknown table entry '" + name_arg +
              "'; run `equiknot table` to list names");
  verify_entry(*entry);  // self-validating data: check on load
  return {entry->presentation(), entry->name, entry};
}

int fail_with_json(const Error& e) {
  nlohmann::ordered_json j;
  j["error"] = error_code_name(e.code());
  j["message"] = e.what();
  std::cout << j.dump() << "\n";
  return 1;
}

std::string polygon_in_format(const EquilateralPolygon& poly,
                              const std::string& format, double clearance,
                              const ArcPresentation* source,
                              const std::string& name) {
  if (format == "json")
    return polygon_to_json(poly, clearance, source, name);
  if (format == "csv") return polygon_to_csv(poly);
  if (format == "obj") return polygon_to_obj(poly);
  if (format == "vect") return polygon_to_vect(poly);
  raise(ErrorCode::IoError, "polygon formats: json, csv, obj, vect");
}

const char* method_name(KnotCheckMethod m) {
  return m == KnotCheckMethod::Jones ? "jones" : "determinant";
}

BoundsReport bounds_for_input(const Input& in, int stick_count) {
  if (in.entry)
    return bounds_for_knot(in.name, stick_count, in.entry->crossing_number,
                           in.entry->alternating, in.entry->prime,
                           in.entry->nontrivial());
  BoundsReport r;  // no census metadata for file inputs
  r.name = in.name;
  r.stick_count = stick_count;
  r.nontrivial = false;
  return r;
}

// ---------------------------------------------------------------- realize

int cmd_realize(const GlobalOpts& g, const std::string& name,
                const std::string& file, bool no_reduce,
                const std::string& format, std::string out_path,
                bool to_stdout) {
  Input in = load_input(name, file);
  RealizationParams params = make_params(g);

  EquilateralPolygon poly;
  ClearanceReport clearance;
  std::string method = "none";
  bool reduced = false;

  if (no_reduce || in.presentation.page_count() < 3) {
    poly = realize_doubled(in.presentation, params);
    clearance = check_embedding(poly);
  } else {
    VerifiedRealization r = reduce_at_extremes(in.presentation, params);
    poly = std::move(r.polygon);
    clearance = std::move(r.clearance);
    method = method_name(r.method);
    reduced = true;
  }

  // The stick-count bounds are claims about the reduced construction;
  // the doubled form is reported without them.
  BoundsReport bounds = reduced
                            ? bounds_for_input(in, poly.edge_count())
                            : BoundsReport{in.name, poly.edge_count(), 0,
                                           false, false, 0, true, 0, true};
  std::string payload = polygon_in_format(poly, format,
                                          clearance.min_clearance,
                                          &in.presentation, in.name);
  if (to_stdout) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
  } else {
    if (out_path.empty()) out_path = in.name + "." + format;
    write_file_atomic(out_path, payload);
  }

  std::cout << bounds.to_text() << "\n";
  std::cout << "form: " << (reduced ? "reduced" : "doubled")
            << ", clearance: " << format_double(clearance.min_clearance)
            << ", max edge deviation: "
            << format_double(
                   *std::max_element(clearance.edge_deviations.begin(),
                                     clearance.edge_deviations.end(),
                                     [](double a, double b) {
                                       return std::fabs(a) < std::fabs(b);
                                     }))
            << ", type check: " << method << "\n";
  if (!to_stdout) std::cout << "wrote " << out_path << "\n";

  bool ok = clearance.embedded() && bounds.pass();
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- compose

int cmd_compose(const GlobalOpts& g, const std::string& name1,
                const std::string& name2, const std::string& file1,
                const std::string& file2, std::optional<int> arc1,
                std::optional<int> arc2, const std::string& format,
                std::string out_path, bool to_stdout) {
  Input in1 = load_input(name1, file1);
  Input in2 = load_input(name2, file2);
  RealizationParams params = make_params(g);

  CompositePlan plan =
      choose_splice_arcs(in1.presentation, in2.presentation, arc1, arc2);
  MergedPresentation merged = merge_presentations(plan);
  VerifiedRealization r = realize_composite(merged, params);

  std::string comp_name = in1.name + "#" + in2.name;
  BoundsReport bounds;
  if (in1.entry && in2.entry) {
    bounds = bounds_for_composite(
        comp_name, r.polygon.edge_count(), in1.entry->crossing_number,
        in1.entry->alternating, in1.entry->prime,
        in2.entry->crossing_number, in2.entry->alternating,
        in2.entry->prime);
  } else {
    bounds.name = comp_name;
    bounds.stick_count = r.polygon.edge_count();
    bounds.nontrivial = false;
  }

  std::string payload =
      polygon_in_format(r.polygon, format, r.clearance.min_clearance,
                        &merged.presentation, comp_name);
  if (to_stdout) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << "\n";
  } else {
    if (out_path.empty()) out_path = in1.name + "_" + in2.name + "." + format;
    write_file_atomic(out_path, payload);
  }

  std::cout << "merged presentation:\n"
            << serialize_text(merged.presentation);
  std::cout << bounds.to_text() << "\n";
  std::cout << "clearance: " << format_double(r.clearance.min_clearance)
            << ", type check: " << method_name(r.method) << "\n";
  if (!to_stdout) std::cout << "wrote " << out_path << "\n";

  return (r.clearance.embedded() && bounds.pass()) ? 0 : 1;
}

// --------------------------------------------------------------- invariant

int cmd_invariant(const GlobalOpts& g, const std::string& name,
                  const std::string& file, const std::string& from_polygon) {
  PlanarDiagram diagram;
  std::string label;
  if (!from_polygon.empty()) {
    EquilateralPolygon poly = polygon_from_json(read_file(from_polygon));
    diagram = polygon_to_diagram(poly, g.seed);
    label = from_polygon;
  } else {
    Input in = load_input(name, file);
    diagram = arcpres_to_diagram(in.presentation);
    label = in.name;
  }

  std::cout << "name: " << label << "\n";
  std::cout << "crossings: " << diagram.crossing_count() << "\n";
  std::cout << "determinant: " << determinant(diagram) << "\n";
  try {
    Laurent jones = jones_polynomial(diagram, g.max_crossings);
    std::cout << "jones: " << jones.to_string() << "\n";
    std::cout << "jones_canonical: "
              << jones.mirror_canonical().to_string() << "\n";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::TooManyCrossings) throw;
    std::cout << "jones: unavailable (" << e.what() << ")\n";
  }
  return 0;
}

// ------------------------------------------------------------------ export

int cmd_export(const GlobalOpts& g, const std::string& name,
               const std::string& file, const std::string& format,
               const std::string& out_path) {
  Input in = load_input(name, file);
  std::string payload;
  if (format == "pd") {
    payload = arcpres_to_diagram(in.presentation).pd_code();
  } else if (format == "json") {
    payload = serialize_json(in.presentation) + "\n";
  } else if (format == "text") {
    payload = serialize_text(in.presentation);
  } else if (format == "jones") {
    payload = laurent_to_json(jones_polynomial(
                  arcpres_to_diagram(in.presentation), g.max_crossings)) +
              "\n";
  } else {
    raise(ErrorCode::IoError, "export formats: pd, json, text, jones");
  }
  if (out_path.empty())
    std::cout << payload;
  else
    write_file_atomic(out_path, payload);
  return 0;
}

// ------------------------------------------------------------------- batch

struct BatchRow {
  std::string name;
  int n = 0;
  int crossing_number = 0;
  int sticks = 0;
  double max_edge_deviation = 0.0;
  double clearance = 0.0;
  std::string type_check;
  bool invariant_pass = false;
  bool bounds_pass = false;
  bool reduced = false;
  bool pass = false;
  std::string error;
};

BatchRow run_batch_entry(const GlobalOpts& g, const KnotTableEntry& entry) {
  BatchRow row;
  row.name = entry.name;
  row.crossing_number = entry.crossing_number;
  row.n = static_cast<int>(entry.arcs.size());
  try {
    verify_entry(entry);
    RealizationParams params = make_params(g);
    EquilateralPolygon poly;
    ClearanceReport clearance;
    if (entry.arcs.size() < 3) {
      poly = realize_doubled(entry.presentation(), params);
      clearance = check_embedding(poly);
      row.type_check = "doubled";
      row.invariant_pass = true;
    } else {
      VerifiedRealization r =
          reduce_at_extremes(entry.presentation(), params);
      poly = std::move(r.polygon);
      clearance = std::move(r.clearance);
      row.type_check = method_name(r.method);
      row.invariant_pass = true;
      row.reduced = true;
    }
    row.sticks = poly.edge_count();
    row.max_edge_deviation = poly.max_abs_edge_deviation();
    row.clearance = clearance.min_clearance;
    BoundsReport bounds =
        bounds_for_knot(entry.name, row.sticks, entry.crossing_number,
                        entry.alternating, entry.prime, entry.nontrivial());
    row.bounds_pass = bounds.pass();
    row.pass = clearance.embedded() && row.invariant_pass && row.bounds_pass;
  } catch (const Error& e) {
    row.error = std::string(error_code_name(e.code())) + ": " + e.what();
    row.pass = false;
  }
  return row;
}

int cmd_batch(const GlobalOpts& g, std::vector<std::string> names,
              const std::string& format, const std::string& out_path) {
  std::vector<const KnotTableEntry*> selection;
  if (names.empty()) {
    for (const KnotTableEntry& e : builtin_table()) selection.push_back(&e);
  } else {
    for (const std::string& n : names) {
      const KnotTableEntry* e = find_entry(n);
      if (!e) raise(ErrorCode::IoError, "unknown table entry '" + n + "'");
      selection.push_back(e);
    }
  }
  std::sort(selection.begin(), selection.end(),
            [](const KnotTableEntry* a, const KnotTableEntry* b) {
              return a->name < b->name;
            });

  std::vector<BatchRow> rows;
  rows.reserve(selection.size());
  for (const KnotTableEntry* e : selection)
    rows.push_back(run_batch_entry(g, *e));

  std::string payload;
  if (format == "json") {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const BatchRow& r : rows) {
      nlohmann::ordered_json o;
      o["name"] = r.name;
      o["n"] = r.n;
      o["crossing_number"] = r.crossing_number;
      o["sticks"] = r.sticks;
      o["max_edge_deviation"] = r.max_edge_deviation;
      o["clearance"] = r.clearance;
      o["type_check"] = r.type_check;
      o["invariant_pass"] = r.invariant_pass;
      o["bounds_pass"] = r.bounds_pass;
      o["reduced"] = r.reduced;
      o["pass"] = r.pass;
      if (!r.error.empty()) o["error"] = r.error;
      j.push_back(o);
    }
    payload = j.dump() + "\n";
  } else if (format == "csv") {
    std::ostringstream os;
    os << "name,n,crossing_number,sticks,max_edge_deviation,clearance,"
          "type_check,invariant_pass,bounds_pass,reduced,pass\r\n";
    for (const BatchRow& r : rows)
      os << r.name << "," << r.n << "," << r.crossing_number << ","
         << r.sticks << "," << format_double(r.max_edge_deviation) << ","
         << format_double(r.clearance) << "," << r.type_check << ","
         << (r.invariant_pass ? "true" : "false") << ","
         << (r.bounds_pass ? "true" : "false") << ","
         << (r.reduced ? "true" : "false") << ","
         << (r.pass ? "true" : "false") << "\r\n";
    payload = os.str();
  } else {
    std::ostringstream os;
    for (const BatchRow& r : rows) {
      os << r.name << ": ";
      if (!r.error.empty()) {
        os << "ERROR " << r.error << "\n";
        continue;
      }
      os << r.sticks << " sticks (n=" << r.n << ", c=" << r.crossing_number
         << "), clearance " << format_double(r.clearance) << ", check "
         << r.type_check << ", " << (r.pass ? "pass" : "FAIL") << "\n";
    }
    payload = os.str();
  }

  if (out_path.empty())
    std::cout << payload;
  else
    write_file_atomic(out_path, payload);

  for (const BatchRow& r : rows)
    if (!r.pass) return 1;
  return 0;
}

// ------------------------------------------------------------------- table

int cmd_table(bool verify) {
  for (const KnotTableEntry& e : builtin_table()) {
    std::cout << e.name << ": n=" << e.arcs.size()
              << ", c=" << e.crossing_number
              << (e.alternating ? ", alternating" : ", non-alternating")
              << (e.prime ? ", prime" : "");
    if (verify) {
      try {
        verify_entry(e);
        std::cout << ", self-check ok";
      } catch (const Error& err) {
        std::cout << ", SELF-CHECK FAILED: " << err.what();
      }
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equilateral stick realizations of knots from arc "
               "presentations"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for all randomized choices")
      ->envname("EQUIKNOT_SEED");
  app.add_option("--spacing", g.spacing,
                 "axis spacing between binding indices (default 1/(10n))")
      ->envname("EQUIKNOT_SPACING");
  app.add_option("--epsilon", g.epsilon,
                 "axis approach distance (default spacing/100)")
      ->envname("EQUIKNOT_EPSILON");
  app.add_option("--max-crossings", g.max_crossings,
                 "bracket state-sum ceiling")
      ->envname("EQUIKNOT_MAX_CROSSINGS");

  // validate
  auto* validate = app.add_subcommand("validate", "check an arc presentation");
  std::string v_name, v_file;
  validate->add_option("name", v_name, "table entry name");
  validate->add_option("--file", v_file, "presentation file (text or JSON)");

  // realize
  auto* realize = app.add_subcommand(
      "realize", "build an equilateral stick polygon from a presentation");
  std::string r_name, r_file, r_format = "json", r_out;
  bool r_noreduce = false, r_stdout = false;
  realize->add_option("name", r_name, "table entry name");
  realize->add_option("--file", r_file, "presentation file");
  realize->add_flag("--no-reduce", r_noreduce,
                    "emit the doubled 2n-stick form");
  realize->add_option("--format", r_format, "json|csv|obj|vect")
      ->check(CLI::IsMember({"json", "csv", "obj", "vect"}));
  realize->add_option("-o,--out", r_out, "output path");
  realize->add_flag("--stdout", r_stdout, "print the polygon instead");

  // compose
  auto* compose = app.add_subcommand(
      "compose", "realize the connected sum of two presentations");
  std::string c_name1, c_name2, c_file1, c_file2, c_format = "json", c_out;
  bool c_stdout = false;
  int c_arc1 = -1, c_arc2 = -1;
  compose->add_option("first", c_name1, "table entry name");
  compose->add_option("second", c_name2, "table entry name");
  compose->add_option("--file1", c_file1, "first presentation file");
  compose->add_option("--file2", c_file2, "second presentation file");
  compose->add_option("--arc1", c_arc1, "spliced page index in factor 1");
  compose->add_option("--arc2", c_arc2, "spliced page index in factor 2");
  compose->add_option("--format", c_format, "json|csv|obj|vect")
      ->check(CLI::IsMember({"json", "csv", "obj", "vect"}));
  compose->add_option("-o,--out", c_out, "output path");
  compose->add_flag("--stdout", c_stdout, "print the polygon instead");

  // invariant
  auto* invariant = app.add_subcommand(
      "invariant", "Jones polynomial and determinant of a knot");
  std::string i_name, i_file, i_poly;
  invariant->add_option("name", i_name, "table entry name");
  invariant->add_option("--file", i_file, "presentation file");
  invariant->add_option("--from-polygon", i_poly, "polygon JSON file");

  // export
  auto* exportc = app.add_subcommand(
      "export", "export a presentation or its diagram");
  std::string e_name, e_file, e_format = "pd", e_out;
  exportc->add_option("name", e_name, "table entry name");
  exportc->add_option("--file", e_file, "presentation file");
  exportc->add_option("--format", e_format, "pd|json|text|jones")
      ->check(CLI::IsMember({"pd", "json", "text", "jones"}));
  exportc->add_option("-o,--out", e_out, "output path");

  // batch
  auto* batch = app.add_subcommand(
      "batch", "realize and verify a set of table entries");
  std::vector<std::string> b_names;
  std::string b_format = "text", b_out;
  batch->add_option("names", b_names, "table entries (default: all)");
  batch->add_option("--format", b_format, "text|csv|json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  batch->add_option("-o,--out", b_out, "output path");

  // table
  auto* table = app.add_subcommand("table", "list the built-in knot table");
  bool t_verify = false;
  table->add_flag("--verify", t_verify, "recompute every stored invariant");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      Input in = load_input(v_name, v_file);
      std::cout << "valid: n=" << in.presentation.page_count() << "\n";
      return 0;
    }
    if (realize->parsed())
      return cmd_realize(g, r_name, r_file, r_noreduce, r_format, r_out,
                         r_stdout);
    if (compose->parsed())
      return cmd_compose(g, c_name1, c_name2, c_file1, c_file2,
                         c_arc1 >= 0 ? std::optional<int>(c_arc1)
                                     : std::nullopt,
                         c_arc2 >= 0 ? std::optional<int>(c_arc2)
                                     : std::nullopt,
                         c_format, c_out, c_stdout);
    if (invariant->parsed()) return cmd_invariant(g, i_name, i_file, i_poly);
    if (exportc->parsed())
      return cmd_export(g, e_name, e_file, e_format, e_out);
    if (batch->parsed()) return cmd_batch(g, b_names, b_format, b_out);
    if (table->parsed()) return cmd_table(t_verify);
  } catch (const Error& e) {
    return fail_with_json(e);
  } catch (const std::exception& e) {
    nlohmann::ordered_json j;
    j["error"] = "Internal";
    j["message"] = e.what();
    std::cout << j.dump() << "\n";
    return 1;
  }
  return 0;
}
