#include "equiknot/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "equiknot/error.hpp"

namespace equiknot {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string polygon_to_json(const EquilateralPolygon& poly, double clearance,
                            const ArcPresentation* source,
                            const std::string& source_name) {
  nlohmann::ordered_json j;
  auto verts = nlohmann::ordered_json::array();
  for (const Vec3& v : poly.vertices) verts.push_back({v.x, v.y, v.z});
  j["vertices"] = verts;
  j["edge_length"] = poly.edge_length;
  j["clearance"] = clearance;
  if (source) {
    nlohmann::ordered_json src;
    if (!source_name.empty()) src["name"] = source_name;
    src["n"] = source->page_count();
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : source->arcs()) arcs.push_back({a.lo, a.hi});
    src["arcs"] = arcs;
    j["source"] = src;
  } else if (!source_name.empty()) {
    j["source"] = source_name;
  } else {
    j["source"] = nullptr;
  }
  return j.dump();
}

EquilateralPolygon polygon_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::SyntaxError, std::string("bad polygon JSON: ") + e.what());
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    raise(ErrorCode::SyntaxError, "polygon JSON needs a \"vertices\" array");
  EquilateralPolygon poly;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 3)
      raise(ErrorCode::SyntaxError, "each vertex must be [x, y, z]");
    poly.vertices.push_back(
        {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()});
  }
  if (poly.vertices.size() < 3)
    raise(ErrorCode::SyntaxError, "polygon needs at least 3 vertices");
  poly.edge_length = j.value("edge_length", 1.0);
  return poly;
}

std::string polygon_to_csv(const EquilateralPolygon& poly) {
  std::ostringstream os;
  os << "x,y,z\r\n";
  for (const Vec3& v : poly.vertices)
    os << format_double(v.x) << "," << format_double(v.y) << ","
       << format_double(v.z) << "\r\n";
  return os.str();
}

std::string polygon_to_obj(const EquilateralPolygon& poly) {
  std::ostringstream os;
  for (const Vec3& v : poly.vertices)
    os << "v " << format_double(v.x) << " " << format_double(v.y) << " "
       << format_double(v.z) << "\n";
  os << "l";
  for (size_t i = 1; i <= poly.vertices.size(); ++i) os << " " << i;
  os << " 1\n";
  return os.str();
}

std::string polygon_to_vect(const EquilateralPolygon& poly) {
  // One closed polyline (negative vertex count), no colors.
  std::ostringstream os;
  os << "VECT\n1 " << poly.vertices.size() << " 0\n-"
     << poly.vertices.size() << "\n0\n";
  for (const Vec3& v : poly.vertices)
    os << format_double(v.x) << " " << format_double(v.y) << " "
       << format_double(v.z) << "\n";
  return os.str();
}

std::string laurent_to_json(const Laurent& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c;
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) raise(ErrorCode::IoError, "cannot write " + tmp);
    out << content;
    if (!out.good()) raise(ErrorCode::IoError, "short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    raise(ErrorCode::IoError, "cannot move " + tmp + " into place");
}

}  // namespace equiknot
