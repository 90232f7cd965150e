#pragma once

#include <optional>
#include <string>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/laurent.hpp"
#include "equiknot/polygon.hpp"

namespace equiknot {

/// %.17g: enough significant digits for doubles to round-trip exactly.
std::string format_double(double v);

/// {"vertices": [[x,y,z],...], "edge_length": L, "clearance": c,
///  "source": {...} or name string or null}
std::string polygon_to_json(const EquilateralPolygon& poly, double clearance,
                            const ArcPresentation* source = nullptr,
                            const std::string& source_name = "");
EquilateralPolygon polygon_from_json(const std::string& text);

/// One vertex per line, fields x,y,z (RFC 4180; numeric fields need no
/// quoting).
std::string polygon_to_csv(const EquilateralPolygon& poly);

/// Wavefront OBJ polyline (v records plus a closed l record).
std::string polygon_to_obj(const EquilateralPolygon& poly);

/// Geomview VECT with one closed polyline.
std::string polygon_to_vect(const EquilateralPolygon& poly);

/// {"exponent": coefficient, ...} with string keys in JSON.
std::string laurent_to_json(const Laurent& p);

std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace equiknot
