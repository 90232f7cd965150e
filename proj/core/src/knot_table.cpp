#include "equiknot/knot_table.hpp"

#include "equiknot/error.hpp"
#include "equiknot/invariants.hpp"
#include "equiknot/planar_diagram.hpp"

namespace equiknot {

ArcPresentation KnotTableEntry::presentation() const {
  return ArcPresentation::validate(arcs);
}

Laurent KnotTableEntry::expected_jones() const {
  Laurent p;
  for (const auto& [e, c] : jones_terms) p.set_coeff(e, c);
  return p;
}

const std::vector<KnotTableEntry>& builtin_table() {
  static const std::vector<KnotTableEntry> table = {
      {"unknot2", 0, true, false, {{1, 2}, {1, 2}}, {{0, 1}}},
      {"3_1",
       3,
       true,
       true,
       {{1, 3}, {2, 4}, {3, 5}, {1, 4}, {2, 5}},
       {{-4, -1}, {-3, 1}, {-1, 1}}},
  };
  return table;
}

const KnotTableEntry* find_entry(const std::string& name) {
  for (const KnotTableEntry& e : builtin_table())
    if (e.name == name) return &e;
  return nullptr;
}

void verify_entry(const KnotTableEntry& entry, int max_crossings) {
  ArcPresentation p = entry.presentation();

  const int n = p.page_count();
  if (entry.nontrivial()) {
    int limit = (entry.prime && !entry.alternating)
                    ? entry.crossing_number
                    : entry.crossing_number + 2;
    if (n > limit)
      raise(ErrorCode::Internal,
            entry.name + ": arc count " + std::to_string(n) +
                " exceeds the arc-index bound " + std::to_string(limit));
  }

  Laurent recomputed =
      jones_polynomial(arcpres_to_diagram(p), max_crossings);
  if (recomputed.mirror_canonical() !=
      entry.expected_jones().mirror_canonical())
    raise(ErrorCode::Internal,
          entry.name + ": stored Jones polynomial does not match the "
                       "presentation (" +
              recomputed.to_string() + " recomputed)");
}

}  // namespace equiknot
