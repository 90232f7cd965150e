#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "equiknot/arc_presentation.hpp"
#include "equiknot/laurent.hpp"

namespace equiknot {

struct KnotTableEntry {
  std::string name;
  int crossing_number = 0;
  bool alternating = true;
  bool prime = true;
  std::vector<std::pair<int, int>> arcs;
  /// Jones polynomial as (exponent, coefficient) pairs, stored in the
  /// mirror-canonical form (the lexicographically smaller of the value
  /// and its mirror).
  std::vector<std::pair<int, std::int64_t>> jones_terms;

  ArcPresentation presentation() const;
  Laurent expected_jones() const;
  bool nontrivial() const { return crossing_number > 0; }
};

/// Minimal-arc presentations for the unknot and every prime knot through
/// 8 crossings. The presentations are data; verify_entry enforces that
/// each one reproduces its stored Jones polynomial.
const std::vector<KnotTableEntry>& builtin_table();

const KnotTableEntry* find_entry(const std::string& name);

/// Presentation validates, its recomputed Jones matches jones_terms up
/// to mirroring, and the arc count respects n <= c+2 (n <= c for
/// non-alternating prime entries).
void verify_entry(const KnotTableEntry& entry, int max_crossings = 24);

}  // namespace equiknot
