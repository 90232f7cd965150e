#pragma once

#include <string>

namespace equiknot {

/// Stick-count bookkeeping for one realized knot against the
/// crossing-number bounds: upper 2c+2 (2c-2 for non-alternating prime),
/// composite upper 2c1+2c2 less 4 per non-alternating prime factor, and
/// the sanity floor ceil((7+sqrt(8c+1))/2).
struct BoundsReport {
  std::string name;
  int stick_count = 0;
  int crossing_number = 0;
  bool nontrivial = true;
  bool composite = false;

  long upper_bound = 0;
  bool upper_pass = true;

  long lower_sanity = 0;
  bool lower_pass = true;

  bool pass() const { return upper_pass && lower_pass; }
  std::string to_text() const;
};

long stick_upper_bound(int crossing_number, bool alternating, bool prime);
long stick_lower_sanity(int crossing_number);

BoundsReport bounds_for_knot(const std::string& name, int stick_count,
                             int crossing_number, bool alternating,
                             bool prime, bool nontrivial);

BoundsReport bounds_for_composite(const std::string& name, int stick_count,
                                  int c1, bool alt1, bool prime1, int c2,
                                  bool alt2, bool prime2);

}  // namespace equiknot
