#include "equiknot/report.hpp"

#include <cmath>
#include <sstream>

namespace equiknot {

long stick_upper_bound(int c, bool alternating, bool prime) {
  return (prime && !alternating) ? 2L * c - 2 : 2L * c + 2;
}

long stick_lower_sanity(int c) {
  return static_cast<long>(std::ceil((7.0 + std::sqrt(8.0 * c + 1.0)) / 2.0));
}

BoundsReport bounds_for_knot(const std::string& name, int stick_count,
                             int crossing_number, bool alternating,
                             bool prime, bool nontrivial) {
  BoundsReport r;
  r.name = name;
  r.stick_count = stick_count;
  r.crossing_number = crossing_number;
  r.nontrivial = nontrivial;
  if (!nontrivial) {
    r.upper_bound = 0;
    r.lower_sanity = 0;
    return r;  // both checks vacuous for the unknot
  }
  r.upper_bound = stick_upper_bound(crossing_number, alternating, prime);
  r.upper_pass = stick_count <= r.upper_bound;
  r.lower_sanity = stick_lower_sanity(crossing_number);
  r.lower_pass = stick_count >= 6 && stick_count >= r.lower_sanity;
  return r;
}

BoundsReport bounds_for_composite(const std::string& name, int stick_count,
                                  int c1, bool alt1, bool prime1, int c2,
                                  bool alt2, bool prime2) {
  BoundsReport r;
  r.name = name;
  r.stick_count = stick_count;
  r.crossing_number = c1 + c2;
  r.composite = true;
  r.upper_bound = 2L * c1 + 2L * c2;
  if (prime1 && !alt1) r.upper_bound -= 4;
  if (prime2 && !alt2) r.upper_bound -= 4;
  r.upper_pass = stick_count <= r.upper_bound;
  r.lower_sanity = stick_lower_sanity(r.crossing_number);
  r.lower_pass = stick_count >= 6 && stick_count >= r.lower_sanity;
  return r;
}

std::string BoundsReport::to_text() const {
  std::ostringstream os;
  os << name << ": " << stick_count << " sticks";
  if (!nontrivial) {
    os << " (bounds not applicable)";
    return os.str();
  }
  os << ", upper bound " << upper_bound
     << (composite ? " (composite)" : "") << " ["
     << (upper_pass ? "pass" : "FAIL") << "]"
     << ", sanity floor " << lower_sanity << " ["
     << (lower_pass ? "pass" : "FAIL") << "]";
  return os.str();
}

}  // namespace equiknot
