#pragma once

#include <cstdint>

#include "equiknot/laurent.hpp"
#include "equiknot/planar_diagram.hpp"

namespace equiknot {

/// Hard ceiling for the 2^c bracket state sum unless callers raise it.
inline constexpr int kDefaultMaxCrossings = 16;

/// Kauffman bracket in the variable A, by depth-first enumeration of all
/// 2^c smoothings. The crossing-free unknot diagram evaluates to 1.
/// Throws TooManyCrossings above max_crossings.
Laurent kauffman_bracket(const PlanarDiagram& d,
                         int max_crossings = kDefaultMaxCrossings);

/// Jones polynomial in t: (-A)^(-3w) * bracket, re-expressed with
/// t = A^-4 (exponents of A stay multiples of 4 for knots).
Laurent jones_polynomial(const PlanarDiagram& d,
                         int max_crossings = kDefaultMaxCrossings);

/// Knot determinant |det G| for a Goeritz matrix G of a checkerboard
/// coloring, by fraction-free integer elimination. Independent of the
/// bracket; must agree with |jones(-1)| whenever both are computed.
std::int64_t determinant(const PlanarDiagram& d);

}  // namespace equiknot
