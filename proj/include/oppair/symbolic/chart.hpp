#pragma once

#include <array>
#include <string>

#include "oppair/symbolic/rational_fn.hpp"

namespace oppair::symbolic {

using Coords = std::array<Var, 2>;
using Pair = std::array<RationalFn, 2>;

// Coordinate change (source) -> (target).
struct ChartMap {
  std::string name;
  Coords source;
  Coords target;
  Pair forward;  // target coordinates as functions of the source ones
  Pair inverse;  // source coordinates as functions of the target ones
};

// d(f1, f2) / d(a, b).
RationalFn jacobian_det(const Pair& f, const Coords& wrt);
inline RationalFn jacobian_det(const ChartMap& m) { return jacobian_det(m.forward, m.source); }

// Substitute coords[i] := values[i] in every component of f.
Pair substitute(const Pair& f, const Coords& coords, const Pair& values);

// Order of the pole of `form_factor` along {divisor = 0}: multiplicity of
// the divisor in the denominator minus that in the numerator.
int pole_order(const RationalFn& form_factor, const Poly& divisor);

}  // namespace oppair::symbolic
