#pragma once

#include "gridtester/property.hpp"

namespace gridtester {

// Tie-breaking perturbation: returns a dual-valued copy of f whose pair
// weights are all nonzero and whose positive-weight pair set equals f's.
//
// Procedure: build the digraph T with an edge y -> x for every zero-slack
// ordered pair (f(x) - f(y) - d(x,y) = 0). T is acyclic by positivity of the
// pseudo-distance. Repeatedly pick the smallest sink with an incoming edge
// and lower its value by a fresh infinitesimal 1/t; the coefficients shrink
// strictly, so earlier adjustments are never re-zeroed.
DualFunctionTable perturb(const FunctionTable& f, const PropertyParams& p);

}  // namespace gridtester
