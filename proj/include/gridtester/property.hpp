#pragma once

#include <optional>

#include "gridtester/function_table.hpp"
#include "gridtester/hpairs.hpp"

namespace gridtester {

// The (alpha,beta)-bounded-derivative property: every unit coordinate
// increment changes f by an amount in [alpha, beta]. Monotonicity is
// (0, +inf); c-Lipschitz is (-c, +c).
struct PropertyParams {
    ExtValue alpha;
    ExtValue beta;

    PropertyParams(ExtValue a, ExtValue b) : alpha(std::move(a)), beta(std::move(b)) {
        if (!(alpha < beta)) throw UsageError("property parameters require alpha < beta");
        if (alpha.is_pos_inf() || beta.is_neg_inf())
            throw UsageError("no value satisfies these property parameters");
    }

    static PropertyParams monotone() { return {ExtValue(0), ExtValue::pos_inf()}; }
    static PropertyParams lipschitz(const Rational& c) {
        if (c.sign() <= 0) throw UsageError("lipschitz constant must be positive");
        return {ExtValue(-c), ExtValue(c)};
    }

    bool is_monotone_like() const { return beta.is_pos_inf(); }
    std::string str() const { return "alpha=" + alpha.str() + " beta=" + beta.str(); }
};

// Coordinate-wise minimum: the maximal point below both arguments.
Point hcd(const Point& x, const Point& y);
PointIx hcd(const Hypergrid& g, PointIx x, PointIx y);

// Closed form of the pseudo-distance: beta*|x - hcd|_1 - alpha*|y - hcd|_1
// with 0*(+-inf) = 0. Asymmetric, possibly negative, never -inf.
ExtValue pseudo_distance(const Hypergrid& g, const PropertyParams& p, PointIx x, PointIx y);

// Reference oracle: exact shortest-path length from x to y in the unit-step
// digraph where increments cost -alpha and decrements cost beta. Finite
// parameters only.
ExtValue shortest_path_distance(const Hypergrid& g, const PropertyParams& p, PointIx x,
                                PointIx y);

// One side of the violation weight: f(x) - f(y) - d(x,y), taken to be -inf
// when d(x,y) = +inf (the constraint is vacuous) or when both values are
// infinite with the same sign.
ExtValue weight_branch(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y);
DualValue weight_branch(const DualFunctionTable& f, const PropertyParams& p, PointIx x,
                        PointIx y);

// w(x,y) = max of the two branches; symmetric, positive exactly on violations.
ExtValue weight(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y);
DualValue weight(const DualFunctionTable& f, const PropertyParams& p, PointIx x, PointIx y);

bool is_violation(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y);
bool is_violation(const DualFunctionTable& f, const PropertyParams& p, PointIx x, PointIx y);

struct WitnessPair {
    PointIx x = 0;
    PointIx y = 0;
};

// None iff f satisfies the property. The unit-step scan is the fast path;
// the all-pairs scan is the defining check. Both agree (tested).
std::optional<WitnessPair> check_property(const FunctionTable& f, const PropertyParams& p);
std::optional<WitnessPair> check_property_all_pairs(const FunctionTable& f,
                                                    const PropertyParams& p);

// True iff the pair of H passes: f(hi) - f(lo) in [alpha*2^b, beta*2^b].
bool pair_check(const FunctionTable& f, const PropertyParams& p, const GridPair& pr);

}  // namespace gridtester
