#include "gridtester/property.hpp"

#include <algorithm>

namespace gridtester {

Point hcd(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw UsageError("hcd: dimension mismatch");
    Point z(x.size());
    for (std::size_t a = 0; a < x.size(); ++a) z[a] = std::min(x[a], y[a]);
    return z;
}

PointIx hcd(const Hypergrid& g, PointIx x, PointIx y) {
    PointIx z = 0;
    for (int a = 0; a < g.n; ++a)
        z += std::int64_t(std::min(g.coord(x, a), g.coord(y, a)) - 1) * g.stride[a];
    return z;
}

ExtValue pseudo_distance(const Hypergrid& g, const PropertyParams& p, PointIx x, PointIx y) {
    std::int64_t down = 0, up = 0;  // steps from x down to hcd, then up to y
    for (int a = 0; a < g.n; ++a) {
        int d = g.coord(x, a) - g.coord(y, a);
        if (d > 0)
            down += d;
        else
            up -= d;
    }
    return p.beta.scaled(down) + (-p.alpha.scaled(up));
}

ExtValue shortest_path_distance(const Hypergrid& g, const PropertyParams& p, PointIx x,
                                PointIx y) {
    if (!p.alpha.is_finite() || !p.beta.is_finite())
        throw UsageError("shortest_path_distance needs finite alpha and beta");
    const Rational up_cost = -p.alpha.finite();
    const Rational down_cost = p.beta.finite();

    // Bellman-Ford; the up/down balance of every cycle makes its length a
    // positive multiple of beta - alpha, so there is no negative cycle.
    std::vector<std::optional<Rational>> dist(g.size);
    dist[x] = Rational(0);
    for (std::int64_t round = 0; round < g.size; ++round) {
        bool changed = false;
        for (PointIx ix = 0; ix < g.size; ++ix) {
            if (!dist[ix]) continue;
            for (int a = 0; a < g.n; ++a) {
                int c = g.coord(ix, a);
                if (c < g.k) {
                    PointIx to = g.shifted(ix, a, 1);
                    Rational cand = *dist[ix] + up_cost;
                    if (!dist[to] || cand < *dist[to]) {
                        dist[to] = cand;
                        changed = true;
                    }
                }
                if (c > 1) {
                    PointIx to = g.shifted(ix, a, -1);
                    Rational cand = *dist[ix] + down_cost;
                    if (!dist[to] || cand < *dist[to]) {
                        dist[to] = cand;
                        changed = true;
                    }
                }
            }
        }
        if (!changed) break;
    }
    if (!dist[y]) throw InternalError("shortest_path_distance: target unreachable");
    return ExtValue(*dist[y]);
}

namespace {

template <typename Table, typename V>
V branch_impl(const Table& f, const PropertyParams& p, PointIx x, PointIx y) {
    ExtValue d = pseudo_distance(f.grid, p, x, y);
    if (d.is_pos_inf()) return V(ExtValue::neg_inf());
    V gap = value_gap(f.at(x), f.at(y));
    return gap - V(d);
}

template <typename Table, typename V>
V weight_impl(const Table& f, const PropertyParams& p, PointIx x, PointIx y) {
    V bx = branch_impl<Table, V>(f, p, x, y);
    V by = branch_impl<Table, V>(f, p, y, x);
    if (x != y && bx > V(ExtValue(0)) && by > V(ExtValue(0)))
        throw InternalError("both weight branches positive; contradicts positivity");
    return std::max(bx, by);
}

}  // namespace

ExtValue weight_branch(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y) {
    return branch_impl<FunctionTable, ExtValue>(f, p, x, y);
}

DualValue weight_branch(const DualFunctionTable& f, const PropertyParams& p, PointIx x,
                        PointIx y) {
    return branch_impl<DualFunctionTable, DualValue>(f, p, x, y);
}

ExtValue weight(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y) {
    return weight_impl<FunctionTable, ExtValue>(f, p, x, y);
}

DualValue weight(const DualFunctionTable& f, const PropertyParams& p, PointIx x, PointIx y) {
    return weight_impl<DualFunctionTable, DualValue>(f, p, x, y);
}

bool is_violation(const FunctionTable& f, const PropertyParams& p, PointIx x, PointIx y) {
    return weight(f, p, x, y) > ExtValue(0);
}

bool is_violation(const DualFunctionTable& f, const PropertyParams& p, PointIx x, PointIx y) {
    return weight(f, p, x, y).sign() > 0;
}

namespace {

bool unit_step_ok(const PropertyParams& p, const ExtValue& flo, const ExtValue& fhi) {
    if (!flo.is_finite() && flo.tag() == fhi.tag()) return true;  // same-sign infinities
    ExtValue diff = fhi - flo;
    return p.alpha <= diff && diff <= p.beta;
}

}  // namespace

std::optional<WitnessPair> check_property(const FunctionTable& f, const PropertyParams& p) {
    const Hypergrid& g = f.grid;
    for (PointIx ix = 0; ix < g.size; ++ix) {
        for (int a = 0; a < g.n; ++a) {
            if (g.coord(ix, a) >= g.k) continue;
            PointIx up = g.shifted(ix, a, 1);
            if (!unit_step_ok(p, f.at(ix), f.at(up))) return WitnessPair{ix, up};
        }
    }
    return std::nullopt;
}

std::optional<WitnessPair> check_property_all_pairs(const FunctionTable& f,
                                                    const PropertyParams& p) {
    for (PointIx x = 0; x < f.grid.size; ++x)
        for (PointIx y = x + 1; y < f.grid.size; ++y)
            if (is_violation(f, p, x, y)) return WitnessPair{x, y};
    return std::nullopt;
}

bool pair_check(const FunctionTable& f, const PropertyParams& p, const GridPair& pr) {
    const ExtValue& lo = f.at(pr.lo);
    const ExtValue& hi = f.at(pr.hi);
    if (!lo.is_finite() && lo.tag() == hi.tag()) return true;
    std::int64_t gap = std::int64_t(1) << pr.scale;
    ExtValue diff = hi - lo;
    return p.alpha.scaled(gap) <= diff && diff <= p.beta.scaled(gap);
}

}  // namespace gridtester
