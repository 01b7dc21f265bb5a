#include "gridtester/hpairs.hpp"

#include <algorithm>
#include <set>

namespace gridtester {

int msd(std::int64_t m, int ell) {
    if (m < 0) throw InternalError("msd of a negative number");
    if (m == 0) return ell + 1;
    int p = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++p;
    }
    return p;
}

int mod_star(int p, int m) {
    int r = p % m;
    return r == 0 ? m : r;
}

std::string PairFamilyId::str() const {
    return "H^" + std::to_string(parity) + "_{" + std::to_string(axis + 1) + "," +
           std::to_string(scale) + "}";
}

GridPair make_grid_pair(const Hypergrid& g, PointIx lo, PointIx hi) {
    int axis = -1;
    int gap = 0;
    for (int a = 0; a < g.n; ++a) {
        int d = g.coord(hi, a) - g.coord(lo, a);
        if (d == 0) continue;
        if (axis >= 0) throw UsageError("pair differs in more than one coordinate");
        axis = a;
        gap = d;
    }
    if (axis < 0) throw UsageError("pair endpoints coincide");
    if (gap < 0) throw UsageError("pair endpoints are not ordered lo < hi");
    if ((gap & (gap - 1)) != 0) throw UsageError("pair gap is not a power of 2");
    GridPair p;
    p.lo = lo;
    p.hi = hi;
    p.axis = axis;
    p.scale = msd(gap, g.ell);
    return p;
}

GridPair make_grid_pair(const Hypergrid& g, const Point& lo, const Point& hi) {
    return make_grid_pair(g, g.index_of(lo), g.index_of(hi));
}

bool in_lower_class(const Hypergrid& g, const PairFamilyId& fid, PointIx x) {
    int rem = mod_star(g.coord(x, fid.axis), 2 << fid.scale);
    bool low = rem <= (1 << fid.scale);
    return fid.parity == 0 ? low : !low;
}

std::optional<PointIx> partner(const Hypergrid& g, const PairFamilyId& fid, PointIx x) {
    int gap = 1 << fid.scale;
    int c = g.coord(x, fid.axis);
    if (in_lower_class(g, fid, x)) {
        if (c + gap > g.k) return std::nullopt;
        return g.shifted(x, fid.axis, gap);
    }
    if (c - gap < 1) return std::nullopt;
    return g.shifted(x, fid.axis, -gap);
}

Side side(const Hypergrid& g, const PairFamilyId& fid, PointIx x) {
    if (!partner(g, fid, x)) return Side::NotInFamily;
    return in_lower_class(g, fid, x) ? Side::Lower : Side::Upper;
}

PairFamilyId family_of_pair(const Hypergrid& g, const GridPair& p) {
    GridPair checked = make_grid_pair(g, p.lo, p.hi);
    PairFamilyId fid;
    fid.axis = checked.axis;
    fid.scale = checked.scale;
    int hi_rem = mod_star(g.coord(checked.hi, checked.axis), 2 << checked.scale);
    fid.parity = hi_rem > (1 << checked.scale) ? 0 : 1;
    return fid;
}

void enumerate_H(const Hypergrid& g, const std::function<void(const GridPair&)>& fn) {
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; (1 << b) < g.k; ++b) {
            int gap = 1 << b;
            for (PointIx ix = 0; ix < g.size; ++ix) {
                if (g.coord(ix, a) + gap > g.k) continue;
                GridPair p;
                p.lo = ix;
                p.hi = g.shifted(ix, a, gap);
                p.axis = a;
                p.scale = b;
                fn(p);
            }
        }
    }
}

std::vector<GridPair> enumerate_H(const Hypergrid& g) {
    std::vector<GridPair> out;
    enumerate_H(g, [&](const GridPair& p) { out.push_back(p); });
    return out;
}

std::int64_t H_size(const Hypergrid& g) {
    std::int64_t per_line = 0;
    for (int b = 0; (1 << b) < g.k; ++b) per_line += g.k - (1 << b);
    return per_line * g.n * (g.size / g.k);
}

std::vector<PairFamilyId> all_families(const Hypergrid& g) {
    std::vector<PairFamilyId> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b <= g.ell; ++b)
            for (int r = 0; r < 2; ++r) out.push_back({a, b, r});
    return out;
}

bool family_is_empty(const Hypergrid& g, const PairFamilyId& fid) {
    if ((1 << fid.scale) >= g.k) return true;
    for (int c = 1; c + (1 << fid.scale) <= g.k; ++c) {
        int rem = mod_star(c, 2 << fid.scale);
        bool low = rem <= (1 << fid.scale);
        if ((fid.parity == 0) == low) return false;
    }
    return true;
}

std::vector<GridPair> family_pairs(const Hypergrid& g, const PairFamilyId& fid) {
    std::vector<GridPair> out;
    if ((1 << fid.scale) >= g.k) return out;
    int gap = 1 << fid.scale;
    for (PointIx ix = 0; ix < g.size; ++ix) {
        if (!in_lower_class(g, fid, ix)) continue;
        if (g.coord(ix, fid.axis) + gap > g.k) continue;
        GridPair p;
        p.lo = ix;
        p.hi = g.shifted(ix, fid.axis, gap);
        p.axis = fid.axis;
        p.scale = fid.scale;
        out.push_back(p);
    }
    return out;
}

std::int64_t phi_of_pair(const Hypergrid& g, PointIx x, PointIx y) {
    std::int64_t total = 0;
    for (int a = 0; a < g.n; ++a)
        total += msd(std::abs(g.coord(x, a) - g.coord(y, a)), g.ell);
    return total;
}

std::int64_t phi_of_matching(const Hypergrid& g,
                             const std::vector<std::pair<PointIx, PointIx>>& matching) {
    std::set<PointIx> seen;
    std::int64_t total = 0;
    for (const auto& [x, y] : matching) {
        if (!seen.insert(x).second || !seen.insert(y).second)
            throw UsageError("phi_of_matching: endpoints overlap, not a matching");
        total += phi_of_pair(g, x, y);
    }
    return total;
}

bool is_adequate(const Hypergrid& g, const PairFamilyId& fid,
                 const std::vector<std::pair<PointIx, PointIx>>& violations) {
    for (const auto& [x, y] : violations) {
        if (side(g, fid, x) == Side::NotInFamily) return false;
        if (side(g, fid, y) == Side::NotInFamily) return false;
    }
    return true;
}

}  // namespace gridtester
