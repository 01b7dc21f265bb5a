#include "gridtester/grid.hpp"

namespace gridtester {

int ceil_log2(int k) {
    if (k < 1) throw UsageError("side length must be positive");
    int e = 0;
    std::int64_t p = 1;
    while (p < k) {
        p <<= 1;
        ++e;
    }
    return e;
}

Hypergrid::Hypergrid(int n_, int k_) : n(n_), k(k_) {
    if (n < 1) throw UsageError("dimension must be positive");
    if (k < 1) throw UsageError("side length must be positive");
    ell = ceil_log2(k);
    stride.assign(n, 1);
    size = 1;
    for (int a = n - 1; a >= 0; --a) {
        stride[a] = size;
        if (size > (std::int64_t(1) << 40) / k)
            throw UsageError("hypergrid too large for exact desk-scale analysis");
        size *= k;
    }
}

PointIx Hypergrid::index_of(const Point& p) const {
    if (static_cast<int>(p.size()) != n)
        throw UsageError("point dimension does not match the grid");
    PointIx ix = 0;
    for (int a = 0; a < n; ++a) {
        if (p[a] < 1 || p[a] > k) throw UsageError("point coordinate out of range");
        ix += std::int64_t(p[a] - 1) * stride[a];
    }
    return ix;
}

Point Hypergrid::point_at(PointIx ix) const {
    Point p(n);
    for (int a = 0; a < n; ++a) p[a] = coord(ix, a);
    return p;
}

std::string Hypergrid::format_point(PointIx ix) const {
    std::string s = "(";
    for (int a = 0; a < n; ++a) {
        if (a) s += ',';
        s += std::to_string(coord(ix, a));
    }
    s += ')';
    return s;
}

Ordering comparable(const Hypergrid& g, PointIx x, PointIx y) {
    bool le = true, ge = true;
    for (int a = 0; a < g.n; ++a) {
        int cx = g.coord(x, a), cy = g.coord(y, a);
        if (cx < cy) ge = false;
        if (cx > cy) le = false;
    }
    if (le && ge) return Ordering::Equal;
    if (le) return Ordering::Less;
    if (ge) return Ordering::Greater;
    return Ordering::Incomparable;
}

Ordering comparable(const Hypergrid& g, const Point& x, const Point& y) {
    return comparable(g, g.index_of(x), g.index_of(y));
}

}  // namespace gridtester
