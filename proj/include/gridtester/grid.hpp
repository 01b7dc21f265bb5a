#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gridtester/rational.hpp"

namespace gridtester {

// A domain point, 1-based: every coordinate lies in {1, ..., k}. The 1-based
// convention matches the mod-2^(b+1) parity rule used by the pair families.
using Point = std::vector<int>;

// Flat index of a point under lexicographic order, last coordinate fastest.
using PointIx = std::int64_t;

enum class Ordering { Less, Greater, Equal, Incomparable };

// The hypergrid [k]^n with its coordinate-wise partial order.
struct Hypergrid {
    int n = 1;
    int k = 1;
    int ell = 0;             // ceil(log2 k)
    std::int64_t size = 1;   // k^n
    std::vector<std::int64_t> stride;  // stride[axis]; last axis has stride 1

    Hypergrid(int n_, int k_);

    bool operator==(const Hypergrid& o) const { return n == o.n && k == o.k; }
    bool operator!=(const Hypergrid& o) const { return !(*this == o); }

    int coord(PointIx ix, int axis) const {
        return static_cast<int>((ix / stride[axis]) % k) + 1;
    }
    PointIx shifted(PointIx ix, int axis, int delta) const {
        return ix + std::int64_t(delta) * stride[axis];
    }

    PointIx index_of(const Point& p) const;
    Point point_at(PointIx ix) const;
    bool k_power_of_two() const { return (k & (k - 1)) == 0; }

    std::string format_point(PointIx ix) const;  // "(c1,...,cn)"
};

int ceil_log2(int k);

Ordering comparable(const Hypergrid& g, PointIx x, PointIx y);
Ordering comparable(const Hypergrid& g, const Point& x, const Point& y);

inline bool strictly_below(const Hypergrid& g, PointIx x, PointIx y) {
    return comparable(g, x, y) == Ordering::Less;
}

}  // namespace gridtester
