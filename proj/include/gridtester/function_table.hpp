#pragma once

#include <vector>

#include "gridtester/extvalue.hpp"
#include "gridtester/grid.hpp"

namespace gridtester {

// A total map from grid points to values, stored densely in lexicographic
// order (last coordinate fastest).
template <typename V>
struct BasicFunctionTable {
    Hypergrid grid;
    std::vector<V> values;

    explicit BasicFunctionTable(Hypergrid g) : grid(g), values(g.size) {}
    BasicFunctionTable(Hypergrid g, std::vector<V> vals) : grid(g), values(std::move(vals)) {
        if (static_cast<std::int64_t>(values.size()) != grid.size)
            throw UsageError("function table has the wrong number of values");
    }

    const V& at(PointIx ix) const { return values[ix]; }
    V& at(PointIx ix) { return values[ix]; }
    const V& at(const Point& p) const { return values[grid.index_of(p)]; }

    bool operator==(const BasicFunctionTable& o) const {
        return grid == o.grid && values == o.values;
    }
};

using FunctionTable = BasicFunctionTable<ExtValue>;
using DualFunctionTable = BasicFunctionTable<DualValue>;

inline DualFunctionTable to_dual(const FunctionTable& f) {
    DualFunctionTable d(f.grid);
    for (PointIx ix = 0; ix < f.grid.size; ++ix) d.values[ix] = DualValue(f.values[ix]);
    return d;
}

// Result of padding [k]^n into [khat]^n, khat the smallest power of 2 above
// 4k. The original domain is translated by khat/4 along every axis; points
// below the translated block get -inf, all other outside points +inf. The
// block keeps a khat/4 margin to every boundary, so every family at scale
// 2^b <= khat/4 matches all block points.
struct PadResult {
    FunctionTable table;
    int shift = 0;  // khat / 4

    PointIx to_padded(const Hypergrid& original, PointIx ix) const;
};

PadResult pad(const FunctionTable& f);

}  // namespace gridtester
