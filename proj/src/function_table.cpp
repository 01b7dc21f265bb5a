#include "gridtester/function_table.hpp"

namespace gridtester {

PointIx PadResult::to_padded(const Hypergrid& original, PointIx ix) const {
    Point p = original.point_at(ix);
    for (int& c : p) c += shift;
    return table.grid.index_of(p);
}

PadResult pad(const FunctionTable& f) {
    for (const ExtValue& v : f.values)
        if (!v.is_finite()) throw UsageError("pad() expects a finite-valued function");

    const int k = f.grid.k;
    int khat = 1;
    while (khat <= 4 * k) khat <<= 1;
    const int shift = khat / 4;

    PadResult out{FunctionTable(Hypergrid(f.grid.n, khat)), shift};
    const Hypergrid& gh = out.table.grid;
    for (PointIx ix = 0; ix < gh.size; ++ix) {
        bool in_block = true, below = false;
        for (int a = 0; a < gh.n; ++a) {
            int c = gh.coord(ix, a);
            if (c <= shift) below = true;
            if (c <= shift || c > shift + k) in_block = false;
        }
        if (in_block) {
            Point p = gh.point_at(ix);
            for (int& c : p) c -= shift;
            out.table.values[ix] = f.at(p);
        } else {
            out.table.values[ix] = below ? ExtValue::neg_inf() : ExtValue::pos_inf();
        }
    }
    return out;
}

}  // namespace gridtester
