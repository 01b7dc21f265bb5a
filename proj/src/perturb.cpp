#include "gridtester/perturb.hpp"

#include <vector>

namespace gridtester {

DualFunctionTable perturb(const FunctionTable& f, const PropertyParams& p) {
    const Hypergrid& g = f.grid;
    const std::int64_t m = g.size;

    // zs[x*m + y] holds slack(x,y) == 0, i.e. the digraph edge y -> x.
    // out-degree of s counts pairs with slack(*, s) = 0.
    std::vector<bool> zs(static_cast<std::size_t>(m) * m, false);
    std::vector<std::int64_t> out_deg(m, 0), in_deg(m, 0);
    std::int64_t remaining = 0;
    for (PointIx x = 0; x < m; ++x) {
        for (PointIx y = 0; y < m; ++y) {
            if (x == y) continue;
            if (weight_branch(f, p, x, y) == ExtValue(0)) {
                zs[static_cast<std::size_t>(x) * m + y] = true;
                out_deg[y] += 1;
                in_deg[x] += 1;
                ++remaining;
            }
        }
    }

    DualFunctionTable out = to_dual(f);
    std::vector<bool> processed(m, false);
    std::int64_t t = 0;
    while (remaining > 0) {
        PointIx sink = -1;
        for (PointIx s = 0; s < m; ++s) {
            if (!processed[s] && out_deg[s] == 0 && in_deg[s] > 0) {
                sink = s;
                break;
            }
        }
        if (sink < 0)
            throw InternalError("perturb: zero-slack digraph has no sink; not a DAG");
        ++t;
        out.values[sink] = DualValue(out.values[sink].real,
                                     out.values[sink].eps - Rational(1, t));
        processed[sink] = true;
        for (PointIx u = 0; u < m; ++u) {
            if (u == sink || processed[u]) continue;
            // in-edges of the sink: slack(sink, u) = 0 resolves strictly negative
            if (zs[static_cast<std::size_t>(sink) * m + u]) {
                out_deg[u] -= 1;
                in_deg[sink] -= 1;
                --remaining;
            }
            if (zs[static_cast<std::size_t>(u) * m + sink]) {
                out_deg[sink] -= 1;
                in_deg[u] -= 1;
                --remaining;
            }
        }
    }

    // Certify on small instances: signs must match, no zero weight remains.
    if (m <= 512) {
        for (PointIx x = 0; x < m; ++x) {
            for (PointIx y = x + 1; y < m; ++y) {
                ExtValue w0 = weight(f, p, x, y);
                int s0 = w0.is_pos_inf() ? 1 : (w0.is_neg_inf() ? -1 : w0.finite().sign());
                int s1 = weight(out, p, x, y).sign();
                if (s1 == 0) throw InternalError("perturb left a zero-weight pair");
                if (s0 != 0 && s0 != s1)
                    throw InternalError("perturb changed the sign of a pair weight");
                if (s0 == 0 && s1 > 0)
                    throw InternalError("perturb turned a zero-weight pair into a violation");
            }
        }
    }
    return out;
}

}  // namespace gridtester
