#include "gridtester/tester.hpp"

namespace gridtester {

namespace {

// ceil(ln3 * num / den) for positive num, den. ln3 is pinned between two
// rationals tight enough that both ceilings agree for every desk-scale
// argument; if they ever differ we keep the larger (still a valid budget).
std::int64_t ceil_ln3_times(std::int64_t num, std::int64_t den) {
    constexpr std::int64_t kLn3Lo = 109861228866810969;  // / 1e17
    constexpr std::int64_t kLn3Hi = 109861228866810970;
    constexpr std::int64_t kScale = 100000000000000000;
    auto ceil_div = [](__int128 a, __int128 b) { return (a + b - 1) / b; };
    __int128 lo = ceil_div(__int128(kLn3Lo) * num, __int128(kScale) * den);
    __int128 hi = ceil_div(__int128(kLn3Hi) * num, __int128(kScale) * den);
    return static_cast<std::int64_t>(hi > lo ? hi : lo);
}

}  // namespace

std::int64_t query_budget(int n, int k, const Rational& epsilon, bool hypercube_mode) {
    if (!(epsilon > Rational(0) && epsilon < Rational(1)))
        throw UsageError("epsilon must lie in (0,1)");
    std::int64_t factor =
        hypercube_mode ? 2 * std::int64_t(n) : 4 * std::int64_t(n) * (ceil_log2(k) + 1);
    Rational x = Rational(factor) / epsilon;
    return ceil_ln3_times(x.num(), x.den());
}

GridPair sample_pair(const Hypergrid& g, Rng& rng) {
    if (g.k < 2) throw UsageError("sample_pair needs k >= 2 (the pair set is empty)");
    const std::int64_t lines = g.size / g.k;  // points per axis-aligned line
    std::int64_t total = H_size(g);
    std::int64_t u = static_cast<std::int64_t>(rng.below(std::uint64_t(total)));
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; (1 << b) < g.k; ++b) {
            std::int64_t count = std::int64_t(g.k - (1 << b)) * lines;
            if (u >= count) {
                u -= count;
                continue;
            }
            // u encodes (position of lo on the axis, the rest of the point)
            std::int64_t lo_coord = u / lines + 1;
            std::int64_t rest = u % lines;
            Point pt(g.n);
            for (int c = g.n - 1; c >= 0; --c) {
                if (c == a) continue;
                pt[c] = static_cast<int>(rest % g.k) + 1;
                rest /= g.k;
            }
            pt[a] = static_cast<int>(lo_coord);
            GridPair pr;
            pr.lo = g.index_of(pt);
            pr.hi = g.shifted(pr.lo, a, 1 << b);
            pr.axis = a;
            pr.scale = b;
            return pr;
        }
    }
    throw InternalError("sample_pair: index decode ran past the pair set");
}

TesterReport run_tester(const FunctionTable& f, const PropertyParams& p,
                        const TesterConfig& config) {
    TesterReport rep;
    rep.budget = config.query_override
                     ? *config.query_override
                     : query_budget(f.grid.n, f.grid.k, config.epsilon, f.grid.k == 2);
    if (rep.budget < 1) throw UsageError("query budget must be positive");

    Rng rng(config.seed);
    rep.queries.reserve(std::size_t(rep.budget));
    for (std::int64_t i = 0; i < rep.budget; ++i) rep.queries.push_back(sample_pair(f.grid, rng));

    for (const GridPair& pr : rep.queries) {
        ++rep.queries_used;
        if (!pair_check(f, p, pr)) {
            rep.accept = false;
            rep.witness = pr;
            break;
        }
    }
    return rep;
}

namespace {

template <typename Table>
ViolatedPairCounts count_impl(const Table& f, const PropertyParams& p) {
    ViolatedPairCounts out;
    for (const PairFamilyId& fid : all_families(f.grid))
        if (!family_is_empty(f.grid, fid)) out.per_family[fid] = 0;
    enumerate_H(f.grid, [&](const GridPair& pr) {
        ++out.h_size;
        if (is_violation(f, p, pr.lo, pr.hi)) {
            ++out.total;
            out.per_family[family_of_pair(f.grid, pr)] += 1;
        }
    });
    return out;
}

}  // namespace

ViolatedPairCounts count_violated_pairs(const FunctionTable& f, const PropertyParams& p) {
    return count_impl(f, p);
}

ViolatedPairCounts count_violated_pairs(const DualFunctionTable& f, const PropertyParams& p) {
    return count_impl(f, p);
}

}  // namespace gridtester
