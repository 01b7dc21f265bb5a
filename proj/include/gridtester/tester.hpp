#pragma once

#include <map>
#include <optional>

#include "gridtester/property.hpp"
#include "gridtester/rng.hpp"

namespace gridtester {

struct TesterConfig {
    Rational epsilon;
    std::uint64_t seed = 0;
    std::optional<std::int64_t> query_override;

    TesterConfig(Rational eps, std::uint64_t s) : epsilon(std::move(eps)), seed(s) {
        if (!(epsilon > Rational(0) && epsilon < Rational(1)))
            throw UsageError("epsilon must lie in (0,1)");
    }
};

struct TesterReport {
    bool accept = true;
    std::int64_t queries_used = 0;  // pair tests evaluated
    std::int64_t budget = 0;
    std::optional<GridPair> witness;       // present iff rejected
    std::vector<GridPair> queries;         // the full non-adaptive query list
};

// Number of independent pair tests that pushes the miss probability below
// 1/3 against any f with distance > epsilon:
//   hypergrid:  ceil(ln3 * 4 n (ceil(log2 k)+1) / eps)
//   hypercube:  ceil(ln3 * 2 n / eps)
std::int64_t query_budget(int n, int k, const Rational& epsilon, bool hypercube_mode);

// Uniform over H, by exact index arithmetic over the per-(axis,scale) counts.
GridPair sample_pair(const Hypergrid& g, Rng& rng);

// Non-adaptive one-sided uniform-pair tester: the whole query list is drawn
// before any value is read; evaluation stops at the first violating pair.
TesterReport run_tester(const FunctionTable& f, const PropertyParams& p,
                        const TesterConfig& config);

struct ViolatedPairCounts {
    std::map<PairFamilyId, std::int64_t> per_family;
    std::int64_t total = 0;
    std::int64_t h_size = 0;
};

ViolatedPairCounts count_violated_pairs(const FunctionTable& f, const PropertyParams& p);
ViolatedPairCounts count_violated_pairs(const DualFunctionTable& f, const PropertyParams& p);

}  // namespace gridtester
