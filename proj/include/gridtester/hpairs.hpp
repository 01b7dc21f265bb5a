#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gridtester/grid.hpp"

namespace gridtester {

// Exponent of the largest power of 2 dividing m; msd(0) = ell + 1.
int msd(std::int64_t m, int ell);

// p mod m, except that multiples of m map to m instead of 0. This is the
// modified-mod convention under which the parity rule below reads verbatim.
int mod_star(int p, int m);

// An axis-aligned pair of the test set H: lo and hi differ only in `axis`,
// by exactly 2^scale, with lo strictly below hi.
struct GridPair {
    PointIx lo = 0;
    PointIx hi = 0;
    int axis = 0;
    int scale = 0;  // log2 of the gap

    bool operator==(const GridPair& o) const { return lo == o.lo && hi == o.hi; }
    auto operator<=>(const GridPair& o) const {
        return std::pair(lo, hi) <=> std::pair(o.lo, o.hi);
    }
};

// One matching H^r_{a,b}: pairs of H along axis `axis` with gap 2^scale,
// split by the parity class of the upper endpoint.
struct PairFamilyId {
    int axis = 0;    // 0-based
    int scale = 0;   // b
    int parity = 0;  // r, 0 or 1

    auto operator<=>(const PairFamilyId&) const = default;
    std::string str() const;  // "H^r_{a,b}" with 1-based axis
};

enum class Side { Lower, Upper, NotInFamily };

// Validates a single-axis power-of-2 pair and fills in axis/scale.
GridPair make_grid_pair(const Hypergrid& g, PointIx lo, PointIx hi);
GridPair make_grid_pair(const Hypergrid& g, const Point& lo, const Point& hi);

// Whether x sits in the lower parity class of the family (independent of
// whether its partner is in range).
bool in_lower_class(const Hypergrid& g, const PairFamilyId& fid, PointIx x);

std::optional<PointIx> partner(const Hypergrid& g, const PairFamilyId& fid, PointIx x);
Side side(const Hypergrid& g, const PairFamilyId& fid, PointIx x);

// The family a pair of H belongs to; usage error if the pair is not in H.
PairFamilyId family_of_pair(const Hypergrid& g, const GridPair& p);

// All pairs of H in canonical order: axis ascending, scale ascending, lower
// endpoint index ascending.
void enumerate_H(const Hypergrid& g, const std::function<void(const GridPair&)>& fn);
std::vector<GridPair> enumerate_H(const Hypergrid& g);
std::int64_t H_size(const Hypergrid& g);

// Family ids in canonical order. Families with 2^scale >= k are empty and
// are still listed; family_is_empty tells them apart.
std::vector<PairFamilyId> all_families(const Hypergrid& g);
bool family_is_empty(const Hypergrid& g, const PairFamilyId& fid);
std::vector<GridPair> family_pairs(const Hypergrid& g, const PairFamilyId& fid);

// Sum over pairs and coordinates of msd of the coordinate difference.
std::int64_t phi_of_pair(const Hypergrid& g, PointIx x, PointIx y);
std::int64_t phi_of_matching(const Hypergrid& g,
                             const std::vector<std::pair<PointIx, PointIx>>& matching);

// A matching is adequate when both endpoints of every violation are matched.
bool is_adequate(const Hypergrid& g, const PairFamilyId& fid,
                 const std::vector<std::pair<PointIx, PointIx>>& violations);

}  // namespace gridtester
