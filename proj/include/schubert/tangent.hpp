#pragma once

// Zariski tangent dimension of X_w at the fixed point e_v, counted as the
// number of transpositions t with v*t <= w. This is the ground truth the
// closed formulas for components are checked against.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

struct TangentReport {
    Permutation v;
    Permutation w;
    int m = 0;      // tangent dimension m(w,v)
    int excess = 0; // m - l(w)
};

namespace detail {

inline int count_tangent_reflections(const Permutation& v, const RankTable& rw)
{
    const int n = v.size();
    int m = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (RankTable(swap_positions(v, i, j)).dominates(rw))
                ++m;
    return m;
}

} // namespace detail

inline TangentReport tangent_dimension(const Permutation& v, const Permutation& w)
{
    require_same_size(v, w);
    const RankTable rw(w);
    if (!RankTable(v).dominates(rw))
        throw std::invalid_argument("tangent_dimension: " + v.to_string() + " is not <= " +
                                    w.to_string());
    TangentReport report{v, w, detail::count_tangent_reflections(v, rw), 0};
    report.excess = report.m - length(w);
    return report;
}

/// Every v <= w at which the tangent dimension exceeds l(w), in lexicographic order.
inline std::vector<Permutation> singular_points(const Permutation& w)
{
    const RankTable rw(w);
    const int lw = length(w);
    std::vector<Permutation> out;
    for (const Permutation& v : all_permutations(w.size())) {
        if (!RankTable(v).dominates(rw))
            continue;
        if (detail::count_tangent_reflections(v, rw) > lw)
            out.push_back(v);
    }
    return out;
}

/// Bruhat-maximal elements of a set of permutations, order preserved.
inline std::vector<Permutation> bruhat_maximal(const std::vector<Permutation>& points)
{
    std::vector<RankTable> tables;
    tables.reserve(points.size());
    for (const auto& p : points)
        tables.emplace_back(p);
    std::vector<Permutation> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < points.size() && maximal; ++j)
            if (j != i && tables[i].dominates(tables[j]))
                maximal = false;
        if (maximal)
            out.push_back(points[i]);
    }
    return out;
}

/// The v with X_v an irreducible component of Sing(X_w).
inline std::vector<Permutation> singular_components_oracle(const Permutation& w)
{
    return bruhat_maximal(singular_points(w));
}

} // namespace schubert
