#pragma once

// Irreducible components of Sing(X_w) and their generic singularity type.
//
// Components are found by the tangent oracle (Bruhat-maximal singular fixed
// points). The type and its parameters are then recovered from the
// codimension d = l(w) - l(v) and tangent excess e = m(w,v) - l(w):
//
//   4231      d = l+m+1   e = l*m        l, m >= 1
//   34*12     d = 2l+3    e = 1          l >= 0
//   34(0)12   d = l+m+3   e = l+m+1      l, m >= 0
//
// For 4231, {l, m} are the roots of x^2 - (d-1)x + e. The one (d, e)
// collision, (3, 1), is split by looking at the leftmost moved position: it
// carries the largest moved value exactly in a 4231 frame.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schubert/permutation.hpp"
#include "schubert/tangent.hpp"

namespace schubert {

enum class SingularityType { T4231, T3412Star, T3412Empty };

inline const char* to_string(SingularityType t)
{
    switch (t) {
    case SingularityType::T4231: return "4231";
    case SingularityType::T3412Star: return "3412*";
    case SingularityType::T3412Empty: return "3412empty";
    }
    return "?";
}

/// Raised when a component pair matches none of the three signatures.
class ClassificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct Component {
    Permutation v;
    SingularityType type = SingularityType::T4231;
    /// 4231: the smaller of {l, m}. 34*12: l. 34(0)12: the aggregate l+m,
    /// since only the sum is determined by (d, e).
    int l = 0;
    /// 4231 only: the larger of {l, m}.
    std::optional<int> m;
    int codim = 0;      // d = l(w) - l(v)
    int excess = 0;     // e = m(w,v) - l(w)
    int tangent_dim = 0; // m(w,v)
    Region region;      // cells where r_v > r_w
};

namespace detail {

/// Nonnegative integer root pair of x^2 - s x + p, smaller first.
inline std::optional<std::pair<int, int>> integer_roots(int s, int p)
{
    const long long disc = static_cast<long long>(s) * s - 4LL * p;
    if (disc < 0)
        return std::nullopt;
    auto root = static_cast<long long>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (root * root > disc)
        --root;
    while ((root + 1) * (root + 1) <= disc)
        ++root;
    if (root * root != disc || (s - root) % 2 != 0)
        return std::nullopt;
    return std::pair<int, int>{static_cast<int>((s - root) / 2), static_cast<int>((s + root) / 2)};
}

/// The leftmost position where v and w differ carries the largest w-value
/// among all differing positions.
inline bool leading_moved_point_is_max(const Permutation& v, const Permutation& w)
{
    int first = 0;
    int max_value = 0;
    for (int i = 1; i <= w.size(); ++i) {
        if (v(i) == w(i))
            continue;
        if (first == 0)
            first = i;
        max_value = std::max(max_value, w(i));
    }
    return first != 0 && w(first) == max_value;
}

inline Component classify_from_tangent(const Permutation& v, const Permutation& w, int m_vw)
{
    const int lw = length(w);
    const int d = lw - length(v);
    const int e = m_vw - lw;
    const std::string pair = "(" + v.to_string() + ", " + w.to_string() + ")";
    if (d <= 0 || e <= 0)
        throw ClassificationError("not a singular pair " + pair + ": d=" + std::to_string(d) +
                                  " e=" + std::to_string(e));

    Component c;
    c.v = v;
    c.codim = d;
    c.excess = e;
    c.tangent_dim = m_vw;
    c.region = region_D(v, w);

    if (leading_moved_point_is_max(v, w)) {
        const auto roots = integer_roots(d - 1, e);
        if (!roots || roots->first < 1)
            throw ClassificationError("4231 signature has no integral l,m >= 1 for " + pair +
                                      ": d=" + std::to_string(d) + " e=" + std::to_string(e));
        c.type = SingularityType::T4231;
        c.l = roots->first;
        c.m = roots->second;
        return c;
    }
    if (e == 1) {
        if (d < 3 || (d - 3) % 2 != 0)
            throw ClassificationError("34*12 signature needs odd d >= 3 for " + pair +
                                      ": d=" + std::to_string(d));
        c.type = SingularityType::T3412Star;
        c.l = (d - 3) / 2;
        return c;
    }
    if (d < 3 || e != d - 2)
        throw ClassificationError("no singularity type matches " + pair + ": d=" +
                                  std::to_string(d) + " e=" + std::to_string(e));
    c.type = SingularityType::T3412Empty;
    c.l = d - 3;
    return c;
}

} // namespace detail

/// Requires v to be a component of Sing(X_w); throws ClassificationError otherwise.
inline Component classify_component(const Permutation& v, const Permutation& w)
{
    return detail::classify_from_tangent(v, w, tangent_dimension(v, w).m);
}

/// Components sorted by the one-line notation of v.
inline std::vector<Component> enumerate_components(const Permutation& w)
{
    std::vector<Component> out;
    for (const Permutation& v : singular_components_oracle(w))
        out.push_back(classify_component(v, w));
    std::sort(out.begin(), out.end(),
              [](const Component& a, const Component& b) { return a.v < b.v; });
    return out;
}

/// Checks both sides of the tangent-dimension formula and the codimension formula.
inline bool verify_formulas(const Component& c, const Permutation& w)
{
    const int lw = length(w);
    const int lv = length(c.v);
    const int oracle = tangent_dimension(c.v, w).m;
    const int d = lw - lv;
    switch (c.type) {
    case SingularityType::T4231: {
        if (!c.m)
            return false;
        const int l = c.l, m = *c.m;
        return l >= 1 && m >= 1 && d == l + m + 1 && lw + l * m == oracle &&
               lv + (l + 1) * (m + 1) == oracle;
    }
    case SingularityType::T3412Star: {
        const int l = c.l;
        return l >= 0 && d == 2 * l + 3 && lw + 1 == oracle && lv + 2 * l + 4 == oracle;
    }
    case SingularityType::T3412Empty: {
        const int s = c.l;
        return s >= 0 && d == s + 3 && lw + s + 1 == oracle && lv + 2 * (s + 2) == oracle;
    }
    }
    return false;
}

} // namespace schubert
