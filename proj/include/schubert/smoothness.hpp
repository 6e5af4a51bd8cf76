#pragma once

// 4231 / 3412 pattern detection. X_w is singular exactly when w contains
// one of the two patterns.

#include <array>
#include <vector>

#include "schubert/permutation.hpp"

namespace schubert {

enum class PatternKind { P4231, P3412 };

inline const char* to_string(PatternKind k) { return k == PatternKind::P4231 ? "4231" : "3412"; }

struct PatternOccurrence {
    PatternKind kind;
    std::array<int, 4> positions; // i < j < k < l

    bool operator==(const PatternOccurrence&) const = default;
};

/// All occurrences, in lexicographic order of positions (4231 before 3412 on ties).
inline std::vector<PatternOccurrence> find_patterns(const Permutation& w)
{
    std::vector<PatternOccurrence> out;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (w(l) < w(j) && w(j) < w(k) && w(k) < w(i))
                        out.push_back({PatternKind::P4231, {i, j, k, l}});
                    if (w(k) < w(l) && w(l) < w(i) && w(i) < w(j))
                        out.push_back({PatternKind::P3412, {i, j, k, l}});
                }
    return out;
}

inline bool is_smooth(const Permutation& w) { return find_patterns(w).empty(); }

} // namespace schubert
