#include <gtest/gtest.h>

#include <algorithm>

#include "schubert/polynomial.hpp"
#include "schubert/tangent.hpp"

using namespace schubert;

namespace {

// Second route to m(w,v): the Zariski tangent space of X_w at e_v, computed in
// the full chart M_v (every non-inversion entry is a coordinate). Take the
// linear parts of all rank-condition minors; the slice tangent space is their
// common kernel, and the cell contributes l(v) more dimensions.
int tangent_dimension_by_jacobian(const Permutation& v, const Permutation& w)
{
    const int n = v.size();
    const Permutation vinv = inverse(v);
    PolynomialMatrix chart(n, n);
    int vars = 0;
    for (int j = 1; j <= n; ++j) {
        chart(j - 1, v(j) - 1) = Polynomial::constant(1);
        for (int k = v(j) + 1; k <= n; ++k)
            if (j < vinv(k))
                chart(j - 1, k - 1) = Polynomial::variable(vars++);
    }
    const RankTable rw(w);
    std::vector<Polynomial> linear;
    for (int p = 1; p < n; ++p)
        for (int q = 1; q < n; ++q) {
            const int k = p - rw(p, q) + 1;
            const int ncols = n - q;
            if (k > p || k > ncols)
                continue;
            std::vector<bool> rp(p, false), cp(ncols, false);
            std::fill(rp.begin(), rp.begin() + k, true);
            do {
                std::fill(cp.begin(), cp.end(), false);
                std::fill(cp.begin(), cp.begin() + k, true);
                do {
                    PolynomialMatrix m(k, k);
                    for (int r = 0, mr = 0; r < p; ++r) {
                        if (!rp[r])
                            continue;
                        for (int c = 0, mc = 0; c < ncols; ++c)
                            if (cp[c])
                                m(mr, mc++) = chart(r, q + c);
                        ++mr;
                    }
                    const Polynomial lin = determinant(m).homogeneous_part(1);
                    if (!lin.is_zero())
                        linear.push_back(lin);
                } while (std::prev_permutation(cp.begin(), cp.end()));
            } while (std::prev_permutation(rp.begin(), rp.end()));
        }
    RationalMatrix jac(linear.size(), vars);
    for (std::size_t e = 0; e < linear.size(); ++e)
        for (const auto& [mono, coeff] : linear[e].terms())
            jac(e, mono.front()) = coeff;
    return length(v) + vars - static_cast<int>(rank(jac));
}

} // namespace

TEST(Tangent, Examples)
{
    for (const auto& w : all_permutations(4)) {
        const auto t = tangent_dimension(w, w);
        EXPECT_EQ(t.m, length(w));
        EXPECT_EQ(t.excess, 0);
    }
    const auto a = tangent_dimension(make_permutation({2, 1, 4, 3}), make_permutation({4, 2, 3, 1}));
    EXPECT_EQ(a.m, 6);
    EXPECT_EQ(a.excess, 1);
    EXPECT_EQ(tangent_dimension(make_permutation({1, 3, 2, 4}), make_permutation({3, 4, 1, 2})).m, 5);
}

TEST(Tangent, RejectsIncomparablePairs)
{
    EXPECT_THROW(tangent_dimension(make_permutation({3, 4, 1, 2}), make_permutation({4, 2, 3, 1})),
                 std::invalid_argument);
    EXPECT_THROW(tangent_dimension(Permutation::identity(3), Permutation::identity(4)),
                 std::invalid_argument);
}

TEST(Tangent, AtLeastDimensionOnTheInterval)
{
    const auto perms = all_permutations(5);
    for (const auto& w : perms)
        for (const auto& v : perms)
            if (bruhat_leq(v, w))
                ASSERT_GE(tangent_dimension(v, w).m, length(w));
}

TEST(Tangent, InvariantUnderSimultaneousInversion)
{
    for (int n = 2; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& w : perms)
            for (const auto& v : perms)
                if (bruhat_leq(v, w))
                    ASSERT_EQ(tangent_dimension(v, w).m, tangent_dimension(inverse(v), inverse(w)).m);
    }
}

TEST(Tangent, MatchesJacobianOfRankConditions)
{
    for (int n = 2; n <= 5; ++n) {
        const auto perms = all_permutations(n);
        for (const auto& w : perms)
            for (const auto& v : perms)
                if (bruhat_leq(v, w))
                    ASSERT_EQ(tangent_dimension(v, w).m, tangent_dimension_by_jacobian(v, w))
                        << v.to_string() << " <= " << w.to_string();
    }
}

TEST(SingularPoints, Examples)
{
    EXPECT_TRUE(singular_points(make_permutation({2, 1, 3, 4})).empty());
    EXPECT_TRUE(singular_components_oracle(Permutation::identity(5)).empty());

    // the interval below 4231 misses only 3412, 4312, 3421 and 4321; the
    // singular points are exactly 2143 and everything below it
    const auto w = make_permutation({4, 2, 3, 1});
    const auto v = make_permutation({2, 1, 4, 3});
    int interval = 0;
    std::vector<Permutation> below_v;
    for (const auto& x : all_permutations(4)) {
        interval += bruhat_leq(x, w) ? 1 : 0;
        if (bruhat_leq(x, v))
            below_v.push_back(x);
    }
    EXPECT_EQ(interval, 20);
    EXPECT_EQ(singular_points(w), below_v);
    EXPECT_EQ(singular_components_oracle(w), std::vector<Permutation>{v});

    const auto w2 = make_permutation({3, 4, 1, 2});
    const auto sp = singular_points(w2);
    EXPECT_NE(std::find(sp.begin(), sp.end(), make_permutation({1, 3, 2, 4})), sp.end());
    EXPECT_EQ(singular_components_oracle(w2), std::vector<Permutation>{make_permutation({1, 3, 2, 4})});
}

TEST(SingularPoints, FormALowerIdeal)
{
    for (int n = 4; n <= 6; ++n) {
        const auto perms = all_permutations(n);
        std::vector<RankTable> tables;
        for (const auto& p : perms)
            tables.emplace_back(p);
        for (const auto& w : perms) {
            const auto sp = singular_points(w);
            std::vector<char> singular(perms.size(), 0);
            for (const auto& u : sp)
                singular[std::lower_bound(perms.begin(), perms.end(), u) - perms.begin()] = 1;
            for (std::size_t u = 0; u < perms.size(); ++u) {
                if (!singular[u])
                    continue;
                for (std::size_t x = 0; x < perms.size(); ++x)
                    if (!singular[x] && tables[x].dominates(tables[u]))
                        FAIL() << perms[x].to_string() << " below singular " << perms[u].to_string()
                               << " in X_" << w.to_string();
            }
        }
    }
}

TEST(SingularPoints, ComponentsArePairwiseIncomparable)
{
    for (const auto& w : all_permutations(6)) {
        const auto comps = singular_components_oracle(w);
        for (std::size_t a = 0; a < comps.size(); ++a)
            for (std::size_t b = 0; b < comps.size(); ++b)
                if (a != b)
                    ASSERT_FALSE(bruhat_leq(comps[a], comps[b]));
    }
}
