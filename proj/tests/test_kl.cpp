#include <gtest/gtest.h>

#include <map>

#include "schubert/components.hpp"
#include "schubert/kl.hpp"

using namespace schubert;

namespace {

// Independent KL implementation: same recursion but through a RIGHT descent
// (w s < w), with permutations as keys and no index tables.
class RightDescentKL {
public:
    KLPoly operator()(const Permutation& x, const Permutation& w)
    {
        if (!bruhat_leq(x, w))
            return {};
        if (x == w)
            return KLPoly::one();
        const auto key = std::make_pair(x, w);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        const int n = w.size();
        int s = n - 1;
        while (w(s) < w(s + 1))
            --s;
        const Permutation u = swap_positions(w, s, s + 1);
        const Permutation xs = swap_positions(x, s, s + 1);
        const int c = x(s) > x(s + 1) ? 1 : 0;
        KLPoly result;
        result.add_shifted((*this)(xs, u), 1 - c);
        result.add_shifted((*this)(x, u), c);
        const int lu = length(u);
        for (const auto& z : all_permutations(n)) {
            if (z == u || z(s) < z(s + 1) || !bruhat_leq(z, u) || !bruhat_leq(x, z))
                continue;
            const int gap = lu - length(z);
            if (gap % 2 == 0)
                continue;
            const long long mu = (*this)(z, u).coeff((gap - 1) / 2);
            if (mu != 0)
                result.add_shifted((*this)(x, z), (length(w) - length(z)) / 2, -mu);
        }
        memo_.emplace(key, result);
        return result;
    }

private:
    std::map<std::pair<Permutation, Permutation>, KLPoly> memo_;
};

Permutation conjugate_by_longest(const Permutation& w)
{
    const auto w0 = longest_element(w.size());
    return compose(compose(w0, w), w0);
}

} // namespace

TEST(KLPoly, Basics)
{
    EXPECT_EQ(KLPoly({1, 0, 0}).coeffs.size(), 1u);
    EXPECT_EQ(KLPoly({1, 0, 1}).to_string(), "1 + q^2");
    EXPECT_EQ(KLPoly({1, 1}).to_string(), "1 + q");
    EXPECT_TRUE(KLPoly().is_zero());
}

TEST(KLClosedForm, Cases)
{
    Component c;
    c.type = SingularityType::T4231;
    c.l = 2;
    c.m = 3;
    EXPECT_EQ(kl_closed_form(c), KLPoly({1, 1, 1}));
    c.l = 3;
    c.m = 2;
    EXPECT_EQ(kl_closed_form(c), KLPoly({1, 1, 1}));

    Component star;
    star.type = SingularityType::T3412Star;
    star.l = 2;
    EXPECT_EQ(kl_closed_form(star), KLPoly({1, 0, 0, 1}));
    star.l = 0;
    EXPECT_EQ(kl_closed_form(star), KLPoly({1, 1}));

    Component empty;
    empty.type = SingularityType::T3412Empty;
    for (int s = 0; s < 5; ++s) {
        empty.l = s;
        EXPECT_EQ(kl_closed_form(empty), KLPoly({1, 1}));
    }
}

TEST(KLRecursion, ClassicalValues)
{
    EXPECT_EQ(kl_recursion(parse_permutation("4231"), parse_permutation("4231")), KLPoly::one());
    EXPECT_EQ(kl_recursion(parse_permutation("2143"), parse_permutation("4231")), KLPoly({1, 1}));
    EXPECT_EQ(kl_recursion(parse_permutation("1324"), parse_permutation("3412")), KLPoly({1, 1}));
    EXPECT_THROW(kl_recursion(parse_permutation("3412"), parse_permutation("4231")), std::invalid_argument);
}

// In S_4 the only nontrivial KL polynomials are P_{x,3412} = 1+q for
// x <= 1324 and P_{x,4231} = 1+q for x <= 2143.
TEST(KLRecursion, FullTableOfS4)
{
    KLContext ctx(4);
    const auto perms = all_permutations(4);
    const auto w3412 = parse_permutation("3412"), w4231 = parse_permutation("4231");
    const auto v1324 = parse_permutation("1324"), v2143 = parse_permutation("2143");
    for (const auto& w : perms)
        for (const auto& x : perms) {
            if (!bruhat_leq(x, w))
                continue;
            const bool special = (w == w3412 && bruhat_leq(x, v1324)) || (w == w4231 && bruhat_leq(x, v2143));
            EXPECT_EQ(ctx.polynomial(x, w), special ? KLPoly({1, 1}) : KLPoly::one())
                << x.to_string() << " " << w.to_string();
        }
}

TEST(KLRecursion, AgreesWithRightDescentRoute)
{
    for (int n = 2; n <= 5; ++n) {
        KLContext ctx(n);
        RightDescentKL other;
        const auto perms = all_permutations(n);
        for (const auto& w : perms)
            for (const auto& x : perms)
                if (bruhat_leq(x, w))
                    ASSERT_EQ(ctx.polynomial(x, w), other(x, w)) << x.to_string() << " " << w.to_string();
    }
}

TEST(KLRecursion, PropertiesOnS5)
{
    KLContext ctx(5);
    const auto perms = all_permutations(5);
    for (const auto& w : perms) {
        const bool smooth_w = enumerate_components(w).empty();
        for (const auto& x : perms) {
            if (!bruhat_leq(x, w))
                continue;
            const KLPoly p = ctx.polynomial(x, w);
            ASSERT_EQ(p.coeff(0), 1);
            ASSERT_LE(2 * p.degree(), std::max(0, length(w) - length(x) - 1));
            for (long long a : p.coeffs)
                ASSERT_GE(a, 0);
            ASSERT_EQ(p, ctx.polynomial(inverse(x), inverse(w)));
            ASSERT_EQ(p, ctx.polynomial(conjugate_by_longest(x), conjugate_by_longest(w)));
        }
        if (smooth_w)
            ASSERT_EQ(ctx.polynomial(Permutation::identity(5), w), KLPoly::one()) << w.to_string();
    }
}

TEST(KLRecursion, ClosedFormForEveryComponentUpToS6)
{
    for (int n = 4; n <= 6; ++n) {
        KLContext ctx(n);
        for (const auto& w : all_permutations(n))
            for (const auto& c : enumerate_components(w))
                ASSERT_EQ(kl_closed_form(c), ctx.polynomial(c.v, w)) << c.v.to_string() << " " << w.to_string();
    }
}

TEST(KLRecursion, HigherDegreeExamples)
{
    // 4231 type with l = m = 2, and 34*12 with l = 2
    EXPECT_EQ(kl_recursion(parse_permutation("321654"), parse_permutation("632541")), KLPoly({1, 1, 1}));
    EXPECT_EQ(kl_recursion(parse_permutation("154326"), parse_permutation("564312")), KLPoly({1, 0, 0, 1}));
}
