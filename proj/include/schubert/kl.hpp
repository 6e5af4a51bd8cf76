#pragma once

// Kazhdan-Lusztig polynomials in S_n.
//
// KLContext runs the standard recursion: for a left descent s of w
// (s w < w), with u = s w and c = [s x < x],
//
//   P_{x,w} = q^{1-c} P_{sx,u} + q^c P_{x,u}
//             - sum_{z < u, s z < z} mu(z,u) q^{(l(w)-l(z))/2} P_{x,z}
//
// where mu(z,u) is the coefficient of q^{(l(u)-l(z)-1)/2} in P_{z,u}.
// Permutations are indexed by lexicographic rank; P is memoized per (x, w).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/components.hpp"
#include "schubert/permutation.hpp"

namespace schubert {

/// Polynomial in q with integer coefficients, coeffs[i] multiplying q^i.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
struct KLPoly {
    std::vector<long long> coeffs;

    KLPoly() = default;
    explicit KLPoly(std::vector<long long> c) : coeffs(std::move(c)) { trim(); }

    static KLPoly one() { return KLPoly({1}); }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    long long coeff(int i) const
    {
        return i >= 0 && i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    }

    void trim()
    {
        while (!coeffs.empty() && coeffs.back() == 0)
            coeffs.pop_back();
    }

    /// this += sign * q^shift * other
    void add_shifted(const KLPoly& other, int shift, long long scale = 1)
    {
        if (other.is_zero() || scale == 0)
            return;
        if (coeffs.size() < other.coeffs.size() + shift)
            coeffs.resize(other.coeffs.size() + shift, 0);
        for (std::size_t i = 0; i < other.coeffs.size(); ++i)
            coeffs[i + shift] += scale * other.coeffs[i];
        trim();
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0)
                continue;
            if (!out.empty())
                out += coeffs[i] > 0 ? " + " : " - ";
            else if (coeffs[i] < 0)
                out += "-";
            const long long a = coeffs[i] < 0 ? -coeffs[i] : coeffs[i];
            if (i == 0 || a != 1)
                out += std::to_string(a);
            if (i >= 1)
                out += "q";
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
        return out;
    }

    bool operator==(const KLPoly&) const = default;
};

inline KLPoly kl_closed_form(const Component& c)
{
    switch (c.type) {
    case SingularityType::T4231: {
        const int k = std::min(c.l, c.m.value_or(c.l));
        return KLPoly(std::vector<long long>(k + 1, 1));
    }
    case SingularityType::T3412Star: {
        std::vector<long long> coeffs(c.l + 2, 0);
        coeffs.front() = 1;
        coeffs.back() = 1;
        return KLPoly(std::move(coeffs));
    }
    case SingularityType::T3412Empty:
        return KLPoly({1, 1});
    }
    return {};
}

/// Memoized recursion over S_n. Not thread-safe; give each worker its own context.
class KLContext {
public:
    explicit KLContext(int n) : n_(n)
    {
        if (n < 1 || n > 8)
            throw std::invalid_argument("KLContext supports 1 <= n <= 8");
        elements_ = all_permutations(n);
        const std::size_t count = elements_.size();
        tables_.reserve(count);
        lengths_.reserve(count);
        for (const auto& p : elements_) {
            tables_.emplace_back(p);
            lengths_.push_back(length(p));
        }
        // left multiplication by s_i swaps the values i and i+1
        left_mult_.assign(count * (n - 1), 0);
        for (std::size_t idx = 0; idx < count; ++idx) {
            for (int i = 1; i < n; ++i) {
                std::vector<int> vals(elements_[idx].values().begin(), elements_[idx].values().end());
                for (int& x : vals) {
                    if (x == i)
                        x = i + 1;
                    else if (x == i + 1)
                        x = i;
                }
                left_mult_[idx * (n - 1) + (i - 1)] = index_of(Permutation(std::move(vals)));
            }
        }
        lower_.resize(count);
        lower_ready_.assign(count, false);
    }

    int size() const { return n_; }

    KLPoly polynomial(const Permutation& x, const Permutation& w)
    {
        if (x.size() != n_ || w.size() != n_)
            throw std::invalid_argument("KLContext: size mismatch");
        const int xi = index_of(x), wi = index_of(w);
        if (!leq(xi, wi))
            throw std::invalid_argument("kl: " + x.to_string() + " is not <= " + w.to_string());
        return compute(xi, wi);
    }

    std::size_t memo_size() const { return memo_.size(); }

    /// Lexicographic rank via the Lehmer code.
    int index_of(const Permutation& p) const
    {
        int idx = 0;
        for (int i = 1; i <= n_; ++i) {
            int smaller_after = 0;
            for (int j = i + 1; j <= n_; ++j)
                if (p(j) < p(i))
                    ++smaller_after;
            idx = idx * (n_ - i + 1) + smaller_after;
        }
        return idx;
    }

private:
    bool leq(int a, int b) const { return tables_[a].dominates(tables_[b]); }

    // s_i x < x iff i+1 appears before i
    bool is_left_descent(int idx, int i) const
    {
        return lengths_[left_mult_[idx * (n_ - 1) + (i - 1)]] < lengths_[idx];
    }

    int left_mult(int idx, int i) const { return left_mult_[idx * (n_ - 1) + (i - 1)]; }

    const std::vector<int>& lower_interval(int w)
    {
        if (!lower_ready_[w]) {
            for (int z = 0; z < static_cast<int>(elements_.size()); ++z)
                if (leq(z, w))
                    lower_[w].push_back(z);
            lower_ready_[w] = true;
        }
        return lower_[w];
    }

    KLPoly compute(int x, int w)
    {
        if (!leq(x, w))
            return {};
        if (x == w)
            return KLPoly::one();
        const std::uint64_t key = static_cast<std::uint64_t>(x) * elements_.size() + w;
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        int s = 1;
        while (!is_left_descent(w, s))
            ++s;
        const int u = left_mult(w, s);
        const int sx = left_mult(x, s);
        const int c = lengths_[sx] < lengths_[x] ? 1 : 0;

        KLPoly result;
        result.add_shifted(compute(sx, u), 1 - c);
        result.add_shifted(compute(x, u), c);

        const int lu = lengths_[u];
        const int lw = lengths_[w];
        for (int z : lower_interval(u)) {
            if (z == u || !is_left_descent(z, s) || !leq(x, z))
                continue;
            const int gap = lu - lengths_[z];
            if (gap % 2 == 0)
                continue;
            const long long mu = compute(z, u).coeff((gap - 1) / 2);
            if (mu == 0)
                continue;
            result.add_shifted(compute(x, z), (lw - lengths_[z]) / 2, -mu);
        }
        memo_.emplace(key, result);
        return result;
    }

    int n_;
    std::vector<Permutation> elements_;
    std::vector<RankTable> tables_;
    std::vector<int> lengths_;
    std::vector<int> left_mult_;
    std::vector<std::vector<int>> lower_;
    std::vector<bool> lower_ready_;
    std::unordered_map<std::uint64_t, KLPoly> memo_;
};

inline KLPoly kl_recursion(const Permutation& v, const Permutation& w)
{
    require_same_size(v, w);
    KLContext ctx(w.size());
    return ctx.polynomial(v, w);
}

} // namespace schubert
