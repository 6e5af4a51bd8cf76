#pragma once

// Sparse multivariate polynomials with rational coefficients over variables
// x_0, x_1, ... . A monomial is the sorted multiset of its variable indices.

#include <algorithm>
#include <compare>
#include <functional>
#include <iterator>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "schubert/linalg.hpp"

namespace schubert {

using Monomial = std::vector<int>;

class Polynomial {
public:
    Polynomial() = default;

    static Polynomial constant(const Rational& c)
    {
        Polynomial p;
        if (c != 0)
            p.terms_.emplace(Monomial{}, c);
        return p;
    }

    static Polynomial variable(int index)
    {
        Polynomial p;
        p.terms_.emplace(Monomial{index}, Rational(1));
        return p;
    }

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

    /// -1 for the zero polynomial.
    int degree() const
    {
        int d = -1;
        for (const auto& [mono, coeff] : terms_)
            d = std::max(d, static_cast<int>(mono.size()));
        return d;
    }

    bool is_homogeneous(int deg) const
    {
        for (const auto& [mono, coeff] : terms_)
            if (static_cast<int>(mono.size()) != deg)
                return false;
        return true;
    }

    /// Terms of total degree `deg`.
    Polynomial homogeneous_part(int deg) const
    {
        Polynomial out;
        for (const auto& [mono, coeff] : terms_)
            if (static_cast<int>(mono.size()) == deg)
                out.terms_.emplace(mono, coeff);
        return out;
    }

    Polynomial& operator+=(const Polynomial& o)
    {
        for (const auto& [mono, coeff] : o.terms_)
            add_term(mono, coeff);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& o)
    {
        for (const auto& [mono, coeff] : o.terms_)
            add_term(mono, -coeff);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator-(Polynomial a)
    {
        for (auto& [mono, coeff] : a.terms_)
            coeff = -coeff;
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                m.reserve(ma.size() + mb.size());
                std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    Rational evaluate(std::span<const Rational> point) const
    {
        Rational total = 0;
        for (const auto& [mono, coeff] : terms_) {
            Rational t = coeff;
            for (int v : mono) {
                t *= point[v];
                if (t == 0)
                    break;
            }
            total += t;
        }
        return total;
    }

    /// Partial derivative with respect to x_var.
    Polynomial derivative(int var) const
    {
        Polynomial out;
        for (const auto& [mono, coeff] : terms_) {
            const auto count = std::count(mono.begin(), mono.end(), var);
            if (count == 0)
                continue;
            Monomial m = mono;
            m.erase(std::find(m.begin(), m.end(), var));
            out.add_term(m, coeff * static_cast<int>(count));
        }
        return out;
    }

    /// Scales so the leading (first in monomial order) coefficient is positive.
    Polynomial sign_normalized() const
    {
        if (!terms_.empty() && terms_.begin()->second < 0)
            return -*this;
        return *this;
    }

    /// e.g. "m_1_3*m_2_4 - m_1_4*m_2_3"; `name` maps a variable index to its label.
    std::string to_string(const std::function<std::string(int)>& name) const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [mono, coeff] : terms_) {
            const bool negative = coeff < 0;
            const Rational mag = negative ? Rational(-coeff) : coeff;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            std::string body;
            for (int v : mono) {
                if (!body.empty())
                    body += "*";
                body += name(v);
            }
            if (body.empty())
                out += mag.str();
            else if (mag != 1)
                out += mag.str() + "*" + body;
            else
                out += body;
        }
        return out;
    }

    auto operator<=>(const Polynomial& o) const
    {
        // total order for use as a set key
        auto ia = terms_.begin(), ib = o.terms_.begin();
        for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
            if (auto c = ia->first <=> ib->first; c != 0)
                return c;
            if (ia->second != ib->second)
                return ia->second < ib->second ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
        }
        return (terms_.size() <=> o.terms_.size());
    }
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

private:
    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::map<Monomial, Rational> terms_;
};

using PolynomialMatrix = DenseMatrix<Polynomial>;

/// Laplace expansion along the first row; fine for the small minors used here.
inline Polynomial determinant(const PolynomialMatrix& m)
{
    const std::size_t k = m.rows();
    if (k != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (k == 0)
        return Polynomial::constant(1);
    if (k == 1)
        return m(0, 0);
    if (k == 2)
        return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    Polynomial total;
    for (std::size_t c = 0; c < k; ++c) {
        if (m(0, c).is_zero())
            continue;
        PolynomialMatrix minor(k - 1, k - 1);
        for (std::size_t r = 1; r < k; ++r)
            for (std::size_t cc = 0, out = 0; cc < k; ++cc)
                if (cc != c)
                    minor(r - 1, out++) = m(r, cc);
        Polynomial term = m(0, c) * determinant(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

} // namespace schubert
