#pragma once

// Permutations of {1..n} in one-line notation, rank tables r_w(p,q),
// inversion length and Bruhat comparison.
//
// Positions and values are 1-indexed. A rank table carries an extra 0-th row
// and column of zeros so that difference formulas need no special cases.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

class Permutation {
public:
    Permutation() = default;

    /// Validates that `values` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> values) : values_(std::move(values))
    {
        if (values_.empty())
            throw std::invalid_argument("permutation must be non-empty");
        const int n = size();
        std::vector<bool> seen(n + 1, false);
        for (int x : values_) {
            if (x < 1 || x > n)
                throw std::invalid_argument("permutation value " + std::to_string(x) +
                                            " out of range 1.." + std::to_string(n));
            if (seen[x])
                throw std::invalid_argument("permutation value " + std::to_string(x) +
                                            " repeated");
            seen[x] = true;
        }
    }

    static Permutation identity(int n)
    {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = i + 1;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(values_.size()); }

    /// w(i), 1-indexed.
    int operator()(int i) const { return values_[i - 1]; }

    std::span<const int> values() const { return values_; }

    bool is_identity() const
    {
        for (int i = 0; i < size(); ++i)
            if (values_[i] != i + 1)
                return false;
        return true;
    }

    /// Compact digit form when n <= 9, comma-separated otherwise.
    std::string to_string() const
    {
        std::string out;
        const bool compact = size() <= 9;
        for (int i = 0; i < size(); ++i) {
            if (!compact && i > 0)
                out += ',';
            out += std::to_string(values_[i]);
        }
        return out;
    }

    /// Lexicographic on one-line notation.
    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> values_;
};

inline Permutation make_permutation(std::vector<int> values)
{
    return Permutation(std::move(values));
}

/// Parses "4,2,3,1" or, for n <= 9, the compact form "4231".
inline Permutation parse_permutation(std::string_view text)
{
    std::vector<int> values;
    if (text.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const std::size_t end = text.find(',', start);
            const std::string_view token =
                text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                 : end - start);
            if (token.empty() || token.size() > 4 ||
                !std::all_of(token.begin(), token.end(),
                             [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
            values.push_back(std::stoi(std::string(token)));
            if (end == std::string_view::npos)
                break;
            start = end + 1;
        }
    } else {
        if (text.empty() || text.size() > 9)
            throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
            values.push_back(c - '0');
        }
    }
    return Permutation(std::move(values));
}

inline void require_same_size(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("size mismatch: " + a.to_string() + " vs " + b.to_string());
}

inline Permutation inverse(const Permutation& w)
{
    std::vector<int> inv(w.size());
    for (int i = 1; i <= w.size(); ++i)
        inv[w(i) - 1] = i;
    return Permutation(std::move(inv));
}

/// (u v)(i) = u(v(i)).
inline Permutation compose(const Permutation& u, const Permutation& v)
{
    require_same_size(u, v);
    std::vector<int> out(u.size());
    for (int i = 1; i <= u.size(); ++i)
        out[i - 1] = u(v(i));
    return Permutation(std::move(out));
}

inline Permutation longest_element(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = n - i;
    return Permutation(std::move(v));
}

inline Permutation transposition(int n, int i, int j)
{
    std::vector<int> v(n);
    for (int k = 0; k < n; ++k)
        v[k] = k + 1;
    std::swap(v[i - 1], v[j - 1]);
    return Permutation(std::move(v));
}

/// All n(n-1)/2 transpositions (i j), i < j, in lexicographic order of (i, j).
inline std::vector<Permutation> all_transpositions(int n)
{
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back(transposition(n, i, j));
    return out;
}

/// v * (i j): swaps the entries in positions i and j.
inline Permutation swap_positions(const Permutation& v, int i, int j)
{
    std::vector<int> out(v.values().begin(), v.values().end());
    std::swap(out[i - 1], out[j - 1]);
    return Permutation(std::move(out));
}

/// All of S_n in lexicographic order.
inline std::vector<Permutation> all_permutations(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Number of inversions.
inline int length(const Permutation& w)
{
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j))
                ++count;
    return count;
}

class RankTable {
public:
    explicit RankTable(const Permutation& w) : n_(w.size()), r_((n_ + 1) * (n_ + 1), 0)
    {
        for (int p = 1; p <= n_; ++p) {
            const int wp = w(p);
            for (int q = 1; q <= n_; ++q)
                at(p, q) = at(p - 1, q) + (wp <= q ? 1 : 0);
        }
    }

    int size() const { return n_; }

    /// r(p,q) = #{i <= p : w(i) <= q}, for 0 <= p,q <= n.
    int operator()(int p, int q) const { return r_[p * (n_ + 1) + q]; }

    /// Recovers w: w(p) is the column where row p first exceeds row p-1.
    Permutation permutation() const
    {
        std::vector<int> values(n_);
        for (int p = 1; p <= n_; ++p) {
            for (int q = 1; q <= n_; ++q) {
                if ((*this)(p, q) - (*this)(p - 1, q) == 1) {
                    values[p - 1] = q;
                    break;
                }
            }
        }
        return Permutation(std::move(values));
    }

    /// Pointwise domination: r_this >= r_other.
    bool dominates(const RankTable& other) const
    {
        for (std::size_t i = 0; i < r_.size(); ++i)
            if (r_[i] < other.r_[i])
                return false;
        return true;
    }

    bool operator==(const RankTable&) const = default;

private:
    int& at(int p, int q) { return r_[p * (n_ + 1) + q]; }

    int n_;
    std::vector<int> r_;
};

inline RankTable rank_table(const Permutation& w) { return RankTable(w); }

inline bool bruhat_leq(const RankTable& v, const RankTable& w)
{
    if (v.size() != w.size())
        throw std::invalid_argument("size mismatch in Bruhat comparison");
    return v.dominates(w);
}

/// v <= w in Bruhat order, i.e. r_v >= r_w pointwise.
inline bool bruhat_leq(const Permutation& v, const Permutation& w)
{
    require_same_size(v, w);
    return RankTable(v).dominates(RankTable(w));
}

struct Cell {
    int p = 0;
    int q = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A set of cells of the n x n grid.
class Region {
public:
    Region() = default;
    explicit Region(int n) : n_(n), mask_(static_cast<std::size_t>(n) * n, false) {}

    void insert(Cell c)
    {
        auto slot = mask_[index(c)];
        if (!slot) {
            slot = true;
            cells_.insert(std::lower_bound(cells_.begin(), cells_.end(), c), c);
        }
    }

    bool contains(int p, int q) const
    {
        if (p < 1 || q < 1 || p > n_ || q > n_)
            return false;
        return mask_[index({p, q})];
    }

    /// True iff every cell of [p0, p1) x [q0, q1) lies in the region.
    bool contains_rectangle(int p0, int p1, int q0, int q1) const
    {
        for (int p = p0; p < p1; ++p)
            for (int q = q0; q < q1; ++q)
                if (!contains(p, q))
                    return false;
        return true;
    }

    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    int grid_size() const { return n_; }

    /// Sorted lexicographically by (p, q).
    const std::vector<Cell>& cells() const { return cells_; }

private:
    std::size_t index(Cell c) const { return static_cast<std::size_t>(c.p - 1) * n_ + (c.q - 1); }

    int n_ = 0;
    std::vector<bool> mask_;
    std::vector<Cell> cells_;
};

/// Cells where r_v > r_w.
inline Region region_D(const Permutation& v, const Permutation& w)
{
    require_same_size(v, w);
    const RankTable rv(v), rw(w);
    Region region(v.size());
    for (int p = 1; p <= v.size(); ++p)
        for (int q = 1; q <= v.size(); ++q)
            if (rv(p, q) > rw(p, q))
                region.insert({p, q});
    return region;
}

} // namespace schubert
