#pragma once

// Exact rational matrices and rank by Gaussian elimination.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace schubert {

using Rational = boost::multiprecision::cpp_rational;

template <typename T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// Rows [r0, r1), columns [c0, c1).
    DenseMatrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const
    {
        DenseMatrix out(r1 - r0, c1 - c0);
        for (std::size_t r = r0; r < r1; ++r)
            for (std::size_t c = c0; c < c1; ++c)
                out(r - r0, c - c0) = (*this)(r, c);
        return out;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using RationalMatrix = DenseMatrix<Rational>;

namespace detail {

/// Reduces `m` in place to row echelon form, scanning columns in `order`.
/// Returns, for each prefix of `order`, the rank of those columns
/// (result[k] = rank of the first k columns scanned).
inline std::vector<std::size_t> echelon_prefix_ranks(RationalMatrix& m,
                                                     const std::vector<std::size_t>& order)
{
    std::vector<std::size_t> ranks(order.size() + 1, 0);
    std::size_t pivot_row = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t c = order[k];
        std::size_t r = pivot_row;
        while (r < m.rows() && m(r, c) == 0)
            ++r;
        if (r < m.rows()) {
            if (r != pivot_row)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    std::swap(m(r, j), m(pivot_row, j));
            const Rational pivot = m(pivot_row, c);
            for (std::size_t i = pivot_row + 1; i < m.rows(); ++i) {
                if (m(i, c) == 0)
                    continue;
                const Rational factor = m(i, c) / pivot;
                for (std::size_t kk = k; kk < order.size(); ++kk) {
                    const std::size_t j = order[kk];
                    if (m(pivot_row, j) != 0)
                        m(i, j) -= factor * m(pivot_row, j);
                }
            }
            ++pivot_row;
        }
        ranks[k + 1] = pivot_row;
    }
    return ranks;
}

} // namespace detail

inline std::size_t rank(RationalMatrix m)
{
    std::vector<std::size_t> order(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        order[c] = c;
    return detail::echelon_prefix_ranks(m, order).back();
}

} // namespace schubert
