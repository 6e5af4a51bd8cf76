#pragma once

// Transversal slices N_{v,w} in the coordinates of the chart M_v.
//
// A point of M_v is an n x n matrix whose row j holds m(e_j): a 1 in column
// v(j), zeros left of it and zeros in every column k with v^{-1}(k) < j. The
// flag W_p is spanned by rows 1..p and V_q by e_1..e_q, so
//
//   dim(W_p cap V_q) = p - rank(rows 1..p, columns q+1..n).
//
// Inside the slice only the entries (j,k) whose rectangle
// [j, v^{-1}(k)) x [v(j), k) lies in D = {r_v > r_w} may be nonzero. The
// closed equations describe the cone on those free entries for each of the
// three singularity types; the determinantal model is the raw rank
// conditions of X_w restricted to the same entries. verify_slice checks the
// two against each other and against direct rank computations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "schubert/components.hpp"
#include "schubert/linalg.hpp"
#include "schubert/permutation.hpp"
#include "schubert/polynomial.hpp"

namespace schubert {

/// Matrix entry (row j, column k), 1-indexed.
struct Position {
    int row = 0;
    int col = 0;
    auto operator<=>(const Position&) const = default;
};

/// n x n matrix in the chart M_v; row j is m(e_j) in the reference basis.
using FlagMatrix = RationalMatrix;

/// Raised when the free entries do not have the block shape of the type.
class SliceStructureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Free entries form a full rectangle rows x cols; the cone is rank <= 1.
struct RankOneShape {
    std::vector<int> rows;
    std::vector<int> cols;
};

/// Free entries lie in one row and one column. The row entry in column k is
/// paired with the column entry in row v^{-1}(k).
struct QuadricShape {
    int row = 0;
    int col = 0;
    std::vector<std::pair<int, int>> pairs; // indices into SliceModel::free
    std::vector<int> unpaired;
};

/// Free entries split into an (l+1) x 2 block A and a 2 x (m+1) block B.
/// Column a_cols[i] of A is paired with row b_rows[i] = v^{-1}(a_cols[i]) of B.
struct PairedBlocksShape {
    std::vector<int> a_rows;
    std::array<int, 2> a_cols{};
    std::array<int, 2> b_rows{};
    std::vector<int> b_cols;
};

using SliceShape = std::variant<std::monostate, RankOneShape, QuadricShape, PairedBlocksShape>;

struct SliceModel {
    Permutation v;
    Permutation w;
    SingularityType type = SingularityType::T4231;
    int codim = 0;
    std::vector<Position> free;
    SliceShape shape;
    std::vector<Polynomial> closed_equations;
    std::vector<Polynomial> determinantal_equations;

    /// Index of `p` in `free`, or -1.
    int variable(Position p) const
    {
        const auto it = std::lower_bound(free.begin(), free.end(), p);
        return it != free.end() && *it == p ? static_cast<int>(it - free.begin()) : -1;
    }

    int variable(int row, int col) const { return variable(Position{row, col}); }

    std::string variable_name(int index) const
    {
        return "m_" + std::to_string(free[index].row) + "_" + std::to_string(free[index].col);
    }
};

/// Assignment of a rational value to every free coordinate, in `free` order.
using Assignment = std::vector<Rational>;

struct SliceVerdict {
    bool tangent_ok = false;
    bool dim_ok = false;
    bool containment_ok = false;
    bool exclusion_ok = false;
    bool equivalence_ok = false;
    int samples = 0;
    int expected_dim = 0;
    int parametrization_dim = 0;
    int equation_dim = 0;
    std::vector<std::string> failures;

    bool all_ok() const
    {
        return tangent_ok && dim_ok && containment_ok && exclusion_ok && equivalence_ok;
    }
};

inline std::vector<Position> free_coordinates(const Permutation& v, const Permutation& w)
{
    if (!bruhat_leq(v, w))
        throw std::invalid_argument("free_coordinates: " + v.to_string() + " is not <= " +
                                    w.to_string());
    const Region d = region_D(v, w);
    const Permutation vinv = inverse(v);
    const int n = v.size();
    std::vector<Position> out;
    for (int j = 1; j <= n; ++j)
        for (int k = v(j) + 1; k <= n; ++k)
            if (j < vinv(k) && d.contains_rectangle(j, vinv(k), v(j), k))
                out.push_back({j, k});
    return out;
}

enum class DeterminantalCells {
    all,    // every (p, q) with 1 <= p, q < n
    region, // only the cells of D
};

/// Rank conditions of X_w on the free entries of the slice chart: for each cell,
/// all minors of size p - r_w(p,q) + 1 of rows 1..p, columns q+1..n. Zero
/// polynomials and duplicates (up to sign) are dropped.
inline std::vector<Polynomial> determinantal_model(const Permutation& v, const Permutation& w,
                                                   DeterminantalCells cells = DeterminantalCells::all)
{
    const std::vector<Position> free = free_coordinates(v, w);
    const int n = v.size();
    PolynomialMatrix chart(n, n);
    for (int j = 1; j <= n; ++j)
        chart(j - 1, v(j) - 1) = Polynomial::constant(1);
    for (std::size_t i = 0; i < free.size(); ++i)
        chart(free[i].row - 1, free[i].col - 1) = Polynomial::variable(static_cast<int>(i));

    const RankTable rw(w);
    const Region d = region_D(v, w);
    std::set<Polynomial> unique;

    for (int p = 1; p < n; ++p) {
        for (int q = 1; q < n; ++q) {
            if (cells == DeterminantalCells::region && !d.contains(p, q))
                continue;
            const int k = p - rw(p, q) + 1;
            std::vector<int> rows, cols;
            for (int r = 0; r < p; ++r)
                for (int c = q; c < n; ++c)
                    if (!chart(r, c).is_zero()) {
                        rows.push_back(r);
                        break;
                    }
            for (int c = q; c < n; ++c)
                for (int r = 0; r < p; ++r)
                    if (!chart(r, c).is_zero()) {
                        cols.push_back(c);
                        break;
                    }
            if (k > static_cast<int>(rows.size()) || k > static_cast<int>(cols.size()))
                continue;

            std::vector<bool> row_pick(rows.size(), false), col_pick(cols.size(), false);
            std::fill(row_pick.begin(), row_pick.begin() + k, true);
            do {
                std::fill(col_pick.begin(), col_pick.end(), false);
                std::fill(col_pick.begin(), col_pick.begin() + k, true);
                do {
                    PolynomialMatrix minor(k, k);
                    for (std::size_t a = 0, mr = 0; a < rows.size(); ++a) {
                        if (!row_pick[a])
                            continue;
                        for (std::size_t b = 0, mc = 0; b < cols.size(); ++b)
                            if (col_pick[b])
                                minor(mr, mc++) = chart(rows[a], cols[b]);
                        ++mr;
                    }
                    Polynomial det = determinant(minor);
                    if (det.is_zero())
                        continue;
                    if (det.is_constant())
                        throw std::logic_error("determinantal_model: nonzero constant minor; " +
                                               v.to_string() + " is not in X_" + w.to_string());
                    unique.insert(det.sign_normalized());
                } while (std::prev_permutation(col_pick.begin(), col_pick.end()));
            } while (std::prev_permutation(row_pick.begin(), row_pick.end()));
        }
    }
    return {unique.begin(), unique.end()};
}

namespace detail {

inline Polynomial product(int a, int b) { return Polynomial::variable(a) * Polynomial::variable(b); }

inline int require_var(const SliceModel& s, int row, int col)
{
    const int idx = s.variable(row, col);
    if (idx < 0)
        throw SliceStructureError("expected free entry (" + std::to_string(row) + "," +
                                  std::to_string(col) + ") for (" + s.v.to_string() + ", " +
                                  s.w.to_string() + ")");
    return idx;
}

inline std::vector<int> distinct_rows(const std::vector<Position>& ps)
{
    std::set<int> out;
    for (const auto& p : ps)
        out.insert(p.row);
    return {out.begin(), out.end()};
}

inline std::vector<int> distinct_cols(const std::vector<Position>& ps)
{
    std::set<int> out;
    for (const auto& p : ps)
        out.insert(p.col);
    return {out.begin(), out.end()};
}

inline void build_rank_one(SliceModel& s, const Component& c)
{
    RankOneShape shape{distinct_rows(s.free), distinct_cols(s.free)};
    if (shape.rows.size() * shape.cols.size() != s.free.size())
        throw SliceStructureError("4231 slice for (" + s.v.to_string() + ", " + s.w.to_string() +
                                  ") is not a full rectangle");
    const std::size_t small = std::min(shape.rows.size(), shape.cols.size());
    const std::size_t large = std::max(shape.rows.size(), shape.cols.size());
    if (!c.m || small != static_cast<std::size_t>(c.l + 1) ||
        large != static_cast<std::size_t>(*c.m + 1))
        throw SliceStructureError("4231 slice rectangle does not have sides l+1, m+1");
    for (std::size_t a = 0; a < shape.rows.size(); ++a)
        for (std::size_t b = a + 1; b < shape.rows.size(); ++b)
            for (std::size_t x = 0; x < shape.cols.size(); ++x)
                for (std::size_t y = x + 1; y < shape.cols.size(); ++y) {
                    const int r1 = shape.rows[a], r2 = shape.rows[b];
                    const int c1 = shape.cols[x], c2 = shape.cols[y];
                    s.closed_equations.push_back(
                        product(s.variable(r1, c1), s.variable(r2, c2)) -
                        product(s.variable(r1, c2), s.variable(r2, c1)));
                }
    s.shape = std::move(shape);
}

inline void build_quadric(SliceModel& s, const Permutation& vinv)
{
    QuadricShape shape;
    shape.row = s.free.front().row;
    shape.col = 0;
    for (const auto& p : s.free)
        shape.col = std::max(shape.col, p.col);
    std::vector<bool> used(s.free.size(), false);
    for (std::size_t i = 0; i < s.free.size(); ++i) {
        const Position p = s.free[i];
        if (p.row != shape.row && p.col != shape.col)
            throw SliceStructureError("34*12 slice for (" + s.v.to_string() + ", " +
                                      s.w.to_string() + ") has an entry off the row/column cross");
        if (p.row != shape.row || p.col == shape.col)
            continue;
        const int partner = s.variable(vinv(p.col), shape.col);
        if (partner >= 0) {
            shape.pairs.emplace_back(static_cast<int>(i), partner);
            used[i] = used[partner] = true;
        }
    }
    if (shape.pairs.empty())
        throw SliceStructureError("34*12 slice has no paired entries");
    for (std::size_t i = 0; i < s.free.size(); ++i)
        if (!used[i])
            shape.unpaired.push_back(static_cast<int>(i));
    Polynomial quadric;
    for (const auto& [a, b] : shape.pairs)
        quadric += product(a, b);
    s.closed_equations.push_back(quadric);
    s.shape = std::move(shape);
}

inline void build_paired_blocks(SliceModel& s, const Component& c, const Permutation& vinv)
{
    const std::vector<int> cols = distinct_cols(s.free);
    for (std::size_t x = 0; x < cols.size(); ++x) {
        for (std::size_t y = x + 1; y < cols.size(); ++y) {
            PairedBlocksShape shape;
            shape.a_cols = {cols[x], cols[y]};
            shape.b_rows = {vinv(cols[x]), vinv(cols[y])};
            std::vector<Position> a_part, b_part;
            for (const auto& p : s.free) {
                if (p.row == shape.b_rows[0] || p.row == shape.b_rows[1])
                    b_part.push_back(p);
                else
                    a_part.push_back(p);
            }
            shape.a_rows = distinct_rows(a_part);
            shape.b_cols = distinct_cols(b_part);
            const auto a_cols_seen = distinct_cols(a_part);
            const std::vector<int> expect_a_cols{std::min(cols[x], cols[y]), std::max(cols[x], cols[y])};
            if (shape.a_rows.empty() || shape.b_cols.empty() || a_cols_seen != expect_a_cols ||
                a_part.size() != 2 * shape.a_rows.size() ||
                b_part.size() != 2 * shape.b_cols.size() ||
                distinct_rows(b_part).size() != 2)
                continue;
            if (std::find(shape.b_cols.begin(), shape.b_cols.end(), cols[x]) != shape.b_cols.end() ||
                std::find(shape.b_cols.begin(), shape.b_cols.end(), cols[y]) != shape.b_cols.end())
                continue;
            if (static_cast<int>(shape.a_rows.size() + shape.b_cols.size()) - 2 != c.l)
                continue;

            const auto [c1, c2] = shape.a_cols;
            const auto [r1, r2] = shape.b_rows;
            for (std::size_t i = 0; i < shape.a_rows.size(); ++i)
                for (std::size_t j = i + 1; j < shape.a_rows.size(); ++j) {
                    const int ri = shape.a_rows[i], rj = shape.a_rows[j];
                    s.closed_equations.push_back(product(require_var(s, ri, c1), require_var(s, rj, c2)) -
                                                 product(require_var(s, ri, c2), require_var(s, rj, c1)));
                }
            for (std::size_t i = 0; i < shape.b_cols.size(); ++i)
                for (std::size_t j = i + 1; j < shape.b_cols.size(); ++j) {
                    const int ci = shape.b_cols[i], cj = shape.b_cols[j];
                    s.closed_equations.push_back(product(require_var(s, r1, ci), require_var(s, r2, cj)) -
                                                 product(require_var(s, r1, cj), require_var(s, r2, ci)));
                }
            for (int row : shape.a_rows)
                for (int col : shape.b_cols)
                    s.closed_equations.push_back(product(require_var(s, row, c1), require_var(s, r1, col)) +
                                                 product(require_var(s, row, c2), require_var(s, r2, col)));
            s.shape = std::move(shape);
            return;
        }
    }
    throw SliceStructureError("34(0)12 slice for (" + s.v.to_string() + ", " + s.w.to_string() +
                              ") does not split into an (l+1)x2 and a 2x(m+1) block");
}

} // namespace detail

inline SliceModel build_slice(const Component& c, const Permutation& w)
{
    SliceModel s;
    s.v = c.v;
    s.w = w;
    s.type = c.type;
    s.codim = c.codim;
    s.free = free_coordinates(c.v, w);
    s.determinantal_equations = determinantal_model(c.v, w);
    if (s.free.empty())
        return s;
    const Permutation vinv = inverse(c.v);
    switch (c.type) {
    case SingularityType::T4231: detail::build_rank_one(s, c); break;
    case SingularityType::T3412Star: detail::build_quadric(s, vinv); break;
    case SingularityType::T3412Empty: detail::build_paired_blocks(s, c, vinv); break;
    }
    return s;
}

inline FlagMatrix embed_point(const SliceModel& s, const Assignment& assignment)
{
    if (assignment.size() != s.free.size())
        throw std::invalid_argument("embed_point: assignment size does not match free coordinates");
    const int n = s.v.size();
    FlagMatrix f(n, n);
    for (int j = 1; j <= n; ++j)
        f(j - 1, s.v(j) - 1) = 1;
    for (std::size_t i = 0; i < s.free.size(); ++i)
        f(s.free[i].row - 1, s.free[i].col - 1) = assignment[i];
    return f;
}

/// p - rank(rows 1..p, columns q+1..n) >= r_w(p,q) for all p, q.
inline bool in_schubert(const Permutation& w, const FlagMatrix& f)
{
    const int n = w.size();
    if (f.rows() != static_cast<std::size_t>(n) || f.cols() != static_cast<std::size_t>(n))
        throw std::invalid_argument("in_schubert: matrix size does not match permutation");
    const RankTable rw(w);
    std::vector<std::size_t> right_to_left(n);
    for (int c = 0; c < n; ++c)
        right_to_left[c] = static_cast<std::size_t>(n - 1 - c);
    for (int p = 1; p <= n; ++p) {
        RationalMatrix rows = f.block(0, p, 0, n);
        // ranks[k] = rank of the last k columns = rank(columns n-k+1..n)
        const auto ranks = detail::echelon_prefix_ranks(rows, right_to_left);
        for (int q = 1; q <= n; ++q)
            if (p - static_cast<int>(ranks[n - q]) < rw(p, q))
                return false;
    }
    return true;
}

inline FlagMatrix permutation_matrix(const Permutation& u)
{
    FlagMatrix f(u.size(), u.size());
    for (int j = 1; j <= u.size(); ++j)
        f(j - 1, u(j) - 1) = 1;
    return f;
}

namespace detail {

struct ConeSample {
    std::vector<Rational> params;
    Assignment point;
};

class SampleSource {
public:
    explicit SampleSource(std::uint64_t seed) : rng_(seed) {}

    int draw() { return dist_(rng_); }

    int draw_nonzero()
    {
        int x = 0;
        while (x == 0)
            x = draw();
        return x;
    }

    std::vector<Rational> draw_vector(std::size_t size, bool nonzero_vector)
    {
        std::vector<Rational> out(size);
        while (true) {
            bool any = false;
            for (auto& x : out) {
                x = draw();
                any = any || x != 0;
            }
            if (any || !nonzero_vector || size == 0)
                return out;
        }
    }

private:
    std::mt19937_64 rng_;
    std::uniform_int_distribution<int> dist_{-9, 9};
};

inline ConeSample sample_one(const SliceModel& s, SampleSource& src)
{
    ConeSample out;
    out.point.assign(s.free.size(), 0);
    if (const auto* r1 = std::get_if<RankOneShape>(&s.shape)) {
        const auto u = src.draw_vector(r1->rows.size(), true);
        const auto x = src.draw_vector(r1->cols.size(), true);
        out.params = u;
        out.params.insert(out.params.end(), x.begin(), x.end());
        for (std::size_t a = 0; a < u.size(); ++a)
            for (std::size_t b = 0; b < x.size(); ++b)
                out.point[s.variable(r1->rows[a], r1->cols[b])] = u[a] * x[b];
    } else if (const auto* qd = std::get_if<QuadricShape>(&s.shape)) {
        // solve the quadric for the column entry of the first pair
        const auto [a0, b0] = qd->pairs.front();
        do {
            for (std::size_t i = 0; i < s.free.size(); ++i)
                out.point[i] = src.draw();
            out.point[a0] = src.draw_nonzero();
            Rational rest = 0;
            for (std::size_t k = 1; k < qd->pairs.size(); ++k)
                rest += out.point[qd->pairs[k].first] * out.point[qd->pairs[k].second];
            out.point[b0] = -rest / out.point[a0];
        } while (std::all_of(out.point.begin(), out.point.end(), [](const Rational& r) { return r == 0; }));
        for (std::size_t i = 0; i < s.free.size(); ++i)
            if (static_cast<int>(i) != b0)
                out.params.push_back(out.point[i]);
    } else if (const auto* pb = std::get_if<PairedBlocksShape>(&s.shape)) {
        // rank-one 2 x (l+m+2) matrix [a, b'; a', -b] = (s, t)^T (alpha | beta)
        Rational sc, tc;
        do {
            sc = src.draw();
            tc = src.draw();
        } while (sc == 0 && tc == 0);
        const auto alpha = src.draw_vector(pb->a_rows.size(), true);
        const auto beta = src.draw_vector(pb->b_cols.size(), true);
        out.params = {sc, tc};
        out.params.insert(out.params.end(), alpha.begin(), alpha.end());
        out.params.insert(out.params.end(), beta.begin(), beta.end());
        for (std::size_t i = 0; i < pb->a_rows.size(); ++i) {
            out.point[s.variable(pb->a_rows[i], pb->a_cols[0])] = sc * alpha[i];
            out.point[s.variable(pb->a_rows[i], pb->a_cols[1])] = tc * alpha[i];
        }
        for (std::size_t j = 0; j < pb->b_cols.size(); ++j) {
            out.point[s.variable(pb->b_rows[0], pb->b_cols[j])] = -tc * beta[j];
            out.point[s.variable(pb->b_rows[1], pb->b_cols[j])] = sc * beta[j];
        }
    }
    return out;
}

/// d(point)/d(params) at a sample; rows follow `free`, columns follow params.
inline RationalMatrix parametrization_jacobian(const SliceModel& s, const ConeSample& sample)
{
    const std::size_t nf = s.free.size();
    RationalMatrix jac(nf, sample.params.size());
    if (const auto* r1 = std::get_if<RankOneShape>(&s.shape)) {
        const std::size_t nu = r1->rows.size();
        for (std::size_t a = 0; a < nu; ++a)
            for (std::size_t b = 0; b < r1->cols.size(); ++b) {
                const int row = s.variable(r1->rows[a], r1->cols[b]);
                jac(row, a) = sample.params[nu + b];
                jac(row, nu + b) = sample.params[a];
            }
    } else if (const auto* qd = std::get_if<QuadricShape>(&s.shape)) {
        const auto [a0, b0] = qd->pairs.front();
        // params are the free coordinates other than b0, in order
        auto param_col = [b0 = b0](int var) { return static_cast<std::size_t>(var < b0 ? var : var - 1); };
        for (std::size_t i = 0; i < nf; ++i)
            if (static_cast<int>(i) != b0)
                jac(i, param_col(static_cast<int>(i))) = 1;
        const Rational& a0v = sample.point[a0];
        Rational rest = 0;
        for (std::size_t k = 1; k < qd->pairs.size(); ++k) {
            const auto [a, b] = qd->pairs[k];
            rest += sample.point[a] * sample.point[b];
            jac(b0, param_col(a)) = -sample.point[b] / a0v;
            jac(b0, param_col(b)) = -sample.point[a] / a0v;
        }
        jac(b0, param_col(a0)) = rest / (a0v * a0v);
    } else if (const auto* pb = std::get_if<PairedBlocksShape>(&s.shape)) {
        const Rational& sc = sample.params[0];
        const Rational& tc = sample.params[1];
        const std::size_t na = pb->a_rows.size();
        for (std::size_t i = 0; i < na; ++i) {
            const Rational& alpha = sample.params[2 + i];
            const int x = s.variable(pb->a_rows[i], pb->a_cols[0]);
            const int y = s.variable(pb->a_rows[i], pb->a_cols[1]);
            jac(x, 0) = alpha;
            jac(x, 2 + i) = sc;
            jac(y, 1) = alpha;
            jac(y, 2 + i) = tc;
        }
        for (std::size_t j = 0; j < pb->b_cols.size(); ++j) {
            const Rational& beta = sample.params[2 + na + j];
            const int x = s.variable(pb->b_rows[0], pb->b_cols[j]);
            const int y = s.variable(pb->b_rows[1], pb->b_cols[j]);
            jac(x, 1) = -beta;
            jac(x, 2 + na + j) = -tc;
            jac(y, 0) = beta;
            jac(y, 2 + na + j) = sc;
        }
    }
    return jac;
}

inline RationalMatrix equation_jacobian(const std::vector<Polynomial>& equations,
                                        std::size_t variables, const Assignment& point)
{
    RationalMatrix jac(equations.size(), variables);
    for (std::size_t e = 0; e < equations.size(); ++e)
        for (std::size_t v = 0; v < variables; ++v)
            jac(e, v) = equations[e].derivative(static_cast<int>(v)).evaluate(point);
    return jac;
}

inline bool all_vanish(const std::vector<Polynomial>& equations, const Assignment& point)
{
    return std::all_of(equations.begin(), equations.end(),
                       [&](const Polynomial& p) { return p.evaluate(point) == 0; });
}

inline std::string describe(const SliceModel& s, const Assignment& point)
{
    std::string out = "(" + s.v.to_string() + ", " + s.w.to_string() + ") at {";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i > 0)
            out += ", ";
        out += s.variable_name(static_cast<int>(i)) + "=" + point[i].str();
    }
    return out + "}";
}

} // namespace detail

/// Points on the closed-equation cone, integer draws in [-9, 9].
inline std::vector<Assignment> sample_cone(const SliceModel& s, int trials, std::uint64_t seed)
{
    std::vector<Assignment> out;
    if (s.free.empty())
        return out;
    detail::SampleSource src(seed);
    for (int t = 0; t < trials; ++t)
        out.push_back(detail::sample_one(s, src).point);
    return out;
}

/// Seed for one (v, w) pair derived from a sweep-level seed.
inline std::uint64_t pair_seed(std::uint64_t seed, const Permutation& v, const Permutation& w)
{
    std::vector<std::uint32_t> material{static_cast<std::uint32_t>(seed),
                                        static_cast<std::uint32_t>(seed >> 32)};
    for (int x : v.values())
        material.push_back(static_cast<std::uint32_t>(x));
    for (int x : w.values())
        material.push_back(static_cast<std::uint32_t>(x));
    std::seed_seq seq(material.begin(), material.end());
    std::uint32_t words[2];
    seq.generate(words, words + 2);
    return (static_cast<std::uint64_t>(words[0]) << 32) | words[1];
}

inline SliceVerdict verify_slice(const SliceModel& s, int tangent_dim, int trials, std::uint64_t seed)
{
    SliceVerdict verdict;
    const int lv = length(s.v);
    const int nf = static_cast<int>(s.free.size());
    verdict.expected_dim = s.codim;

    verdict.tangent_ok = nf == tangent_dim - lv;
    if (!verdict.tangent_ok)
        verdict.failures.push_back("tangent: |free| = " + std::to_string(nf) + " but m(w,v) - l(v) = " +
                                   std::to_string(tangent_dim - lv));
    for (const auto& eq : s.closed_equations)
        if (!eq.is_homogeneous(2)) {
            verdict.tangent_ok = false;
            verdict.failures.push_back("tangent: closed equation is not a pure quadric");
        }

    const Assignment vertex(nf, 0);
    verdict.containment_ok = in_schubert(s.w, embed_point(s, vertex));
    if (!verdict.containment_ok)
        verdict.failures.push_back("containment: cone vertex not in X_w");
    verdict.equivalence_ok = detail::all_vanish(s.determinantal_equations, vertex);
    if (!verdict.equivalence_ok)
        verdict.failures.push_back("equivalence: determinantal model does not vanish at the vertex");
    verdict.exclusion_ok = true;

    if (nf == 0) {
        verdict.dim_ok = s.codim == 0;
        return verdict;
    }

    detail::SampleSource src(seed);
    std::vector<detail::ConeSample> cone;
    for (int t = 0; t < std::max(trials, 1); ++t)
        cone.push_back(detail::sample_one(s, src));

    const auto& generic = cone.front();
    verdict.parametrization_dim =
        static_cast<int>(rank(detail::parametrization_jacobian(s, generic)));
    verdict.equation_dim =
        nf - static_cast<int>(rank(detail::equation_jacobian(s.closed_equations, nf, generic.point)));
    verdict.dim_ok = verdict.parametrization_dim == s.codim && verdict.equation_dim == s.codim;
    if (!verdict.dim_ok)
        verdict.failures.push_back("dim: parametrization " + std::to_string(verdict.parametrization_dim) +
                                   ", equations " + std::to_string(verdict.equation_dim) +
                                   ", expected " + std::to_string(s.codim));

    for (const auto& sample : cone) {
        ++verdict.samples;
        const bool closed = detail::all_vanish(s.closed_equations, sample.point);
        if (!closed) {
            verdict.containment_ok = false;
            verdict.failures.push_back("containment: sample off the cone " + detail::describe(s, sample.point));
        }
        if (!in_schubert(s.w, embed_point(s, sample.point))) {
            verdict.containment_ok = false;
            verdict.failures.push_back("containment: " + detail::describe(s, sample.point));
        }
        if (closed != detail::all_vanish(s.determinantal_equations, sample.point)) {
            verdict.equivalence_ok = false;
            verdict.failures.push_back("equivalence: " + detail::describe(s, sample.point));
        }
    }

    for (int t = 0; t < trials; ++t) {
        Assignment point;
        int attempts = 0;
        do {
            point = src.draw_vector(nf, true);
            if (++attempts > 1000)
                break;
        } while (detail::all_vanish(s.closed_equations, point));
        if (attempts > 1000) {
            verdict.exclusion_ok = false;
            verdict.failures.push_back("exclusion: could not draw an off-cone point");
            break;
        }
        ++verdict.samples;
        if (in_schubert(s.w, embed_point(s, point))) {
            verdict.exclusion_ok = false;
            verdict.failures.push_back("exclusion: off-cone point lies in X_w " + detail::describe(s, point));
        }
        if (detail::all_vanish(s.determinantal_equations, point)) {
            verdict.equivalence_ok = false;
            verdict.failures.push_back("equivalence: determinantal model vanishes off the cone " +
                                       detail::describe(s, point));
        }
    }
    return verdict;
}

inline SliceVerdict verify_slice(const Component& c, const Permutation& w, int trials, std::uint64_t seed)
{
    return verify_slice(build_slice(c, w), c.tangent_dim, trials, seed);
}

} // namespace schubert
