#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "persista/core/checked.hpp"
#include "persista/core/errors.hpp"

namespace persista {

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw ShapeError("ragged integer matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t j = 0; j < cols_; ++j)
                std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a != b)
            for (std::size_t i = 0; i < rows_; ++i)
                std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += q * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(dst, j) = checked::fma((*this)(dst, j), q, (*this)(src, j));
    }
    /// col[dst] += q * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t q) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, dst) = checked::fma((*this)(i, dst), q, (*this)(i, src));
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = checked::neg((*this)(r, j));
    }

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::int64_t> data_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("inner dimensions differ in integer matrix product");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (const std::int64_t aik = a(i, k))
                for (std::size_t j = 0; j < b.cols(); ++j)
                    c(i, j) = checked::fma(c(i, j), aik, b(k, j));
    return c;
}

/**
 * Smith normal form U * A * V = diag(d_1, ..., d_r, 0, ...), with
 * d_1 | d_2 | ... | d_r all positive. `diag` holds only the nonzero entries.
 * U and V are unimodular and present only when requested.
 */
struct SmithNormalForm {
    std::vector<std::int64_t> diag;
    std::size_t rank = 0;
    std::optional<IntMatrix> left;
    std::optional<IntMatrix> right;
};

namespace detail {

inline std::int64_t abs_checked(std::int64_t v) { return v < 0 ? checked::neg(v) : v; }

// Quotient rounded to nearest, so the remainder satisfies |r| <= |b| / 2.
inline std::int64_t nearest_quotient(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    const std::int64_t r = a - q * b;
    if (2 * abs_checked(r) > abs_checked(b))
        q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

} // namespace detail

/// Pivot each round is the nonzero entry of least absolute value in the
/// remaining block, ties broken by (row, col). Arithmetic is overflow-checked.
inline SmithNormalForm smith_normal_form(IntMatrix a, bool record_transforms = false) {
    const std::size_t m = a.rows(), n = a.cols();
    std::optional<IntMatrix> u, v;
    if (record_transforms) {
        u = IntMatrix::identity(m);
        v = IntMatrix::identity(n);
    }
    auto swap_rows = [&](std::size_t x, std::size_t y) {
        a.swap_rows(x, y);
        if (u)
            u->swap_rows(x, y);
    };
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        a.swap_cols(x, y);
        if (v)
            v->swap_cols(x, y);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        a.add_row_multiple(dst, src, q);
        if (u)
            u->add_row_multiple(dst, src, q);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t q) {
        a.add_col_multiple(dst, src, q);
        if (v)
            v->add_col_multiple(dst, src, q);
    };

    SmithNormalForm out;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Pivot: least nonzero |a_ij| over the trailing block.
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        std::int64_t best = 0;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a(i, j) != 0) {
                    const std::int64_t val = detail::abs_checked(a(i, j));
                    if (!pivot || val < best) {
                        pivot = {i, j};
                        best = val;
                    }
                }
        if (!pivot)
            break;
        swap_rows(t, pivot->first);
        swap_cols(t, pivot->second);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (a(i, t) != 0) {
                    add_row(i, t, -detail::nearest_quotient(a(i, t), a(t, t)));
                    clean = clean && a(i, t) == 0;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (a(t, j) != 0) {
                    add_col(j, t, -detail::nearest_quotient(a(t, j), a(t, t)));
                    clean = clean && a(t, j) == 0;
                }
            if (!clean) {
                // A remainder smaller than the pivot survived: move it in.
                std::size_t bi = t, bj = t;
                std::int64_t bv = detail::abs_checked(a(t, t));
                for (std::size_t i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && detail::abs_checked(a(i, t)) < bv) {
                        bv = detail::abs_checked(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && detail::abs_checked(a(t, j)) < bv) {
                        bv = detail::abs_checked(a(t, j));
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // Enforce divisibility of the remaining block by the pivot.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < m && !bad_row; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            add_row(t, *bad_row, 1);
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (u)
                u->negate_row(t);
        }
        out.diag.push_back(a(t, t));
    }
    out.rank = out.diag.size();
    out.left = std::move(u);
    out.right = std::move(v);
    return out;
}

} // namespace persista
