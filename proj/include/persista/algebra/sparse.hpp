#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "persista/algebra/prime_field.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"

namespace persista {

struct SparseEntry {
    std::size_t row;
    FieldElement value;

    bool operator==(const SparseEntry&) const = default;
};

/// A column over a prime field: strictly ascending rows, no zero values.
class SparseColumn {
public:
    SparseColumn() = default;

    /// Sorts, merges duplicate rows and drops zeros.
    SparseColumn(std::vector<SparseEntry> entries, const PrimeField& f) {
        std::sort(entries.begin(), entries.end(), [](auto& a, auto& b) { return a.row < b.row; });
        for (const SparseEntry& e : entries) {
            const FieldElement v = e.value % f.characteristic();
            if (!entries_.empty() && entries_.back().row == e.row) {
                entries_.back().value = f.add(entries_.back().value, v);
                if (entries_.back().value == 0)
                    entries_.pop_back();
            } else if (v != 0) {
                entries_.push_back({e.row, v});
            }
        }
    }

    /// Greatest row index with a nonzero entry.
    std::optional<std::size_t> low() const noexcept {
        if (entries_.empty())
            return std::nullopt;
        return entries_.back().row;
    }
    FieldElement low_value() const { return entries_.back().value; }

    FieldElement at(std::size_t row) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), row,
                                   [](const SparseEntry& e, std::size_t r) { return e.row < r; });
        return (it != entries_.end() && it->row == row) ? it->value : 0;
    }

    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::vector<SparseEntry>& entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Appends without merging; caller guarantees ascending rows and v != 0.
    void push_back_unchecked(std::size_t row, FieldElement v) { entries_.push_back({row, v}); }
    void clear() noexcept { entries_.clear(); }

    bool operator==(const SparseColumn&) const = default;

private:
    std::vector<SparseEntry> entries_;
};

/// target + lambda * source, merged in row order with cancellation.
inline SparseColumn add_scaled_column(const SparseColumn& target, const SparseColumn& source, FieldElement lambda,
                                      const PrimeField& f) {
    SparseColumn out;
    lambda %= f.characteristic();
    if (lambda == 0)
        return target;
    auto a = target.begin(), ae = target.end();
    auto b = source.begin(), be = source.end();
    while (a != ae || b != be) {
        if (b == be || (a != ae && a->row < b->row)) {
            out.push_back_unchecked(a->row, a->value);
            ++a;
        } else if (a == ae || b->row < a->row) {
            out.push_back_unchecked(b->row, f.mul(lambda, b->value));
            ++b;
        } else {
            const FieldElement v = f.add(a->value, f.mul(lambda, b->value));
            if (v != 0)
                out.push_back_unchecked(a->row, v);
            ++a;
            ++b;
        }
    }
    return out;
}

/// Column-major sparse matrix over a prime field.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t n_rows, std::size_t n_cols) : n_rows_(n_rows), columns_(n_cols) {}
    SparseMatrix(std::size_t n_rows, std::vector<SparseColumn> columns) : n_rows_(n_rows), columns_(std::move(columns)) {
        for (const SparseColumn& c : columns_)
            if (auto l = c.low(); l && *l >= n_rows_)
                throw ShapeError("entry row " + std::to_string(*l) + " outside a matrix with " + std::to_string(n_rows_) +
                                 " rows");
    }

    std::size_t rows() const noexcept { return n_rows_; }
    std::size_t cols() const noexcept { return columns_.size(); }
    const SparseColumn& column(std::size_t j) const { return columns_[j]; }
    SparseColumn& column(std::size_t j) { return columns_[j]; }
    const std::vector<SparseColumn>& columns() const noexcept { return columns_; }
    FieldElement at(std::size_t i, std::size_t j) const { return columns_[j].at(i); }

    std::size_t nonzeros() const noexcept {
        std::size_t n = 0;
        for (const SparseColumn& c : columns_)
            n += c.size();
        return n;
    }

    bool operator==(const SparseMatrix&) const = default;

private:
    std::size_t n_rows_ = 0;
    std::vector<SparseColumn> columns_;
};

/// Full boundary matrix of a filtration: entry (i, j) is the coefficient of
/// cell i in the boundary of cell j, reduced mod p.
inline SparseMatrix boundary_matrix(const Filtration& flt, const PrimeField& f) {
    std::vector<SparseColumn> cols;
    cols.reserve(flt.size());
    for (const Cell& c : flt.cells()) {
        std::vector<SparseEntry> e;
        for (const auto& [face, coeff] : c.boundary)
            e.push_back({face, f.reduce(coeff)});
        cols.emplace_back(std::move(e), f);
    }
    return SparseMatrix(flt.size(), std::move(cols));
}

/// Reflection across the anti-diagonal: result(i, j) = A(n - j, n - i), n = size - 1.
inline SparseMatrix anti_transpose(const SparseMatrix& a) {
    if (a.rows() != a.cols())
        throw ShapeError("anti_transpose needs a square matrix, got " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()));
    const std::size_t size = a.rows();
    std::vector<SparseColumn> cols(size);
    // Entry A(r, c) lands at (n - c, n - r). Walking source columns from the
    // right visits target rows in ascending order.
    for (std::size_t c = size; c-- > 0;) {
        const std::size_t row = size - 1 - c;
        for (const SparseEntry& e : a.column(c))
            cols[size - 1 - e.row].push_back_unchecked(row, e.value);
    }
    return SparseMatrix(size, std::move(cols));
}

inline SparseMatrix transpose(const SparseMatrix& a) {
    std::vector<SparseColumn> cols(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (const SparseEntry& e : a.column(j))
            cols[e.row].push_back_unchecked(j, e.value);
    return SparseMatrix(a.cols(), std::move(cols));
}

/// A * B over the field.
inline SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b, const PrimeField& f) {
    if (a.cols() != b.rows())
        throw ShapeError("inner dimensions differ in matrix product");
    std::vector<SparseColumn> cols;
    cols.reserve(b.cols());
    for (const SparseColumn& bc : b.columns()) {
        SparseColumn acc;
        for (const SparseEntry& e : bc)
            acc = add_scaled_column(acc, a.column(e.row), e.value, f);
        cols.push_back(std::move(acc));
    }
    return SparseMatrix(a.rows(), std::move(cols));
}

inline SparseMatrix identity_matrix(std::size_t n) {
    std::vector<SparseColumn> cols(n);
    for (std::size_t j = 0; j < n; ++j)
        cols[j].push_back_unchecked(j, 1);
    return SparseMatrix(n, std::move(cols));
}

/// Rank by left-to-right pivot elimination.
inline std::size_t sparse_rank(SparseMatrix m, const PrimeField& f) {
    std::vector<std::ptrdiff_t> pivot_owner(m.rows(), -1);
    std::size_t rank = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        SparseColumn& col = m.column(j);
        while (auto low = col.low()) {
            const std::ptrdiff_t owner = pivot_owner[*low];
            if (owner < 0) {
                pivot_owner[*low] = static_cast<std::ptrdiff_t>(j);
                ++rank;
                break;
            }
            const SparseColumn& other = m.column(static_cast<std::size_t>(owner));
            col = add_scaled_column(col, other, f.neg(f.div(col.low_value(), other.low_value())), f);
        }
    }
    return rank;
}

} // namespace persista
