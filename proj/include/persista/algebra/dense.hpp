#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "persista/algebra/prime_field.hpp"
#include "persista/core/errors.hpp"

namespace persista {

using FieldVector = std::vector<FieldElement>;

/// Small dense matrix over a prime field, row-major. Used where explicit
/// bases and coordinates are needed (exact sequences, the rank oracle).
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    /// Columns given as vectors of equal length `rows`.
    static DenseMatrix from_columns(std::size_t rows, const std::vector<FieldVector>& columns) {
        DenseMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows)
                throw ShapeError("column length does not match row count");
            for (std::size_t i = 0; i < rows; ++i)
                m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    FieldVector column(std::size_t j) const {
        FieldVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v[i] = (*this)(i, j);
        return v;
    }

    DenseMatrix transposed() const {
        DenseMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    FieldVector apply(const FieldVector& x, const PrimeField& f) const {
        if (x.size() != cols_)
            throw ShapeError("vector length does not match column count");
        FieldVector y(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (x[j])
                    y[i] = f.add(y[i], f.mul((*this)(i, j), x[j]));
        return y;
    }

    bool is_zero() const noexcept {
        for (FieldElement v : data_)
            if (v)
                return false;
        return true;
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElement> data_;
};

inline DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, const PrimeField& f) {
    if (a.cols() != b.rows())
        throw ShapeError("inner dimensions differ in matrix product");
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (const FieldElement aik = a(i, k))
                for (std::size_t j = 0; j < b.cols(); ++j)
                    c(i, j) = f.add(c(i, j), f.mul(aik, b(k, j)));
    return c;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(DenseMatrix& m, const PrimeField& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        const FieldElement s = f.inv(m(r, c));
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(r, j) = f.mul(m(r, j), s);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0)
                continue;
            const FieldElement factor = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(DenseMatrix m, const PrimeField& f) { return row_reduce(m, f).size(); }

inline std::size_t rank_of_vectors(std::size_t length, const std::vector<FieldVector>& vs, const PrimeField& f) {
    return rank(DenseMatrix::from_columns(length, vs), f);
}

/// Basis of {x : A x = 0}, one vector per free column of the echelon form.
inline std::vector<FieldVector> kernel_basis(DenseMatrix a, const PrimeField& f) {
    const auto pivots = row_reduce(a, f);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots)
        is_pivot[c] = true;
    std::vector<FieldVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        FieldVector v(a.cols(), 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = f.neg(a(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Subset of the given vectors forming a basis of their span (greedy, in order).
inline std::vector<FieldVector> independent_subset(std::size_t length, const std::vector<FieldVector>& vs,
                                                   const PrimeField& f) {
    DenseMatrix m = DenseMatrix::from_columns(length, vs);
    std::vector<FieldVector> out;
    for (std::size_t c : row_reduce(m, f))
        out.push_back(vs[c]);
    return out;
}

/// Some x with A x = b, or nullopt if the system is inconsistent.
inline std::optional<FieldVector> solve(const DenseMatrix& a, const FieldVector& b, const PrimeField& f) {
    if (b.size() != a.rows())
        throw ShapeError("right-hand side length does not match row count");
    DenseMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    const auto pivots = row_reduce(aug, f);
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;
    FieldVector x(a.cols(), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, a.cols());
    return x;
}

} // namespace persista
