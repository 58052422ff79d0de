#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "persista/algebra/prime_field.hpp"
#include "persista/algebra/sparse.hpp"
#include "persista/core/filtration.hpp"

namespace persista {

struct PersistencePair {
    CellId birth;
    CellId death;
    bool operator==(const PersistencePair&) const = default;
    auto operator<=>(const PersistencePair&) const = default;
};

/**
 * Outcome of reducing a boundary matrix D to R = D V.
 *
 *  - pairs: (b, d) with low(R_d) = b, sorted by d;
 *  - essential: indices with R_i = 0 that are nobody's low;
 *  - every index is essential, a birth, or a death, exactly once.
 */
struct ReductionResult {
    SparseMatrix reduced;
    SparseMatrix basis_change;
    std::vector<PersistencePair> pairs;
    std::vector<CellId> essential;

    std::size_t size() const noexcept { return reduced.cols(); }

    /// Columns of V with each birth column b replaced by R_d of its partner.
    /// In this basis the boundary sends the death generator to the birth
    /// generator and kills everything else.
    SparseMatrix adapted_basis() const {
        SparseMatrix basis = basis_change;
        for (const PersistencePair& p : pairs)
            basis.column(p.birth) = reduced.column(p.death);
        return basis;
    }
};

struct ReductionOptions {
    /// Process columns by degree, highest first, and zero out columns whose
    /// index already appeared as a pivot. Produces the same pairing.
    bool clearing = false;
};

namespace detail {

inline void eliminate(SparseMatrix& r, SparseMatrix& v, std::vector<std::ptrdiff_t>& owner, std::size_t j,
                      const PrimeField& f) {
    SparseColumn& col = r.column(j);
    while (auto low = col.low()) {
        const std::ptrdiff_t o = owner[*low];
        if (o < 0) {
            owner[*low] = static_cast<std::ptrdiff_t>(j);
            return;
        }
        const auto other = static_cast<std::size_t>(o);
        const FieldElement lambda = f.neg(f.div(col.low_value(), r.column(other).low_value()));
        col = add_scaled_column(col, r.column(other), lambda, f);
        v.column(j) = add_scaled_column(v.column(j), v.column(other), lambda, f);
    }
}

} // namespace detail

/**
 * Left-to-right column reduction. `degree[j]` (needed only for clearing) is
 * the grading of column j; entries of column j lie in rows of degree
 * degree[j] - 1.
 */
inline ReductionResult reduce(const SparseMatrix& boundary, const PrimeField& f, std::span<const int> degree = {},
                              ReductionOptions options = {}) {
    if (boundary.rows() != boundary.cols())
        throw ShapeError("boundary matrix must be square");
    const std::size_t n = boundary.cols();
    SparseMatrix r = boundary;
    SparseMatrix v = identity_matrix(n);
    std::vector<std::ptrdiff_t> owner(n, -1);

    if (options.clearing && degree.size() == n) {
        std::vector<int> levels(degree.begin(), degree.end());
        std::sort(levels.begin(), levels.end());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        std::vector<bool> cleared(n, false);
        for (auto lvl = levels.rbegin(); lvl != levels.rend(); ++lvl) {
            for (std::size_t j = 0; j < n; ++j) {
                if (degree[j] != *lvl || cleared[j])
                    continue;
                detail::eliminate(r, v, owner, j, f);
                if (auto low = r.column(j).low()) {
                    cleared[*low] = true;
                    r.column(*low).clear();
                    v.column(*low) = r.column(j);
                }
            }
        }
    } else {
        for (std::size_t j = 0; j < n; ++j)
            detail::eliminate(r, v, owner, j, f);
    }

    ReductionResult out{std::move(r), std::move(v), {}, {}};
    std::vector<bool> is_birth(n, false);
    for (std::size_t j = 0; j < n; ++j)
        if (auto low = out.reduced.column(j).low()) {
            out.pairs.push_back({*low, j});
            is_birth[*low] = true;
        }
    for (std::size_t j = 0; j < n; ++j)
        if (out.reduced.column(j).empty() && !is_birth[j])
            out.essential.push_back(j);
    return out;
}

inline ReductionResult reduce(const Filtration& flt, const PrimeField& f, ReductionOptions options = {}) {
    std::vector<int> dims;
    dims.reserve(flt.size());
    for (const Cell& c : flt.cells())
        dims.push_back(c.dim);
    return reduce(boundary_matrix(flt, f), f, dims, options);
}

} // namespace persista
