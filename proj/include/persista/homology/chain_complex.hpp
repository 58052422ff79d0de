#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "persista/algebra/dense.hpp"
#include "persista/algebra/smith.hpp"
#include "persista/algebra/sparse.hpp"
#include "persista/core/chain.hpp"
#include "persista/core/filtration.hpp"
#include "persista/core/simplex.hpp"

namespace persista {

using IntColumn = std::vector<std::pair<std::size_t, std::int64_t>>;

/**
 * A finite free chain complex over Z, graded by dimension. Column j of
 * boundary[d] is the boundary of the j-th d-cell written over the
 * (d-1)-cells. Simplicial complexes also record which simplex each cell is.
 */
struct ChainComplex {
    std::vector<std::vector<IntColumn>> boundary;
    std::vector<std::vector<Simplex>> labels;

    /// -1 for the zero complex.
    int top_dimension() const noexcept {
        for (std::size_t d = boundary.size(); d-- > 0;)
            if (!boundary[d].empty())
                return static_cast<int>(d);
        return -1;
    }

    std::size_t cells(int d) const noexcept {
        if (d < 0 || static_cast<std::size_t>(d) >= boundary.size())
            return 0;
        return boundary[static_cast<std::size_t>(d)].size();
    }

    /// Matrix of the d-th boundary map, cells(d-1) x cells(d).
    SparseMatrix boundary_matrix(int d, const PrimeField& f) const {
        std::vector<SparseColumn> cols;
        if (d >= 0 && static_cast<std::size_t>(d) < boundary.size())
            for (const IntColumn& c : boundary[static_cast<std::size_t>(d)]) {
                std::vector<SparseEntry> e;
                for (const auto& [row, coeff] : c)
                    e.push_back({row, f.reduce(coeff)});
                cols.emplace_back(std::move(e), f);
            }
        else
            cols.resize(cells(d));
        return SparseMatrix(cells(d - 1), std::move(cols));
    }

    DenseMatrix boundary_dense(int d, const PrimeField& f) const {
        DenseMatrix m(cells(d - 1), cells(d));
        if (d >= 0 && static_cast<std::size_t>(d) < boundary.size())
            for (std::size_t j = 0; j < boundary[static_cast<std::size_t>(d)].size(); ++j)
                for (const auto& [row, coeff] : boundary[static_cast<std::size_t>(d)][j])
                    m(row, j) = f.add(m(row, j), f.reduce(coeff));
        return m;
    }

    IntMatrix boundary_integer(int d) const {
        IntMatrix m(cells(d - 1), cells(d));
        if (d >= 0 && static_cast<std::size_t>(d) < boundary.size())
            for (std::size_t j = 0; j < boundary[static_cast<std::size_t>(d)].size(); ++j)
                for (const auto& [row, coeff] : boundary[static_cast<std::size_t>(d)][j])
                    m(row, j) = checked::add(m(row, j), coeff);
        return m;
    }

    /// Position of a labelled simplex inside its dimension, or -1.
    std::ptrdiff_t index_of(const Simplex& s) const {
        const auto d = static_cast<std::size_t>(s.dimension());
        if (d >= labels.size())
            return -1;
        const auto& v = labels[d];
        auto it = std::lower_bound(v.begin(), v.end(), s);
        return (it != v.end() && *it == s) ? it - v.begin() : -1;
    }
};

/// Simplicial chain complex of X, or of the quotient X / A when `quotient`
/// is given (cells of A are deleted, together with their rows).
inline ChainComplex simplicial_chain_complex(const SimplicialComplex& x, const SimplicialComplex* quotient = nullptr) {
    ChainComplex cc;
    const int top = x.dimension();
    cc.boundary.resize(static_cast<std::size_t>(top + 1));
    cc.labels.resize(static_cast<std::size_t>(top + 1));
    for (const Simplex& s : x)
        if (!quotient || !quotient->contains(s))
            cc.labels[static_cast<std::size_t>(s.dimension())].push_back(s);
    for (std::size_t d = 0; d < cc.labels.size(); ++d) {
        for (const Simplex& s : cc.labels[d]) {
            IntColumn col;
            for (const auto& [face, coeff] : simplicial_boundary(s)) {
                const std::ptrdiff_t row = cc.index_of(face);
                if (row >= 0)
                    col.emplace_back(static_cast<std::size_t>(row), coeff);
            }
            std::sort(col.begin(), col.end());
            cc.boundary[d].push_back(std::move(col));
        }
    }
    while (!cc.boundary.empty() && cc.boundary.back().empty()) {
        cc.boundary.pop_back();
        cc.labels.pop_back();
    }
    return cc;
}

/// Cellular chain complex of the whole filtration (its final space).
inline ChainComplex cellular_chain_complex(const Filtration& flt) {
    ChainComplex cc;
    const int top = flt.max_dimension();
    cc.boundary.resize(static_cast<std::size_t>(top + 1));
    std::vector<std::size_t> local(flt.size());
    for (const Cell& c : flt.cells()) {
        auto& group = cc.boundary[static_cast<std::size_t>(c.dim)];
        local[c.id] = group.size();
        IntColumn col;
        for (const auto& [face, coeff] : c.boundary)
            col.emplace_back(local[face], coeff);
        std::sort(col.begin(), col.end());
        group.push_back(std::move(col));
    }
    return cc;
}

} // namespace persista
