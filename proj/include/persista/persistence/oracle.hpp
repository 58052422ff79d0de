#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "persista/algebra/dense.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/persistence/barcode.hpp"

namespace persista {

enum class OracleVariant { absolute, relative };

struct OracleOptions {
    std::size_t cap = 64;
    bool keep_ephemeral = false;
};

/**
 * Barcode recovered from the rank invariant by inclusion-exclusion, using
 * nothing but dense linear algebra on truncated (absolute) or quotient
 * (relative) complexes. Shares no code with the reduction.
 *
 * Absolute: module index t = 0..n is H_k(X^t).
 * Relative: module index t = 0..n+1 is H_k(X^n, X^{t-1}) with X^{-1} empty,
 *           so index t carries the value a_{t-1} and index 0 carries -inf.
 * For i <= j, r(i, j) is the rank of the structure map from index i to j;
 * the number of classes born at i and last alive at j is
 *   mu(i, j) = r(i, j) - r(i, j+1) - r(i-1, j) + r(i-1, j+1),
 * with r = 0 outside the index range.
 */
class RankInvariantOracle {
public:
    RankInvariantOracle(const Filtration& flt, const PrimeField& f, OracleVariant variant, OracleOptions options = {})
        : flt_(flt), f_(f), variant_(variant), options_(options) {
        if (flt.size() > options.cap)
            throw OracleCapExceeded("filtration has " + std::to_string(flt.size()) + " cells, oracle cap is " +
                                    std::to_string(options.cap));
    }

    /// Number of module indices.
    std::size_t length() const noexcept { return variant_ == OracleVariant::absolute ? flt_.size() : flt_.size() + 1; }

    /// Rank of the structure map from index i to index j (i <= j) in degree k.
    std::size_t rank_of_map(int k, std::size_t i, std::size_t j) const {
        const Degree g = degree(k);
        return image_rank(g, sources(g, i), j, targets(g, j));
    }

    Barcode barcode() const {
        std::vector<Interval> out;
        const int top = flt_.max_dimension();
        const std::size_t len = length();
        for (int k = 0; k <= top; ++k) {
            const Degree g = degree(k);
            if (g.cells.empty())
                continue;
            std::vector<std::vector<FieldVector>> src(len), dst(len);
            std::vector<std::size_t> dst_rank(len);
            for (std::size_t t = 0; t < len; ++t) {
                src[t] = sources(g, t);
                dst[t] = targets(g, t);
                dst_rank[t] = rank_of_vectors(g.cells.size(), dst[t], f_);
            }
            // r[i][j] for i, j in 0..len (j == len means "past the end").
            std::vector<std::vector<long>> r(len, std::vector<long>(len + 1, 0));
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = i; j < len; ++j)
                    r[i][j] = static_cast<long>(image_rank(g, src[i], j, dst[j], dst_rank[j]));
            auto at = [&](std::ptrdiff_t i, std::size_t j) -> long {
                return i < 0 ? 0 : r[static_cast<std::size_t>(i)][j];
            };
            for (std::size_t i = 0; i < len; ++i)
                for (std::size_t j = i; j < len; ++j) {
                    const auto si = static_cast<std::ptrdiff_t>(i);
                    const long mu = at(si, j) - at(si, j + 1) - at(si - 1, j) + at(si - 1, j + 1);
                    if (mu < 0)
                        throw Error("negative interval multiplicity in rank oracle");
                    for (long m = 0; m < mu; ++m)
                        emit(out, k, i, j + 1);
                }
        }
        return Barcode(std::move(out));
    }

private:
    struct Degree {
        std::vector<CellId> cells;      // ids of k-cells
        std::vector<CellId> cofaces;    // ids of (k+1)-cells
        DenseMatrix down;               // boundary of k-cells over (k-1)-cells (rows = all cells)
        std::vector<FieldVector> up;    // boundary of each (k+1)-cell over k-cells
    };

    Degree degree(int k) const {
        Degree g;
        for (const Cell& c : flt_.cells()) {
            if (c.dim == k)
                g.cells.push_back(c.id);
            else if (c.dim == k + 1)
                g.cofaces.push_back(c.id);
        }
        std::vector<std::ptrdiff_t> local(flt_.size(), -1);
        for (std::size_t i = 0; i < g.cells.size(); ++i)
            local[g.cells[i]] = static_cast<std::ptrdiff_t>(i);
        g.down = DenseMatrix(flt_.size(), g.cells.size());
        for (std::size_t j = 0; j < g.cells.size(); ++j)
            for (const auto& [face, coeff] : flt_[g.cells[j]].boundary)
                g.down(face, j) = f_.add(g.down(face, j), f_.reduce(coeff));
        for (CellId c : g.cofaces) {
            FieldVector v(g.cells.size(), 0);
            for (const auto& [face, coeff] : flt_[c].boundary)
                v[static_cast<std::size_t>(local[face])] = f_.add(v[static_cast<std::size_t>(local[face])], f_.reduce(coeff));
            g.up.push_back(std::move(v));
        }
        return g;
    }

    // Rows/cols of `down` restricted to a predicate on cell ids.
    template <class RowKeep, class ColKeep>
    DenseMatrix restricted(const Degree& g, RowKeep row_keep, ColKeep col_keep) const {
        DenseMatrix m(flt_.size(), g.cells.size());
        for (std::size_t i = 0; i < flt_.size(); ++i)
            if (row_keep(i))
                for (std::size_t j = 0; j < g.cells.size(); ++j)
                    if (col_keep(g.cells[j]))
                        m(i, j) = g.down(i, j);
        return m;
    }

    // Cycles supported on cells accepted by `keep`.
    template <class Keep>
    std::vector<FieldVector> cycles(const Degree& g, Keep keep, const DenseMatrix& boundary) const {
        std::vector<FieldVector> out;
        for (FieldVector& z : kernel_basis(boundary, f_)) {
            bool inside = true;
            for (std::size_t j = 0; j < z.size(); ++j)
                if (z[j] && !keep(g.cells[j]))
                    inside = false;
            if (inside)
                out.push_back(std::move(z));
        }
        return out;
    }

    // Cycles representing the module at index t (before mapping forward).
    std::vector<FieldVector> sources(const Degree& g, std::size_t t) const {
        if (variant_ == OracleVariant::absolute) {
            // Cycles of X^t: kernel of the boundary with columns outside X^t
            // zeroed; the unit vectors of excluded cells are discarded.
            auto in_t = [t](CellId c) { return c <= t; };
            return cycles(g, in_t, restricted(g, [](std::size_t) { return true; }, in_t));
        }
        // Relative cycles of (X^n, X^{t-1}): cells with id >= t survive.
        auto alive = [t](CellId c) { return c >= t; };
        return cycles(g, alive, restricted(g, alive, alive));
    }

    // Boundaries of the module at index t, in k-cell coordinates.
    std::vector<FieldVector> targets(const Degree& g, std::size_t t) const {
        std::vector<FieldVector> b;
        for (std::size_t c = 0; c < g.cofaces.size(); ++c) {
            if (variant_ == OracleVariant::absolute) {
                if (g.cofaces[c] <= t)
                    b.push_back(g.up[c]);
            } else {
                b.push_back(project(g, t, g.up[c]));
            }
        }
        return b;
    }

    // Structure map into index t: inclusion (absolute) or quotient (relative).
    FieldVector project(const Degree& g, std::size_t t, FieldVector v) const {
        if (variant_ == OracleVariant::relative)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (g.cells[j] < t)
                    v[j] = 0;
        return v;
    }

    std::size_t image_rank(const Degree& g, const std::vector<FieldVector>& src, std::size_t t,
                           const std::vector<FieldVector>& dst) const {
        return image_rank(g, src, t, dst, rank_of_vectors(g.cells.size(), dst, f_));
    }

    std::size_t image_rank(const Degree& g, const std::vector<FieldVector>& src, std::size_t t,
                           const std::vector<FieldVector>& dst, std::size_t dst_rank) const {
        if (src.empty())
            return 0;
        std::vector<FieldVector> all = dst;
        for (const FieldVector& v : src)
            all.push_back(project(g, t, v));
        return rank_of_vectors(g.cells.size(), all, f_) - dst_rank;
    }

    void emit(std::vector<Interval>& out, int k, std::size_t born, std::size_t dies) const {
        const std::size_t n = flt_.size();
        if (variant_ == OracleVariant::absolute) {
            if (dies == n) {
                out.push_back(Interval::essential(k, flt_[born].birth, born));
                return;
            }
            push_finite(out, k, born, dies);
            return;
        }
        // Relative: index t stands for cell t - 1.
        if (born == 0) {
            const CellId e = dies - 1;
            out.push_back(Interval::essential_relative(k, flt_[e].birth, e));
            return;
        }
        push_finite(out, k, born - 1, dies - 1);
    }

    void push_finite(std::vector<Interval>& out, int k, CellId b, CellId d) const {
        if (flt_[b].birth < flt_[d].birth)
            out.push_back(Interval::finite(k, flt_[b].birth, flt_[d].birth, b, d));
        else if (options_.keep_ephemeral)
            out.push_back(Interval::ephemeral(k, b, d));
    }

    const Filtration& flt_;
    PrimeField f_;
    OracleVariant variant_;
    OracleOptions options_;
};

inline Barcode rank_invariant_oracle(const Filtration& flt, const PrimeField& f, OracleVariant variant,
                                     OracleOptions options = {}) {
    return RankInvariantOracle(flt, f, variant, options).barcode();
}

} // namespace persista
