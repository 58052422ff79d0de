#pragma once

#include <cstddef>
#include <vector>

#include "persista/core/errors.hpp"
#include "persista/homology/betti.hpp"
#include "persista/homology/les.hpp"

namespace persista {

struct ExcisionRow {
    int dim = 0;
    std::size_t excised = 0; // rank H_d(B, A n B)
    std::size_t full = 0;    // rank H_d(X, A)
    std::size_t map_rank = 0; // rank of the induced map
    bool ok() const noexcept { return excised == full && map_rank == full; }
};

struct ExcisionReport {
    std::vector<ExcisionRow> rows;
    bool ok() const noexcept {
        for (const ExcisionRow& r : rows)
            if (!r.ok())
                return false;
        return true;
    }
};

/// Simplicial excision: for subcomplexes with A u B = X, the inclusion
/// (B, A n B) -> (X, A) is an isomorphism on homology. Compares ranks and
/// checks the induced map has full rank.
inline ExcisionReport excision_check(const SimplicialComplex& x, const SimplicialComplex& a, const SimplicialComplex& b,
                                     const PrimeField& f) {
    if (!a.is_subcomplex_of(x) || !b.is_subcomplex_of(x))
        throw NotSubcomplexError("A and B must be subcomplexes of X");
    if (a.united_with(b) != x)
        throw CoverError("A and B do not cover X");
    const SimplicialComplex ab = a.intersected_with(b);
    const ChainComplex small = simplicial_chain_complex(b, &ab);
    const ChainComplex big = simplicial_chain_complex(x, &a);
    ExcisionReport report;
    for (int d = 0; d <= x.dimension() + 1; ++d) {
        const HomologyBasis src(small, d, f), dst(big, d, f);
        std::vector<FieldVector> cols;
        for (const FieldVector& rep : src.representatives())
            cols.push_back(dst.coordinates(embed_chain(small, big, d, rep)));
        const std::size_t r = rank(DenseMatrix::from_columns(dst.dimension(), cols), f);
        report.rows.push_back({d, src.dimension(), dst.dimension(), r});
    }
    return report;
}

} // namespace persista
