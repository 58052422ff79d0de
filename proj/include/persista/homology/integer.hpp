#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "persista/algebra/smith.hpp"
#include "persista/core/chain.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/homology/chain_complex.hpp"
#include "persista/homology/components.hpp"

namespace persista {

/// H_d over Z as Z^betti[d] plus the cyclic groups Z/t for t in torsion[d].
struct IntegerHomology {
    std::vector<std::size_t> betti;
    std::vector<std::vector<std::int64_t>> torsion;

    std::size_t dimensions() const noexcept { return betti.size(); }
    bool operator==(const IntegerHomology&) const = default;
};

/// Free ranks and torsion from the Smith form of every boundary map.
inline IntegerHomology integer_homology(const ChainComplex& cc, int top_dim) {
    const std::size_t n = static_cast<std::size_t>(top_dim + 2);
    std::vector<SmithNormalForm> snf(n + 1);
    for (std::size_t d = 1; d <= n; ++d)
        snf[d] = smith_normal_form(cc.boundary_integer(static_cast<int>(d)));

    IntegerHomology h;
    h.betti.resize(n);
    h.torsion.resize(n);
    for (std::size_t d = 0; d < n; ++d) {
        const std::size_t rank_here = d == 0 ? 0 : snf[d].rank;
        h.betti[d] = cc.cells(static_cast<int>(d)) - rank_here - snf[d + 1].rank;
        for (std::int64_t t : snf[d + 1].diag)
            if (t > 1)
                h.torsion[d].push_back(t);
    }
    return h;
}

inline IntegerHomology integer_homology(const SimplicialComplex& c) {
    return integer_homology(simplicial_chain_complex(c), c.dimension());
}

/// Integer homology of the final space of a filtration.
inline IntegerHomology integer_homology(const Filtration& flt) {
    return integer_homology(cellular_chain_complex(flt), flt.max_dimension());
}

/// Sum of the coefficients of a 0-chain.
inline std::int64_t chain_index(const SimplexChain& c) {
    std::int64_t total = 0;
    for (const auto& [s, coeff] : c) {
        if (s.dimension() != 0)
            throw ValidationError("chain_index expects a 0-chain, found " + s.to_string());
        total = checked::add(total, coeff);
    }
    return total;
}

/// Whether the 0-chain lies in the image of the first boundary map over Z.
/// Solved through U * d1 * V = D: c is a boundary iff (U c)_i is divisible
/// by d_i for i < rank and vanishes beyond.
inline bool is_null_homologous(const SimplexChain& c, const SimplicialComplex& x) {
    const ChainComplex cc = simplicial_chain_complex(x);
    std::vector<std::int64_t> rhs(cc.cells(0), 0);
    for (const auto& [s, coeff] : c) {
        if (s.dimension() != 0)
            throw ValidationError("expected a 0-chain, found " + s.to_string());
        const std::ptrdiff_t row = cc.index_of(s);
        if (row < 0)
            throw ValidationError("vertex " + s.to_string() + " is not in the complex");
        rhs[static_cast<std::size_t>(row)] = coeff;
    }
    const SmithNormalForm snf = smith_normal_form(cc.boundary_integer(1), true);
    const IntMatrix& u = *snf.left;
    for (std::size_t i = 0; i < u.rows(); ++i) {
        std::int64_t y = 0;
        for (std::size_t k = 0; k < u.cols(); ++k)
            y = checked::fma(y, u(i, k), rhs[k]);
        if (i < snf.rank ? (y % snf.diag[i] != 0) : (y != 0))
            return false;
    }
    return true;
}

/// On a connected complex a 0-chain bounds exactly when its index is zero.
/// Returns whether that equivalence holds for `c`; throws DisconnectedError
/// when the complex is disconnected, where the equivalence is not available.
inline bool index_criterion_holds(const SimplexChain& c, const SimplicialComplex& x) {
    const bool bounds = is_null_homologous(c, x);
    if (connected_components(x).count() != 1)
        throw DisconnectedError("index criterion needs a connected complex");
    return (chain_index(c) == 0) == bounds;
}

} // namespace persista
