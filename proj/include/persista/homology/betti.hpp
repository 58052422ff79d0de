#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "persista/algebra/prime_field.hpp"
#include "persista/algebra/sparse.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/simplex.hpp"
#include "persista/homology/chain_complex.hpp"

namespace persista {

/// Ranks of H_d over a prime field for d = 0..size()-1; zero beyond.
struct BettiVector {
    std::vector<std::size_t> betti;

    std::size_t operator[](std::size_t d) const noexcept { return d < betti.size() ? betti[d] : 0; }
    std::size_t size() const noexcept { return betti.size(); }

    std::int64_t euler_characteristic() const noexcept {
        std::int64_t chi = 0;
        for (std::size_t d = 0; d < betti.size(); ++d)
            chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[d]);
        return chi;
    }

    /// Trailing zeros are insignificant.
    bool operator==(const BettiVector& other) const {
        const std::size_t n = std::max(size(), other.size());
        for (std::size_t d = 0; d < n; ++d)
            if ((*this)[d] != other[d])
                return false;
        return true;
    }
};

inline std::size_t boundary_rank(const ChainComplex& cc, int d, const PrimeField& f) {
    if (cc.cells(d) == 0 || cc.cells(d - 1) == 0)
        return 0;
    return sparse_rank(cc.boundary_matrix(d, f), f);
}

/// beta_d = dim ker d_d - rank d_{d+1} for d = 0..top_dim + 1.
inline BettiVector betti_numbers(const ChainComplex& cc, const PrimeField& f, int top_dim) {
    BettiVector out;
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top_dim + 3), 0);
    for (int d = 1; d <= top_dim + 1; ++d)
        ranks[static_cast<std::size_t>(d)] = boundary_rank(cc, d, f);
    for (int d = 0; d <= top_dim + 1; ++d) {
        const auto du = static_cast<std::size_t>(d);
        out.betti.push_back(cc.cells(d) - ranks[du] - ranks[du + 1]);
    }
    return out;
}

inline BettiVector betti_numbers(const SimplicialComplex& c, const PrimeField& f) {
    return betti_numbers(simplicial_chain_complex(c), f, c.dimension());
}

/// Ranks of H_d(X, A), the homology of C(X)/C(A).
inline BettiVector relative_betti(const SimplicialComplex& x, const SimplicialComplex& a, const PrimeField& f) {
    if (!a.is_subcomplex_of(x))
        throw NotSubcomplexError("A is not a subcomplex of X");
    return betti_numbers(simplicial_chain_complex(x, &a), f, x.dimension());
}

struct UctRow {
    int dim = 0;
    std::size_t homology = 0;
    std::size_t cohomology = 0;
    bool ok() const noexcept { return homology == cohomology; }
};

struct UctReport {
    std::vector<UctRow> rows;
    bool ok() const noexcept {
        for (const UctRow& r : rows)
            if (!r.ok())
                return false;
        return true;
    }
};

/// Compares dim H_d with dim H^d, the latter computed from the transposed
/// (coboundary) matrices: dim H^d = c_d - rank delta^d - rank delta^{d-1}.
inline UctReport uct_field_check(const SimplicialComplex& c, const PrimeField& f) {
    const ChainComplex cc = simplicial_chain_complex(c);
    const int top = c.dimension();
    const BettiVector homology = betti_numbers(cc, f, top);

    auto coboundary_rank = [&](int d) -> std::size_t {
        // delta^d : C^d -> C^{d+1} is the transpose of boundary_{d+1}.
        if (cc.cells(d) == 0 || cc.cells(d + 1) == 0)
            return 0;
        return sparse_rank(transpose(cc.boundary_matrix(d + 1, f)), f);
    };

    UctReport report;
    for (int d = 0; d <= top + 1; ++d) {
        const std::size_t cohom = cc.cells(d) - coboundary_rank(d) - (d > 0 ? coboundary_rank(d - 1) : 0);
        report.rows.push_back({d, homology[static_cast<std::size_t>(d)], cohom});
    }
    return report;
}

} // namespace persista
