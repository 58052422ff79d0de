#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "persista/algebra/dense.hpp"
#include "persista/core/errors.hpp"
#include "persista/homology/chain_complex.hpp"

namespace persista {

/**
 * Explicit homology of a chain complex in one degree: representatives of
 * ker d_d modulo im d_{d+1}. Representatives are the kernel basis vectors
 * (echelon order) that are independent modulo boundaries, kept in order.
 */
class HomologyBasis {
public:
    HomologyBasis(const ChainComplex& cc, int d, const PrimeField& f) : field_(f), length_(cc.cells(d)) {
        std::vector<FieldVector> cycles;
        if (d == 0) {
            for (std::size_t i = 0; i < length_; ++i) {
                FieldVector e(length_, 0);
                e[i] = 1;
                cycles.push_back(std::move(e));
            }
        } else {
            cycles = kernel_basis(cc.boundary_dense(d, f), f);
        }
        const DenseMatrix next = cc.boundary_dense(d + 1, f);
        std::vector<FieldVector> bounds;
        for (std::size_t j = 0; j < next.cols(); ++j)
            bounds.push_back(next.column(j));
        boundaries_ = independent_subset(length_, bounds, f);

        std::vector<FieldVector> span = boundaries_;
        std::size_t current = boundaries_.size();
        for (const FieldVector& z : cycles) {
            span.push_back(z);
            const std::size_t r = rank_of_vectors(length_, span, f);
            if (r > current) {
                representatives_.push_back(z);
                current = r;
            } else {
                span.pop_back();
            }
        }
        std::vector<FieldVector> cols = representatives_;
        cols.insert(cols.end(), boundaries_.begin(), boundaries_.end());
        solver_ = DenseMatrix::from_columns(length_, cols);
    }

    std::size_t dimension() const noexcept { return representatives_.size(); }
    std::size_t chain_length() const noexcept { return length_; }
    const std::vector<FieldVector>& representatives() const noexcept { return representatives_; }
    const std::vector<FieldVector>& boundary_basis() const noexcept { return boundaries_; }

    /// Coordinates of the class of a cycle. Throws ValidationError if the
    /// chain is not a cycle of this complex.
    FieldVector coordinates(const FieldVector& cycle) const {
        if (cycle.size() != length_)
            throw ShapeError("chain length does not match the chain group");
        if (length_ == 0)
            return {};
        const auto x = solve(solver_, cycle, field_);
        if (!x)
            throw ValidationError("chain is not a cycle");
        return FieldVector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(representatives_.size()));
    }

private:
    PrimeField field_;
    std::size_t length_;
    std::vector<FieldVector> boundaries_;
    std::vector<FieldVector> representatives_;
    DenseMatrix solver_;
};

/// Coordinates over the cells of `from` rewritten over the cells of `to`,
/// matching by simplex label and dropping cells absent from `to`.
inline FieldVector embed_chain(const ChainComplex& from, const ChainComplex& to, int d, const FieldVector& v) {
    FieldVector out(to.cells(d), 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i])
            continue;
        const std::ptrdiff_t j = to.index_of(from.labels[static_cast<std::size_t>(d)][i]);
        if (j >= 0)
            out[static_cast<std::size_t>(j)] = v[i];
    }
    return out;
}

struct LesMap {
    std::string name; // "inclusion", "projection" or "connecting"
    int dim = 0;      // degree of the source group
    DenseMatrix matrix;
    std::size_t rank = 0;
};

struct LesNode {
    std::string group; // "H(A)", "H(X)" or "H(X,A)"
    int dim = 0;
    std::size_t dimension = 0;
    std::size_t incoming_rank = 0;
    std::size_t outgoing_rank = 0;
    bool composite_zero = true;
    bool exact = true;
};

struct LesReport {
    std::vector<LesMap> maps;
    std::vector<LesNode> nodes;
    bool exact() const noexcept {
        for (const LesNode& n : nodes)
            if (!n.exact)
                return false;
        return true;
    }
};

/**
 * The long exact sequence of the pair (X, A) with explicit matrices on
 * chosen homology bases. The connecting map follows the usual recipe:
 * lift a relative cycle to a chain of X, take its boundary, read it as a
 * cycle of A.
 */
class PairSequence {
public:
    PairSequence(const SimplicialComplex& x, const SimplicialComplex& a, const PrimeField& f)
        : field_(f), top_(x.dimension()) {
        if (!a.is_subcomplex_of(x))
            throw NotSubcomplexError("A is not a subcomplex of X");
        x_ = simplicial_chain_complex(x);
        a_ = simplicial_chain_complex(a);
        rel_ = simplicial_chain_complex(x, &a);
        for (int d = 0; d <= top_ + 1; ++d) {
            hx_.emplace_back(x_, d, f);
            ha_.emplace_back(a_, d, f);
            hrel_.emplace_back(rel_, d, f);
        }
    }

    int top_dimension() const noexcept { return top_; }
    const HomologyBasis& homology_x(int d) const { return hx_.at(static_cast<std::size_t>(d)); }
    const HomologyBasis& homology_a(int d) const { return ha_.at(static_cast<std::size_t>(d)); }
    const HomologyBasis& homology_rel(int d) const { return hrel_.at(static_cast<std::size_t>(d)); }

    /// H_d(A) -> H_d(X)
    DenseMatrix inclusion(int d) const {
        const HomologyBasis& src = homology_a(d);
        const HomologyBasis& dst = homology_x(d);
        std::vector<FieldVector> cols;
        for (const FieldVector& rep : src.representatives())
            cols.push_back(dst.coordinates(embed(a_, x_, d, rep)));
        return DenseMatrix::from_columns(dst.dimension(), cols);
    }

    /// H_d(X) -> H_d(X, A)
    DenseMatrix projection(int d) const {
        const HomologyBasis& src = homology_x(d);
        const HomologyBasis& dst = homology_rel(d);
        std::vector<FieldVector> cols;
        for (const FieldVector& rep : src.representatives())
            cols.push_back(dst.coordinates(restrict(x_, rel_, d, rep)));
        return DenseMatrix::from_columns(dst.dimension(), cols);
    }

    /// H_d(X, A) -> H_{d-1}(A). `lift_shift[k]`, when given, is a d-chain of
    /// A added to the lift of the k-th representative; the class of the
    /// result must not depend on it.
    DenseMatrix connecting(int d, const std::vector<FieldVector>& lift_shift = {}) const {
        const HomologyBasis& src = homology_rel(d);
        if (d == 0)
            return DenseMatrix(0, src.dimension());
        const HomologyBasis& dst = homology_a(d - 1);
        const DenseMatrix bx = x_.boundary_dense(d, field_);
        std::vector<FieldVector> cols;
        for (std::size_t k = 0; k < src.dimension(); ++k) {
            FieldVector lift = embed(rel_, x_, d, src.representatives()[k]);
            if (k < lift_shift.size()) {
                const FieldVector shift = embed(a_, x_, d, lift_shift[k]);
                for (std::size_t i = 0; i < lift.size(); ++i)
                    lift[i] = field_.add(lift[i], shift[i]);
            }
            const FieldVector boundary = bx.apply(lift, field_);
            // The boundary lives on A: every coordinate outside A vanishes.
            if (restrict(x_, rel_, d - 1, boundary) != FieldVector(rel_.cells(d - 1), 0))
                throw ValidationError("lifted boundary leaves the subcomplex");
            cols.push_back(dst.coordinates(restrict(x_, a_, d - 1, boundary)));
        }
        return DenseMatrix::from_columns(dst.dimension(), cols);
    }

private:
    static FieldVector embed(const ChainComplex& from, const ChainComplex& to, int d, const FieldVector& v) {
        return embed_chain(from, to, d, v);
    }
    static FieldVector restrict(const ChainComplex& from, const ChainComplex& to, int d, const FieldVector& v) {
        return embed_chain(from, to, d, v);
    }

    PrimeField field_;
    int top_;
    ChainComplex x_, a_, rel_;
    std::vector<HomologyBasis> hx_, ha_, hrel_;
};

/// Builds every map of the sequence for d = dim X + 1 down to 0 and checks
/// exactness at each group: the composite of consecutive maps vanishes and
/// rank(incoming) equals the nullity of the outgoing map.
inline LesReport les_exactness_check(const SimplicialComplex& x, const SimplicialComplex& a, const PrimeField& f) {
    const PairSequence seq(x, a, f);
    const int top = seq.top_dimension() + 1;
    LesReport report;

    auto make_map = [&](std::string name, int d, DenseMatrix m) {
        const std::size_t r = rank(m, f);
        report.maps.push_back({std::move(name), d, std::move(m), r});
        return report.maps.back();
    };
    auto node = [&](std::string group, int d, std::size_t dim, const DenseMatrix& in, const DenseMatrix& out) {
        LesNode n{std::move(group), d, dim, rank(in, f), rank(out, f), true, true};
        if (in.rows() != dim || out.cols() != dim)
            throw ShapeError("sequence maps do not compose");
        n.composite_zero = multiply(out, in, f).is_zero();
        n.exact = n.composite_zero && n.incoming_rank + n.outgoing_rank == dim;
        report.nodes.push_back(std::move(n));
    };

    // Incoming map into H_top(A): the connecting map from H_{top+1}(X,A) = 0.
    DenseMatrix incoming(seq.homology_a(top).dimension(), 0);
    for (int d = top; d >= 0; --d) {
        const LesMap inc = make_map("inclusion", d, seq.inclusion(d));
        const LesMap proj = make_map("projection", d, seq.projection(d));
        const LesMap conn = make_map("connecting", d, seq.connecting(d));
        node("H(A)", d, seq.homology_a(d).dimension(), incoming, inc.matrix);
        node("H(X)", d, seq.homology_x(d).dimension(), inc.matrix, proj.matrix);
        node("H(X,A)", d, seq.homology_rel(d).dimension(), proj.matrix, conn.matrix);
        incoming = conn.matrix;
    }
    return report;
}

} // namespace persista
