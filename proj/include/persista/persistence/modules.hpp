#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "persista/algebra/sparse.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/persistence/barcode.hpp"
#include "persista/persistence/reduction.hpp"

namespace persista {

struct BarcodeOptions {
    /// Keep zero-length pairs as ephemeral index intervals.
    bool keep_ephemeral = false;
    ReductionOptions reduction;
};

namespace detail {

inline Barcode barcode_from_pairing(const std::vector<PersistencePair>& pairs, const std::vector<CellId>& essential,
                                    const Filtration& flt, const BarcodeOptions& opt) {
    std::vector<Interval> out;
    for (const PersistencePair& p : pairs) {
        const Cell& b = flt[p.birth];
        const double death = flt[p.death].birth;
        if (b.birth < death)
            out.push_back(Interval::finite(b.dim, b.birth, death, p.birth, p.death));
        else if (opt.keep_ephemeral)
            out.push_back(Interval::ephemeral(b.dim, p.birth, p.death));
    }
    for (CellId e : essential)
        out.push_back(Interval::essential(flt[e].dim, flt[e].birth, e));
    return Barcode(std::move(out));
}

} // namespace detail

/// [a_b, a_d) for every pair, [a_e, inf) for every essential index, in the
/// dimension of the birth cell. Zero-length pairs are dropped unless kept.
inline Barcode barcode_absolute_homology(const ReductionResult& r, const Filtration& flt,
                                         const BarcodeOptions& opt = {}) {
    return detail::barcode_from_pairing(r.pairs, r.essential, flt, opt);
}

inline Barcode barcode_absolute_homology(const Filtration& flt, const PrimeField& f, const BarcodeOptions& opt = {}) {
    return barcode_absolute_homology(reduce(flt, f, opt.reduction), flt, opt);
}

/**
 * Pairing of the coboundary: reduce the anti-transposed boundary matrix and
 * map reversed indices back with i -> n - i. A reversed-side pair with
 * low(column j) = i is the original pair (n - j, n - i).
 */
struct CohomologyPairing {
    ReductionResult reduction; // in reversed indexing
    std::vector<PersistencePair> pairs;
    std::vector<CellId> essential;
};

inline CohomologyPairing cohomology_pairing(const Filtration& flt, const PrimeField& f, ReductionOptions ro = {}) {
    const std::size_t size = flt.size();
    std::vector<int> degree(size);
    // Column j of the anti-transpose is cell n - j; its entries are cofaces,
    // so the grading runs opposite to dimension.
    for (std::size_t j = 0; j < size; ++j)
        degree[j] = -flt[size - 1 - j].dim;
    CohomologyPairing out{reduce(anti_transpose(boundary_matrix(flt, f)), f, degree, ro), {}, {}};
    for (const PersistencePair& p : out.reduction.pairs)
        out.pairs.push_back({size - 1 - p.death, size - 1 - p.birth});
    for (CellId e : out.reduction.essential)
        out.essential.push_back(size - 1 - e);
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PersistencePair& a, const PersistencePair& b) { return a.death < b.death; });
    std::sort(out.essential.begin(), out.essential.end());
    return out;
}

/// Cohomology barcode without the duality assertion.
inline Barcode cohomology_barcode_unchecked(const Filtration& flt, const PrimeField& f, const BarcodeOptions& opt = {}) {
    const CohomologyPairing cp = cohomology_pairing(flt, f, opt.reduction);
    return detail::barcode_from_pairing(cp.pairs, cp.essential, flt, opt);
}

/// Absolute cohomology barcode, derived from the coboundary reduction and
/// checked against the homology barcode (they must coincide).
inline Barcode barcode_absolute_cohomology(const Filtration& flt, const PrimeField& f, const BarcodeOptions& opt = {}) {
    Barcode cohom = cohomology_barcode_unchecked(flt, f, opt);
    const Barcode hom = barcode_absolute_homology(flt, f, opt);
    if (!(cohom == hom))
        throw DualityViolation("absolute cohomology " + describe(cohom) + " differs from absolute homology " +
                               describe(hom));
    return cohom;
}

/// Relative barcode from an absolute one: finite [a, b)_k becomes [a, b)_{k+1};
/// essential [a, inf)_k becomes [-inf, a)_k.
inline Barcode relative_from_absolute(const Barcode& absolute) {
    std::vector<Interval> out;
    for (const Interval& i : absolute) {
        switch (i.kind) {
        case IntervalKind::finite:
            out.push_back(Interval::finite(i.dim + 1, i.birth, i.death, i.birth_index, *i.death_index));
            break;
        case IntervalKind::ephemeral:
            out.push_back(Interval::ephemeral(i.dim + 1, i.birth_index, *i.death_index));
            break;
        case IntervalKind::essential:
            out.push_back(Interval::essential_relative(i.dim, i.birth, i.birth_index));
            break;
        }
    }
    return Barcode(std::move(out));
}

enum class Flavor { homology, cohomology };

/// Relative homology or cohomology barcode. The cohomology flavour is derived
/// from the coboundary reduction and must agree with the homology flavour.
inline Barcode barcode_relative(const Filtration& flt, const PrimeField& f, Flavor flavor,
                                const BarcodeOptions& opt = {}) {
    const Barcode rel_hom = relative_from_absolute(barcode_absolute_homology(flt, f, opt));
    if (flavor == Flavor::homology)
        return rel_hom;
    Barcode rel_coh = relative_from_absolute(cohomology_barcode_unchecked(flt, f, opt));
    if (!(rel_coh == rel_hom))
        throw DualityViolation("relative cohomology " + describe(rel_coh) + " differs from relative homology " +
                               describe(rel_hom));
    return rel_coh;
}

/// Finite intervals of absolute H_k against finite relative H_{k+1}, and the
/// bijection [a, inf)_k <-> [-inf, a)_k. Empty string when both hold.
inline std::string check_absolute_relative(const Barcode& absolute, const Barcode& relative) {
    std::vector<Interval> shifted;
    for (const Interval& i : absolute.finite_part()) {
        Interval j = i;
        ++j.dim;
        shifted.push_back(j);
    }
    if (!(Barcode(shifted) == relative.finite_part()))
        return "finite intervals of absolute H_k do not match relative H_{k+1}";
    std::vector<Interval> flipped;
    for (const Interval& i : absolute.essential_part())
        flipped.push_back(Interval::essential_relative(i.dim, i.birth, i.birth_index));
    if (!(Barcode(flipped) == relative.essential_part()))
        return "essential intervals do not correspond";
    return {};
}

struct StandardBarcodes {
    Barcode absolute_homology;
    Barcode absolute_cohomology;
    Barcode relative_homology;
    Barcode relative_cohomology;
};

/// All four standard barcodes, each from its own route, with every duality
/// asserted before anything is returned.
inline StandardBarcodes standard_barcodes(const Filtration& flt, const PrimeField& f, const BarcodeOptions& opt = {}) {
    StandardBarcodes s;
    s.absolute_homology = barcode_absolute_homology(flt, f, opt);
    s.absolute_cohomology = cohomology_barcode_unchecked(flt, f, opt);
    s.relative_homology = relative_from_absolute(s.absolute_homology);
    s.relative_cohomology = relative_from_absolute(s.absolute_cohomology);
    if (!(s.absolute_homology == s.absolute_cohomology))
        throw DualityViolation("absolute homology and cohomology barcodes differ");
    if (!(s.relative_homology == s.relative_cohomology))
        throw DualityViolation("relative homology and cohomology barcodes differ");
    if (auto msg = check_absolute_relative(s.absolute_homology, s.relative_homology); !msg.empty())
        throw DualityViolation(msg);
    if (auto msg = check_absolute_relative(s.absolute_cohomology, s.relative_cohomology); !msg.empty())
        throw DualityViolation(msg);
    return s;
}

/// A point of the doubled index set: a plain value, or a barred value on the
/// relative half of the concatenated sequence.
struct ConcatPoint {
    double value = 0.0;
    bool barred = false;
    bool operator==(const ConcatPoint&) const = default;
};

struct ConcatInterval {
    int family = 1; // 1: finite H_k, 2: finite H_{k-1} barred, 3: essential H_k self-closing
    ConcatPoint start;
    ConcatPoint end;
    bool operator==(const ConcatInterval&) const = default;
};

/// Barcode of H_k(X) -> H_k(X^inf, X) over the concatenated index set.
inline std::vector<ConcatInterval> concatenated_barcode(const Filtration& flt, const PrimeField& f, int k,
                                                        const BarcodeOptions& opt = {}) {
    const Barcode abs = barcode_absolute_homology(flt, f, opt);
    std::vector<ConcatInterval> out;
    for (const Interval& i : abs.in_dimension(k).finite_part())
        out.push_back({1, {i.birth, false}, {i.death, false}});
    for (const Interval& i : abs.in_dimension(k - 1).finite_part())
        out.push_back({2, {i.birth, true}, {i.death, true}});
    for (const Interval& i : abs.in_dimension(k).essential_part())
        out.push_back({3, {i.birth, false}, {i.birth, true}});
    return out;
}

} // namespace persista
