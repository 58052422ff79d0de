#pragma once

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "persista/homology/betti.hpp"
#include "persista/homology/excision.hpp"
#include "persista/homology/les.hpp"
#include "persista/homology/subdivision.hpp"
#include "persista/persistence/modules.hpp"
#include "persista/persistence/oracle.hpp"
#include "persista/persistence/reduction.hpp"
#include "persista/verify/generators.hpp"

namespace persista::verify {

struct PropertyResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string first_failure;
    bool ok() const noexcept { return failed == 0; }
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool ok() const noexcept {
        for (const PropertyResult& p : properties)
            if (!p.ok())
                return false;
        return true;
    }

    void record(const std::string& property, bool pass, const std::string& context) {
        PropertyResult* slot = nullptr;
        for (PropertyResult& p : properties)
            if (p.name == property)
                slot = &p;
        if (!slot) {
            properties.push_back({property, 0, 0, {}});
            slot = &properties.back();
        }
        if (pass) {
            ++slot->passed;
        } else {
            if (slot->failed++ == 0)
                slot->first_failure = context;
        }
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"duality", "oracle", "les", "excision", "subdivision", "uct"};
    return names;
}

namespace detail {

inline const std::vector<std::uint32_t>& suite_fields() {
    static const std::vector<std::uint32_t> p = {2, 5};
    return p;
}

inline std::string where(std::size_t i, std::uint32_t p) {
    return "case " + std::to_string(i) + " over F_" + std::to_string(p);
}

// Runs `body` for every case and field; an exception fails "no errors".
inline SuiteResult run_cases(const std::string& suite, std::uint64_t seed, std::size_t count,
                             const std::function<void(SuiteResult&, Rng&, const PrimeField&, const std::string&)>& body) {
    SuiteResult out{suite, {}};
    for (std::size_t i = 0; i < count; ++i) {
        for (std::uint32_t p : suite_fields()) {
            Rng rng(case_seed(seed, i)); // same instance for every field
            const PrimeField f(p);
            const std::string ctx = where(i, p);
            try {
                body(out, rng, f, ctx);
                out.record("no errors", true, ctx);
            } catch (const std::exception& e) {
                out.record("no errors", false, ctx + ": " + e.what());
            }
        }
    }
    return out;
}

} // namespace detail

/// Homology vs cohomology, absolute vs relative, and clearing vs plain
/// reduction, on filtrations of at most 40 cells and dimension at most 3.
inline SuiteResult duality_suite(std::uint64_t seed, std::size_t count) {
    return detail::run_cases("duality", seed, count, [](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const Filtration flt = random_filtration(rng, {8, 3, 40});
        const Barcode ah = barcode_absolute_homology(flt, f);
        const Barcode ac = cohomology_barcode_unchecked(flt, f);
        const Barcode rh = relative_from_absolute(ah);
        const Barcode rc = relative_from_absolute(ac);
        r.record("absolute homology = absolute cohomology", ah == ac, ctx);
        r.record("relative homology = relative cohomology", rh == rc, ctx);
        const std::string m1 = check_absolute_relative(ah, rh);
        r.record("absolute/relative correspondence (homology)", m1.empty(), ctx + ": " + m1);
        const std::string m2 = check_absolute_relative(ac, rc);
        r.record("absolute/relative correspondence (cohomology)", m2.empty(), ctx + ": " + m2);
        const ReductionResult plain = reduce(flt, f);
        const ReductionResult cleared = reduce(flt, f, ReductionOptions{true});
        r.record("clearing preserves the pairing",
                 plain.pairs == cleared.pairs && plain.essential == cleared.essential, ctx);
        const CohomologyPairing cp = cohomology_pairing(flt, f);
        r.record("cohomology pairing = homology pairing",
                 cp.pairs == plain.pairs && cp.essential == plain.essential, ctx);
    });
}

/// Reduction against the rank-invariant oracle on filtrations of at most 20 cells.
inline SuiteResult oracle_suite(std::uint64_t seed, std::size_t count, std::size_t cap = 64) {
    return detail::run_cases("oracle", seed, count, [cap](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const Filtration flt = random_filtration(rng, {8, 3, 20});
        const OracleOptions opt{cap, false};
        const Barcode abs = barcode_absolute_homology(flt, f);
        const Barcode abs_oracle = rank_invariant_oracle(flt, f, OracleVariant::absolute, opt);
        r.record("absolute barcode = oracle", abs.same_provenance(abs_oracle), ctx + ": " + describe(abs) + " vs " + describe(abs_oracle));
        const Barcode rel = barcode_relative(flt, f, Flavor::homology);
        const Barcode rel_oracle = rank_invariant_oracle(flt, f, OracleVariant::relative, opt);
        r.record("relative barcode = oracle", rel == rel_oracle, ctx + ": " + describe(rel) + " vs " + describe(rel_oracle));
    });
}

inline SuiteResult les_suite(std::uint64_t seed, std::size_t count) {
    return detail::run_cases("les", seed, count, [](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const SimplicialComplex x = random_complex(rng, {7, 3, 30});
        const SimplicialComplex a = random_subcomplex(rng, x);
        const LesReport rep = les_exactness_check(x, a, f);
        std::string bad;
        for (const LesNode& n : rep.nodes)
            if (!n.exact)
                bad = n.group + " in degree " + std::to_string(n.dim);
        r.record("long exact sequence is exact", rep.exact(), ctx + ": not exact at " + bad);
        bool zero = true;
        for (const LesNode& n : rep.nodes)
            zero = zero && n.composite_zero;
        r.record("consecutive maps compose to zero", zero, ctx);
    });
}

inline SuiteResult excision_suite(std::uint64_t seed, std::size_t count) {
    return detail::run_cases("excision", seed, count, [](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const SimplicialComplex x = random_complex(rng, {7, 3, 30});
        const Cover cov = random_cover(rng, x);
        const ExcisionReport rep = excision_check(x, cov.a, cov.b, f);
        r.record("excision isomorphism in every degree", rep.ok(), ctx);
    });
}

inline SuiteResult subdivision_suite(std::uint64_t seed, std::size_t count) {
    return detail::run_cases("subdivision", seed, count, [](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const SimplicialComplex x = random_complex(rng, {5, 3, 31});
        const SimplicialComplex sd = barycentric_subdivide(x);
        r.record("Betti numbers invariant under subdivision", betti_numbers(x, f) == betti_numbers(sd, f), ctx);
        r.record("subdivision is a valid complex", validate_complex(sd).ok(), ctx);
    });
}

inline SuiteResult uct_suite(std::uint64_t seed, std::size_t count) {
    return detail::run_cases("uct", seed, count, [](SuiteResult& r, Rng& rng, const PrimeField& f, const std::string& ctx) {
        const SimplicialComplex x = random_complex(rng, {8, 3, 40});
        r.record("dim H^d = dim H_d", uct_field_check(x, f).ok(), ctx);
    });
}

/// Runs one suite by name, or all of them for "all". Unknown names throw
/// std::invalid_argument.
inline std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed, std::size_t count,
                                          std::size_t oracle_cap = 64) {
    if (name == "all") {
        std::vector<SuiteResult> out;
        for (const std::string& n : suite_names())
            out.push_back(run_suite(n, seed, count, oracle_cap).front());
        return out;
    }
    if (name == "duality")
        return {duality_suite(seed, count)};
    if (name == "oracle")
        return {oracle_suite(seed, count, oracle_cap)};
    if (name == "les")
        return {les_suite(seed, count)};
    if (name == "excision")
        return {excision_suite(seed, count)};
    if (name == "subdivision")
        return {subdivision_suite(seed, count)};
    if (name == "uct")
        return {uct_suite(seed, count)};
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace persista::verify
