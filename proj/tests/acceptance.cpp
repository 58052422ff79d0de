// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failed criteria (0 when everything passes).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "persista/persista.hpp"
#include "persista/verify/fixtures.hpp"
#include "persista/verify/generators.hpp"

using namespace persista;
namespace fs = std::filesystem;

namespace {

// Pinned limits.
constexpr double kGoldenMillis = 10.0;
constexpr double kDualitySeconds = 5.0;
constexpr double kOracleSeconds = 30.0;
constexpr double kExactnessSeconds = 20.0;
constexpr double kGeometryTolerance = 1e-12;
constexpr std::uint64_t kSeed = 20240521;

const PrimeField F2(2), F5(5);

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<Filtration> corpus(std::uint64_t seed, std::size_t count, std::size_t max_cells) {
    std::vector<Filtration> out;
    for (std::size_t i = 0; i < count; ++i) {
        verify::Rng rng(verify::case_seed(seed, i));
        out.push_back(verify::random_filtration(rng, {8, 3, max_cells}));
    }
    return out;
}

Outcome golden_s2() {
    Outcome o;
    const Filtration s2 = fixtures::s2();
    const Barcode abs_expected({Interval::essential(0, 0, 0), Interval::finite(0, 1, 2, 1, 2),
                                Interval::finite(1, 3, 4, 3, 4), Interval::essential(2, 5, 5)});
    const Barcode rel_expected({Interval::essential_relative(0, 0, 0), Interval::finite(1, 1, 2, 1, 2),
                                Interval::finite(2, 3, 4, 3, 4), Interval::essential_relative(2, 5, 5)});
    const auto t0 = std::chrono::steady_clock::now();
    const Barcode abs = barcode_absolute_homology(s2, F2);
    const Barcode rel = barcode_relative(s2, F2, Flavor::homology);
    const double ms = seconds_since(t0) * 1000;
    o.require(abs.same_provenance(abs_expected), "absolute barcode " + describe(abs));
    o.require(rel == rel_expected, "relative barcode " + describe(rel));
    o.require(ms < kGoldenMillis, "took " + std::to_string(ms) + " ms");
    if (o.pass)
        o.detail = std::to_string(ms) + " ms";
    return o;
}

Outcome duality_one(const std::vector<Filtration>& flts, double& elapsed) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < flts.size(); ++i)
        for (const PrimeField& f : {F2, F5}) {
            const std::string ctx = "case " + std::to_string(i) + " over F_" + std::to_string(f.characteristic());
            const Barcode ah = barcode_absolute_homology(flts[i], f);
            const Barcode ac = cohomology_barcode_unchecked(flts[i], f);
            o.require(ah == ac, ctx + ": absolute homology != cohomology");
            const Barcode rh = relative_from_absolute(ah);
            const Barcode rc = relative_from_absolute(ac);
            o.require(rh == rc, ctx + ": relative homology != cohomology");
        }
    elapsed = seconds_since(t0);
    o.require(elapsed < kDualitySeconds, "took " + std::to_string(elapsed) + " s");
    if (o.pass)
        o.detail = std::to_string(flts.size()) + " filtrations x 2 fields, " + std::to_string(elapsed) + " s";
    return o;
}

Outcome duality_two(const std::vector<Filtration>& flts) {
    Outcome o;
    for (std::size_t i = 0; i < flts.size(); ++i)
        for (const PrimeField& f : {F2, F5}) {
            const Barcode ah = barcode_absolute_homology(flts[i], f);
            const Barcode rh = barcode_relative(flts[i], f, Flavor::homology);
            const Barcode rc = barcode_relative(flts[i], f, Flavor::cohomology);
            const std::string ctx = "case " + std::to_string(i) + " over F_" + std::to_string(f.characteristic());
            const std::string m1 = check_absolute_relative(ah, rh);
            o.require(m1.empty(), ctx + ": " + m1);
            const std::string m2 = check_absolute_relative(ah, rc);
            o.require(m2.empty(), ctx + ": " + m2);
        }
    if (o.pass)
        o.detail = std::to_string(flts.size()) + " filtrations x 2 fields";
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    const auto flts = corpus(kSeed + 1, 500, 20);
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < flts.size(); ++i)
        for (const PrimeField& f : {F2, F5}) {
            const std::string ctx = "case " + std::to_string(i) + " over F_" + std::to_string(f.characteristic());
            const Barcode abs = barcode_absolute_homology(flts[i], f);
            o.require(abs.same_provenance(rank_invariant_oracle(flts[i], f, OracleVariant::absolute)),
                      ctx + ": absolute barcode differs from the oracle");
            const Barcode rel = barcode_relative(flts[i], f, Flavor::homology);
            o.require(rel == rank_invariant_oracle(flts[i], f, OracleVariant::relative),
                      ctx + ": relative barcode differs from the oracle");
        }
    const double s = seconds_since(t0);
    o.require(s < kOracleSeconds, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "500 filtrations x 2 fields, " + std::to_string(s) + " s";
    return o;
}

Outcome classical_fixtures() {
    Outcome o;
    for (int d = 1; d <= 3; ++d) {
        const IntegerHomology h = integer_homology(fixtures::sphere(d));
        for (int k = 0; k <= d + 1; ++k) {
            const auto ku = static_cast<std::size_t>(k);
            const std::size_t want = (k == 0 || k == d) ? 1 : 0;
            o.require(ku < h.betti.size() && h.betti[ku] == want && h.torsion[ku].empty(),
                      "S^" + std::to_string(d) + " in degree " + std::to_string(k));
        }
    }
    for (int d = 0; d <= 3; ++d) {
        const IntegerHomology h = integer_homology(fixtures::full_simplex(d));
        for (std::size_t k = 0; k < h.betti.size(); ++k)
            o.require(h.betti[k] == (k == 0 ? 1u : 0u) && h.torsion[k].empty(),
                      "full " + std::to_string(d) + "-simplex in degree " + std::to_string(k));
    }
    for (int p = 1; p <= 5; ++p) {
        const SimplicialComplex pts = fixtures::disjoint_points(p);
        o.require(integer_homology(pts).betti[0] == static_cast<std::size_t>(p), std::to_string(p) + " points over Z");
        o.require(betti_numbers(pts, F2)[0] == static_cast<std::size_t>(p), std::to_string(p) + " points over F_2");
    }
    const IntegerHomology rp2 = integer_homology(fixtures::rp2());
    o.require(rp2.betti[0] == 1 && rp2.betti[1] == 0 && rp2.betti[2] == 0, "RP2 free ranks");
    o.require(rp2.torsion[0].empty() && rp2.torsion[1] == std::vector<std::int64_t>{2} && rp2.torsion[2].empty(),
              "RP2 torsion");
    return o;
}

Outcome exactness_and_excision() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < 50; ++i) {
        verify::Rng rng(verify::case_seed(kSeed + 2, i));
        const SimplicialComplex x = verify::random_complex(rng, {7, 3, 30});
        const SimplicialComplex a = verify::random_subcomplex(rng, x);
        for (const PrimeField& f : {F2, F5})
            o.require(les_exactness_check(x, a, f).exact(), "pair " + std::to_string(i) + " not exact");
    }
    for (std::size_t i = 0; i < 50; ++i) {
        verify::Rng rng(verify::case_seed(kSeed + 3, i));
        const SimplicialComplex x = verify::random_complex(rng, {7, 3, 30});
        const verify::Cover c = verify::random_cover(rng, x);
        for (const PrimeField& f : {F2, F5})
            o.require(excision_check(x, c.a, c.b, f).ok(), "cover " + std::to_string(i) + " fails excision");
    }
    const double s = seconds_since(t0);
    o.require(s < kExactnessSeconds, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "50 pairs, 50 covers, " + std::to_string(s) + " s";
    return o;
}

Outcome subdivision() {
    Outcome o;
    for (std::size_t i = 0; i < 50; ++i) {
        verify::Rng rng(verify::case_seed(kSeed + 4, i));
        const SimplicialComplex x = verify::random_complex(rng, {5, 3, 31});
        const SimplicialComplex sd = barycentric_subdivide(x);
        for (const PrimeField& f : {F2, F5})
            o.require(betti_numbers(x, f) == betti_numbers(sd, f), "complex " + std::to_string(i));
    }
    const GeometricSubdivision g = barycentric_subdivide(fixtures::equilateral_triangle());
    const double expected = std::sqrt(3.0) / 3;
    o.require(std::abs(g.diameter_after - expected) <= kGeometryTolerance,
              "diameter " + text::format_real(g.diameter_after));
    o.require(g.diameter_after <= 2.0 / 3, "diameter above 2/3");
    if (o.pass)
        o.detail = "triangle diameter " + text::format_real(g.diameter_after);
    return o;
}

Outcome uct() {
    Outcome o;
    std::vector<std::pair<std::string, SimplicialComplex>> fx;
    for (int d = 1; d <= 3; ++d)
        fx.emplace_back("S^" + std::to_string(d), fixtures::sphere(d));
    fx.emplace_back("simplex", fixtures::full_simplex(3));
    fx.emplace_back("points", fixtures::disjoint_points(5));
    fx.emplace_back("RP2", fixtures::rp2());
    fx.emplace_back("empty", SimplicialComplex{});
    for (std::size_t i = 0; i < 100; ++i) {
        verify::Rng rng(verify::case_seed(kSeed + 5, i));
        fx.emplace_back("random " + std::to_string(i), verify::random_complex(rng, {8, 3, 40}));
    }
    for (const auto& [name, c] : fx)
        for (const PrimeField& f : {F2, F5})
            o.require(uct_field_check(c, f).ok(), name + " over F_" + std::to_string(f.characteristic()));
    return o;
}

Outcome rips_square() {
    Outcome o;
    const Filtration f = build_rips(fixtures::unit_square(), 2, 2.0);
    const Barcode h1 = barcode_absolute_homology(f, F2).in_dimension(1);
    const Barcode oracle = rank_invariant_oracle(f, F2, OracleVariant::absolute).in_dimension(1);
    o.require(h1.size() == 1, "H1 has " + std::to_string(h1.size()) + " intervals");
    if (h1.size() == 1) {
        o.require(std::abs(h1[0].birth - 1.0) <= kGeometryTolerance, "birth " + text::format_real(h1[0].birth));
        o.require(std::abs(h1[0].death - std::sqrt(2.0)) <= kGeometryTolerance,
                  "death " + text::format_real(h1[0].death));
    }
    o.require(h1 == oracle, "oracle disagrees");
    if (o.pass)
        o.detail = describe(h1);
    return o;
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& args) {
    Captured c;
    const std::string cmd = std::string("\"") + PERSISTA_CLI + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return c;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        c.out.append(buf, n);
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

Outcome determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / ("persista_acceptance_" + std::to_string(getpid()));
    fs::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& body) {
        std::ofstream(dir / name, std::ios::binary) << body;
        return (dir / name).string();
    };
    const std::string s2 = put("s2.cwf", fixtures::s2_cwf_text());
    const std::string rp2 = put("rp2.flt", write_flt(fixtures::rp2_filtration()));
    const std::string pts = put("square.txt", "0 0\n1 0\n1 1\n0 1\n");
    const std::string tsv = put("s2.tsv", write_barcode_tsv(barcode_absolute_homology(fixtures::s2(), F2)));
    const std::string rel = put("rel.tsv", write_barcode_tsv(barcode_relative(fixtures::s2(), F2, Flavor::homology)));

    const std::vector<std::string> commands = {
        "barcode " + s2 + " --module abs-hom",
        "barcode " + s2 + " --module abs-coh --format json",
        "barcode " + s2 + " --module rel-hom",
        "barcode " + s2 + " --module rel-coh",
        "barcode " + s2 + " --module all",
        "barcode " + rp2 + " --module all --field 3 --format json",
        "barcode " + rp2 + " --keep-ephemeral",
        "homology " + rp2,
        "homology " + s2,
        "rips " + pts + " --max-dim 2 --max-radius 2",
        "rips " + pts + " --max-dim 2 --max-radius 2 --format flt",
        "verify --suite all --seed 42 --count 20",
        "diagram " + tsv + " --style diagram",
        "diagram " + rel + " --style diagram",
        "diagram " + tsv + " --style barcode-strips",
        "example s2",
        "example rp2",
        "example square",
    };
    for (const std::string& cmd : commands) {
        const Captured a = capture(cmd), b = capture(cmd);
        o.require(a.status == 0, "`" + cmd + "` exited with " + std::to_string(a.status));
        o.require(!a.out.empty(), "`" + cmd + "` printed nothing");
        o.require(a.status == b.status && a.out == b.out, "`" + cmd + "` is not reproducible");
    }
    // Written files must match as well.
    const std::string f1 = (dir / "one.svg").string(), f2 = (dir / "two.svg").string();
    capture("diagram " + tsv + " -o " + f1);
    capture("diagram " + tsv + " -o " + f2);
    o.require(read_file(f1) == read_file(f2) && !read_file(f1).empty(), "SVG files differ");
    fs::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(commands.size()) + " commands run twice, outputs identical";
    return o;
}

} // namespace

int main() {
    int failures = 0;
    auto report = [&](int n, const std::string& title, const std::function<Outcome()>& body) {
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << n << " (" << title << ")";
        if (!o.detail.empty())
            std::cout << ": " << o.detail;
        std::cout << std::endl;
    };

    const std::vector<Filtration> duality_corpus = corpus(kSeed, 200, 40);
    double duality_seconds = 0;
    report(1, "S2 golden barcodes", golden_s2);
    report(2, "homology/cohomology duality", [&] { return duality_one(duality_corpus, duality_seconds); });
    report(3, "absolute/relative correspondence", [&] { return duality_two(duality_corpus); });
    report(4, "oracle equivalence", oracle_equivalence);
    report(5, "classical homology fixtures", classical_fixtures);
    report(6, "exactness and excision", exactness_and_excision);
    report(7, "subdivision", subdivision);
    report(8, "universal coefficients over a field", uct);
    report(9, "Rips unit square", rips_square);
    report(10, "CLI determinism", determinism);
    return failures;
}
