#include <catch_amalgamated.hpp>

#include <cmath>
#include <string>

#include "persista/io/barcode_io.hpp"
#include "persista/io/formats.hpp"
#include "persista/io/rips.hpp"
#include "persista/io/svg.hpp"
#include "persista/persistence/modules.hpp"
#include "persista/persistence/oracle.hpp"
#include "persista/verify/fixtures.hpp"
#include "persista/verify/generators.hpp"

using namespace persista;
using Catch::Matchers::ContainsSubstring;

namespace {

const PrimeField F2(2);

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("S2 cwf fixture parses to the S2 filtration") {
    const Filtration f = parse_filtration(fixtures::s2_cwf_text(), Format::cwf);
    REQUIRE(f.size() == 6);
    CHECK(f[4].dim == 2);
    CHECK(f[4].boundary.coefficient(2) == 1);
    CHECK(f[4].boundary.coefficient(3) == -1);
    CHECK_FALSE(f.is_simplicial());
}

TEST_CASE("empty input gives the empty filtration") {
    CHECK(parse_filtration("", Format::flt).empty());
    CHECK(parse_filtration("# only a comment\n\n", Format::cwf).empty());
}

TEST_CASE("cwf validation errors") {
    const std::string bad = "0 0 0\n1 0 1\n2 1 2 0:1 1:-1\n3 1 3 0:1 1:-1\n4 2 4 2:1\n";
    CHECK_THROWS_AS(parse_filtration(bad, Format::cwf), ValidationError);
    CHECK_THROWS_WITH(parse_filtration(bad, Format::cwf), "boundary squared nonzero at cell 4");
    CHECK_THROWS_WITH(parse_filtration("0 0 1\n1 0 0\n", Format::cwf), ContainsSubstring("non-monotone birth"));
    CHECK_THROWS_WITH(parse_filtration("0 0 0\n1 1 0 2:1\n2 0 0\n", Format::cwf), ContainsSubstring("forward reference"));
    CHECK_THROWS_AS(parse_filtration("1 0 0\n", Format::cwf), ValidationError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        (void)parse_filtration("0 0 0\n\n1 zero 1\n", Format::cwf);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        (void)parse_filtration("0 0\nx 1\n", Format::flt);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_filtration("0 0 0 1:x\n", Format::cwf), ParseError);
    CHECK_THROWS_AS(parse_filtration("0 1 1\n", Format::flt), ParseError);
}

TEST_CASE("flt parsing sorts vertices and computes signed boundaries") {
    const Filtration f = parse_filtration("0 0\n0 1\n# edge\n1.5 1 0\n", Format::flt);
    REQUIRE(f.size() == 3);
    CHECK(f.labels()[2] == Simplex{0, 1});
    CHECK(f[2].boundary.coefficient(1) == 1);
    CHECK(f[2].boundary.coefficient(0) == -1);
    CHECK_THROWS_AS(parse_filtration("0 0\n0 0 1\n", Format::flt), ValidationError);       // missing face
    CHECK_THROWS_AS(parse_filtration("0 0\n0 1\n0 0\n", Format::flt), ValidationError);    // duplicate
    CHECK_THROWS_AS(parse_filtration("1 0\n0 1\n0 0 1\n", Format::flt), ValidationError);  // non-monotone
}

TEST_CASE("write then parse reproduces the filtration") {
    verify::Rng rng(89);
    for (int t = 0; t < 100; ++t) {
        Filtration flt = verify::random_filtration(rng);
        // Non-integer births exercise the 17-digit rendering.
        std::vector<std::pair<Simplex, double>> items;
        for (std::size_t i = 0; i < flt.size(); ++i)
            items.emplace_back(flt.labels()[i], flt[i].birth / 3.0);
        flt = filtration_from_simplices(items);
        CHECK(parse_filtration(write_cwf(flt), Format::cwf) == flt);
        CHECK(parse_filtration(write_flt(flt), Format::flt) == flt);
    }
    CHECK_THROWS_AS(write_flt(fixtures::s2()), ValidationError);
    CHECK(write_cwf(fixtures::s2()) == "0 0 0\n1 0 1\n2 1 2 0:1 1:-1\n3 1 3 0:1 1:-1\n4 2 4 2:1 3:-1\n5 2 5 2:1 3:-1\n");
}

TEST_CASE("format from extension") {
    CHECK(format_of("a/b.flt") == Format::flt);
    CHECK(format_of("b.cwf") == Format::cwf);
    CHECK_THROWS_AS(format_of("b.txt"), ParseError);
}

TEST_CASE("Rips complex of two points") {
    const Filtration f = build_rips(PointCloud({{0.0}, {1.0}}), 1, 2.0);
    REQUIRE(f.size() == 3);
    CHECK(f[0].birth == 0);
    CHECK(f[1].birth == 0);
    CHECK(f[2].dim == 1);
    CHECK(f[2].birth == 1);
}

TEST_CASE("Rips complex of the unit square") {
    const Filtration f = build_rips(fixtures::unit_square(), 2, 2.0);
    CHECK(f.size() == 14);
    const Barcode h1 = barcode_absolute_homology(f, F2).in_dimension(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].birth == 1.0);
    CHECK(std::abs(h1[0].death - std::sqrt(2.0)) <= 1e-12);
    CHECK(rank_invariant_oracle(f, F2, OracleVariant::absolute) == barcode_absolute_homology(f, F2));
    // Ordered by (birth, dimension, vertices).
    for (std::size_t i = 1; i < f.size(); ++i) {
        CHECK(f[i - 1].birth <= f[i].birth);
        if (f[i - 1].birth == f[i].birth)
            CHECK(f.labels()[i - 1] < f.labels()[i]);
    }
}

TEST_CASE("Rips complex below the minimum distance is discrete") {
    const Filtration f = build_rips(fixtures::unit_square(), 2, 0.5);
    CHECK(f.size() == 4);
    CHECK(barcode_absolute_homology(f, F2).size() == 4);
}

TEST_CASE("Rips argument checks and cap") {
    CHECK_THROWS_AS(build_rips(fixtures::unit_square(), -1, 1.0), ValidationError);
    CHECK_THROWS_AS(build_rips(fixtures::unit_square(), 1, 0.0), ValidationError);
    CHECK_THROWS_AS(build_rips(fixtures::unit_square(), 2, 2.0, 10), SizeError);
    CHECK_NOTHROW(build_rips(fixtures::unit_square(), 2, 2.0, 14));
}

TEST_CASE("Rips agrees with the clique definition on random clouds") {
    verify::Rng rng(97);
    for (int t = 0; t < 30; ++t) {
        std::vector<PointCloud::Point> pts;
        const auto n = rng.between(2, 7);
        for (int i = 0; i < n; ++i)
            pts.push_back({static_cast<double>(rng.between(0, 10)), static_cast<double>(rng.between(0, 10))});
        const PointCloud pc(pts);
        const double r = static_cast<double>(rng.between(1, 12));
        const Filtration f = build_rips(pc, 2, r);
        std::size_t expected = 0;
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) > 3)
                continue;
            bool ok = true;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if ((mask >> i & 1) && (mask >> j & 1) && pc.distance(i, j) > r)
                        ok = false;
            expected += ok;
        }
        CHECK(f.size() == expected);
        for (std::size_t i = 0; i < f.size(); ++i) {
            double b = 0;
            const Simplex& s = f.labels()[i];
            for (std::size_t a = 0; a < s.size(); ++a)
                for (std::size_t c = a + 1; c < s.size(); ++c)
                    b = std::max(b, pc.distance(s[a], s[c]));
            CHECK(f[i].birth == b);
        }
    }
}

TEST_CASE("point cloud parsing") {
    const PointCloud pc = PointCloud::parse("# square\n0 0\n1,0\n 1 , 1 \n0\t1\n");
    CHECK(pc.size() == 4);
    CHECK(pc.dimension() == 2);
    CHECK_THROWS_AS(PointCloud::parse("0 0\n1\n"), ParseError);
    CHECK_THROWS_AS(PointCloud::parse("0 a\n"), ParseError);
    CHECK_THROWS_AS(PointCloud::parse("0 inf\n"), ValidationError);
}

TEST_CASE("barcode TSV") {
    const Barcode abs = barcode_absolute_homology(fixtures::s2(), F2);
    CHECK(write_barcode(abs, BarcodeFormat::tsv) ==
          "dim\tbirth\tdeath\tkind\n0\t0\tinf\tessential\n0\t1\t2\tfinite\n1\t3\t4\tfinite\n2\t5\tinf\tessential\n");
    CHECK(write_barcode(Barcode{}, BarcodeFormat::tsv) == "dim\tbirth\tdeath\tkind\n");
    const std::string rel = write_barcode(barcode_relative(fixtures::s2(), F2, Flavor::homology), BarcodeFormat::tsv);
    CHECK(count(rel, "\t-inf\t") == 2);
    CHECK(rel == "dim\tbirth\tdeath\tkind\n0\t-inf\t0\tessential\n1\t1\t2\tfinite\n2\t-inf\t5\tessential\n2\t3\t4\tfinite\n");
}

TEST_CASE("barcode TSV round trip") {
    verify::Rng rng(101);
    for (int t = 0; t < 100; ++t) {
        const Filtration flt = verify::random_filtration(rng);
        std::vector<std::pair<Simplex, double>> items;
        for (std::size_t i = 0; i < flt.size(); ++i)
            items.emplace_back(flt.labels()[i], std::sqrt(flt[i].birth + 0.1));
        const StandardBarcodes s = standard_barcodes(filtration_from_simplices(items), F2, {true, {}});
        for (const Barcode* b : {&s.absolute_homology, &s.relative_homology})
            CHECK(parse_barcode_tsv(write_barcode_tsv(*b)) == *b);
    }
    CHECK_THROWS_AS(parse_barcode_tsv("dim\tbirth\tdeath\tkind\n0\t1\t1\tfinite\n"), ParseError);
    CHECK_THROWS_AS(parse_barcode_tsv("0\t1\t2\tweird\n"), ParseError);
}

TEST_CASE("barcode JSON") {
    const Barcode abs = barcode_absolute_homology(fixtures::s2(), F2);
    const auto doc = nlohmann::json::parse(write_barcode(abs, BarcodeFormat::json));
    REQUIRE(doc["intervals"].size() == 4);
    CHECK(doc["intervals"][0]["death"] == "inf");
    CHECK(doc["intervals"][1]["birth_index"] == 1);
    CHECK(doc["intervals"][1]["death_index"] == 2);
    CHECK(doc["intervals"][3]["death_index"].is_null());
    CHECK(nlohmann::json::parse(write_barcode(Barcode{}, BarcodeFormat::json))["intervals"].empty());
}

TEST_CASE("SVG output") {
    const std::string empty = emit_diagram_svg(Barcode{}, SvgStyle::diagram);
    CHECK_THAT(empty, ContainsSubstring("<svg"));
    CHECK_THAT(empty, ContainsSubstring("id=\"axes\""));
    CHECK(count(empty, "class=\"mark\"") == 0);
    CHECK(empty.substr(empty.size() - 7) == "</svg>\n");

    const Barcode abs = barcode_absolute_homology(fixtures::s2(), F2);
    const std::string svg = emit_diagram_svg(abs, SvgStyle::diagram);
    CHECK(count(svg, "class=\"mark\"") == 4);
    CHECK(count(svg, "data-band=\"inf\"") == 2);
    CHECK(svg == emit_diagram_svg(abs, SvgStyle::diagram));

    const std::string strips = emit_diagram_svg(abs, SvgStyle::barcode_strips);
    CHECK(count(strips, "class=\"mark\"") == 4);
    CHECK_THAT(strips, ContainsSubstring(">H2<"));

    const std::string rel = emit_diagram_svg(barcode_relative(fixtures::s2(), F2, Flavor::homology), SvgStyle::diagram);
    CHECK(count(rel, "data-band=\"neg-inf\"") == 2);
}
