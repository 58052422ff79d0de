// Command-line front end: barcodes, integer homology, Rips filtrations,
// property suites, SVG diagrams and built-in fixtures.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "persista/persista.hpp"
#include "persista/verify/fixtures.hpp"
#include "persista/verify/suites.hpp"

namespace {

using namespace persista;

enum Exit { ok = 0, failure = 1, input_error = 2 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + out_path);
    out << text;
}

PrimeField field_of(std::uint32_t p) {
    if (!PrimeField::is_prime(p))
        throw UsageError("--field " + std::to_string(p) + " is not prime");
    return PrimeField(p);
}

// One line per degree 0..top.
std::string integer_homology_text(const IntegerHomology& h, int top) {
    std::string out;
    for (std::size_t d = 0; d < h.betti.size() && static_cast<int>(d) <= top; ++d) {
        std::string group;
        if (h.betti[d] > 0)
            group = h.betti[d] == 1 ? "Z" : "Z^" + std::to_string(h.betti[d]);
        if (d < h.torsion.size())
            for (std::int64_t t : h.torsion[d])
                group += (group.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
        out += "H_" + std::to_string(d) + " = " + (group.empty() ? "0" : group) + '\n';
    }
    return out;
}

std::size_t oracle_cap_from_env() {
    if (const char* v = std::getenv("PERSISTA_ORACLE_CAP")) {
        auto cap = text::parse_int<std::size_t>(v);
        if (!cap || *cap == 0)
            throw UsageError("PERSISTA_ORACLE_CAP must be a positive integer");
        return *cap;
    }
    return 64;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"persista: persistent homology of filtered complexes"};
    app.require_subcommand(1);

    std::string input, out_path;
    std::uint32_t p = 2;
    std::string module = "abs-hom", format = "tsv";
    bool keep_ephemeral = false;

    auto* barcode = app.add_subcommand("barcode", "barcode of a .flt or .cwf filtration");
    barcode->add_option("file", input, "filtration file (.flt or .cwf)")->required();
    barcode->add_option("--field", p, "prime characteristic of the coefficient field");
    barcode->add_option("--module", module, "abs-hom | abs-coh | rel-hom | rel-coh | all")
        ->check(CLI::IsMember({"abs-hom", "abs-coh", "rel-hom", "rel-coh", "all"}));
    barcode->add_option("--format", format, "tsv | json")->check(CLI::IsMember({"tsv", "json"}));
    barcode->add_flag("--keep-ephemeral", keep_ephemeral, "keep zero-length pairs as index intervals");
    barcode->add_option("-o,--output", out_path, "output file (default stdout)");

    auto* homology = app.add_subcommand("homology", "integer homology (Betti numbers and torsion) per dimension");
    homology->add_option("file", input, "filtration file (.flt or .cwf)")->required();
    homology->add_option("-o,--output", out_path, "output file (default stdout)");

    int max_dim = 1;
    double max_radius = 0;
    std::size_t cap = kDefaultRipsCap;
    std::string rips_format = "cwf";
    auto* rips = app.add_subcommand(
        "rips", "Vietoris-Rips filtration of a point cloud; a simplex is born at the largest Euclidean distance "
                "between two of its vertices");
    rips->add_option("points", input, "point file: one point per line, blank- or comma-separated")->required();
    rips->add_option("--max-dim", max_dim, "largest simplex dimension")->required()->check(CLI::NonNegativeNumber);
    rips->add_option("--max-radius", max_radius, "largest edge length")->required();
    rips->add_option("--cap", cap, "maximum number of simplices");
    rips->add_option("--format", rips_format, "cwf | flt")->check(CLI::IsMember({"cwf", "flt"}));
    rips->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string suite = "all";
    std::uint64_t seed = 0;
    std::size_t count = 100;
    std::optional<std::size_t> oracle_cap;
    auto* verify = app.add_subcommand("verify", "run the randomized property suites");
    verify->add_option("--suite", suite, "duality | oracle | les | excision | subdivision | uct | all")
        ->check(CLI::IsMember({"duality", "oracle", "les", "excision", "subdivision", "uct", "all"}));
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--count", count, "cases per suite");
    verify->add_option("--oracle-cap", oracle_cap, "largest filtration the rank oracle accepts (or PERSISTA_ORACLE_CAP)");
    verify->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string style = "diagram";
    auto* diagram = app.add_subcommand("diagram", "SVG persistence diagram of a barcode TSV file");
    diagram->add_option("barcode", input, "barcode in TSV form")->required();
    diagram->add_option("--style", style, "diagram | barcode-strips")->check(CLI::IsMember({"diagram", "barcode-strips"}));
    diagram->add_option("-o,--output", out_path, "output file (default stdout)");

    std::string name;
    auto* example = app.add_subcommand("example", "write a built-in fixture");
    example->add_option("name", name, "s2 (.cwf) | rp2 (.flt) | square (points)")
        ->required()
        ->check(CLI::IsMember({"s2", "rp2", "square"}));
    example->add_option("-o,--output", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "persista: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (barcode->parsed()) {
            const PrimeField f = field_of(p);
            const Filtration flt = load_filtration(input);
            const BarcodeOptions opt{keep_ephemeral, {}};
            const BarcodeFormat bf = format == "json" ? BarcodeFormat::json : BarcodeFormat::tsv;
            if (module == "all") {
                // Every duality is asserted before anything is printed.
                const StandardBarcodes s = standard_barcodes(flt, f, opt);
                std::string out;
                const std::pair<const char*, const Barcode*> parts[] = {{"abs-hom", &s.absolute_homology},
                                                                        {"abs-coh", &s.absolute_cohomology},
                                                                        {"rel-hom", &s.relative_homology},
                                                                        {"rel-coh", &s.relative_cohomology}};
                if (bf == BarcodeFormat::json) {
                    out = "{\n";
                    for (std::size_t i = 0; i < 4; ++i) {
                        std::string body = write_barcode_json(*parts[i].second);
                        body.pop_back();
                        out += std::string("\"") + parts[i].first + "\": " + body + (i < 3 ? ",\n" : "\n");
                    }
                    out += "}\n";
                } else {
                    for (const auto& [label, b] : parts)
                        out += std::string("# ") + label + '\n' + write_barcode_tsv(*b);
                }
                emit(out, out_path);
            } else {
                Barcode b;
                if (module == "abs-hom")
                    b = barcode_absolute_homology(flt, f, opt);
                else if (module == "abs-coh")
                    b = barcode_absolute_cohomology(flt, f, opt);
                else
                    b = barcode_relative(flt, f, module == "rel-hom" ? Flavor::homology : Flavor::cohomology, opt);
                emit(write_barcode(b, bf), out_path);
            }
        } else if (homology->parsed()) {
            const Filtration flt = load_filtration(input);
            emit(integer_homology_text(integer_homology(flt), flt.max_dimension()), out_path);
        } else if (rips->parsed()) {
            const PointCloud pc = PointCloud::parse(read_file(input));
            const Filtration flt = build_rips(pc, max_dim, max_radius, cap);
            emit(write_filtration(flt, rips_format == "flt" ? Format::flt : Format::cwf), out_path);
        } else if (verify->parsed()) {
            const std::size_t ocap = oracle_cap ? *oracle_cap : oracle_cap_from_env();
            const auto results = verify::run_suite(suite, seed, count, ocap);
            std::string out;
            bool all_ok = true;
            for (const verify::SuiteResult& r : results)
                for (const verify::PropertyResult& prop : r.properties) {
                    all_ok = all_ok && prop.ok();
                    out += std::string(prop.ok() ? "PASS" : "FAIL") + '\t' + r.suite + '\t' + prop.name + '\t' +
                           std::to_string(prop.passed) + '/' + std::to_string(prop.passed + prop.failed);
                    if (!prop.ok())
                        out += "\tfirst failure: " + prop.first_failure;
                    out += '\n';
                }
            emit(out, out_path);
            return all_ok ? ok : failure;
        } else if (diagram->parsed()) {
            const Barcode b = parse_barcode_tsv(read_file(input));
            emit(emit_diagram_svg(b, style == "diagram" ? SvgStyle::diagram : SvgStyle::barcode_strips), out_path);
        } else if (example->parsed()) {
            if (name == "s2")
                emit(fixtures::s2_cwf_text(), out_path);
            else if (name == "rp2")
                emit(write_flt(fixtures::rp2_filtration()), out_path);
            else
                emit("0 0\n1 0\n1 1\n0 1\n", out_path);
        }
    } catch (const DualityViolation& e) {
        std::cerr << "persista: duality check failed: " << e.what() << '\n';
        return failure;
    } catch (const UsageError& e) {
        std::cerr << "persista: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        std::cerr << "persista: " << e.what() << '\n';
        return input_error;
    } catch (const std::invalid_argument& e) {
        std::cerr << "persista: " << e.what() << '\n';
        return input_error;
    }
    return ok;
}
