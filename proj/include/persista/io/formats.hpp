#pragma once

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/io/text.hpp"

namespace persista {

/// `.flt`: one simplex per line, `birth v0 v1 ... vk`.
/// `.cwf`: one cell per line, `id dim birth face:coeff ...`.
enum class Format { flt, cwf };

inline Filtration parse_flt(std::string_view input) {
    std::vector<std::pair<Simplex, double>> items;
    std::size_t lineno = 0;
    for (std::string_view line : text::lines(input)) {
        ++lineno;
        auto tok = text::tokens(line);
        if (tok.empty())
            continue;
        if (tok.size() < 2)
            throw ParseError(lineno, "expected `birth v0 ... vk`");
        auto birth = text::parse_real(tok[0]);
        if (!birth)
            throw ParseError(lineno, "bad birth value '" + std::string(tok[0]) + "'");
        if (!std::isfinite(*birth))
            throw ValidationError("non-finite birth on line " + std::to_string(lineno));
        std::vector<Vertex> verts;
        for (std::size_t i = 1; i < tok.size(); ++i) {
            auto v = text::parse_int<Vertex>(tok[i]);
            if (!v)
                throw ParseError(lineno, "bad vertex id '" + std::string(tok[i]) + "'");
            verts.push_back(*v);
        }
        try {
            items.emplace_back(Simplex(std::move(verts)), *birth);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    try {
        return filtration_from_simplices(std::move(items));
    } catch (const MonotonicityError& e) {
        throw ValidationError(std::string("non-monotone birth: ") + e.what());
    }
}

inline Filtration parse_cwf(std::string_view input) {
    std::vector<Cell> cells;
    std::size_t lineno = 0;
    for (std::string_view line : text::lines(input)) {
        ++lineno;
        auto tok = text::tokens(line);
        if (tok.empty())
            continue;
        if (tok.size() < 3)
            throw ParseError(lineno, "expected `id dim birth face:coeff ...`");
        auto id = text::parse_int<std::size_t>(tok[0]);
        auto dim = text::parse_int<int>(tok[1]);
        auto birth = text::parse_real(tok[2]);
        if (!id)
            throw ParseError(lineno, "bad cell id '" + std::string(tok[0]) + "'");
        if (!dim || *dim < 0)
            throw ParseError(lineno, "bad dimension '" + std::string(tok[1]) + "'");
        if (!birth)
            throw ParseError(lineno, "bad birth value '" + std::string(tok[2]) + "'");
        if (*id != cells.size())
            throw ValidationError("cell id " + std::to_string(*id) + " on line " + std::to_string(lineno) +
                                  " out of order, expected " + std::to_string(cells.size()));
        Cell c{*id, *dim, *birth, {}};
        for (std::size_t i = 3; i < tok.size(); ++i) {
            const auto colon = tok[i].find(':');
            if (colon == std::string_view::npos)
                throw ParseError(lineno, "expected face:coeff, got '" + std::string(tok[i]) + "'");
            auto face = text::parse_int<std::size_t>(tok[i].substr(0, colon));
            auto coeff = text::parse_int<std::int64_t>(tok[i].substr(colon + 1));
            if (!face || !coeff)
                throw ParseError(lineno, "bad face term '" + std::string(tok[i]) + "'");
            c.boundary.add_term(*face, *coeff);
        }
        cells.push_back(std::move(c));
    }
    return Filtration(std::move(cells));
}

inline Filtration parse_filtration(std::string_view input, Format format) {
    return format == Format::flt ? parse_flt(input) : parse_cwf(input);
}

/// Format from the file extension; throws ParseError for anything else.
inline Format format_of(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".flt")
        return Format::flt;
    if (ext == ".cwf")
        return Format::cwf;
    throw ParseError(0, "unknown filtration extension '" + ext + "' (expected .flt or .cwf)");
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Filtration load_filtration(const std::filesystem::path& path) {
    return parse_filtration(read_file(path), format_of(path));
}

inline std::string write_cwf(const Filtration& flt) {
    std::string out;
    for (const Cell& c : flt.cells()) {
        out += std::to_string(c.id) + ' ' + std::to_string(c.dim) + ' ' + text::format_real(c.birth);
        for (const auto& [face, coeff] : c.boundary)
            out += ' ' + std::to_string(face) + ':' + std::to_string(coeff);
        out += '\n';
    }
    return out;
}

/// Needs the simplex labels; CW filtrations can only be written as `.cwf`.
inline std::string write_flt(const Filtration& flt) {
    if (!flt.is_simplicial())
        throw ValidationError("filtration has no simplex labels; write it as .cwf");
    std::string out;
    for (std::size_t i = 0; i < flt.size(); ++i) {
        out += text::format_real(flt[i].birth);
        for (Vertex v : flt.labels()[i].vertices())
            out += ' ' + std::to_string(v);
        out += '\n';
    }
    return out;
}

inline std::string write_filtration(const Filtration& flt, Format format) {
    return format == Format::flt ? write_flt(flt) : write_cwf(flt);
}

} // namespace persista
