#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "persista/core/errors.hpp"
#include "persista/io/text.hpp"
#include "persista/persistence/barcode.hpp"

namespace persista {

enum class BarcodeFormat { tsv, json };

inline std::string write_barcode_tsv(const Barcode& b) {
    std::string out = "dim\tbirth\tdeath\tkind\n";
    for (const Interval& i : b)
        out += std::to_string(i.dim) + '\t' + text::format_real(i.birth) + '\t' + text::format_real(i.death) + '\t' +
               to_string(i.kind) + '\n';
    return out;
}

/// Infinite endpoints are written as the strings "inf" / "-inf".
inline std::string write_barcode_json(const Barcode& b) {
    auto real = [](double x) -> nlohmann::ordered_json {
        if (std::isinf(x))
            return x > 0 ? "inf" : "-inf";
        return x;
    };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Interval& i : b) {
        nlohmann::ordered_json o;
        o["dim"] = i.dim;
        o["birth"] = real(i.birth);
        o["death"] = real(i.death);
        o["kind"] = to_string(i.kind);
        o["birth_index"] = i.birth_index;
        if (i.death_index)
            o["death_index"] = *i.death_index;
        else
            o["death_index"] = nullptr;
        arr.push_back(std::move(o));
    }
    nlohmann::ordered_json doc;
    doc["intervals"] = std::move(arr);
    return doc.dump(2) + '\n';
}

inline std::string write_barcode(const Barcode& b, BarcodeFormat format) {
    return format == BarcodeFormat::tsv ? write_barcode_tsv(b) : write_barcode_json(b);
}

/// Reads the TSV written above. Provenance is not stored in TSV, so the
/// indices of parsed intervals are zero.
inline Barcode parse_barcode_tsv(std::string_view input) {
    std::vector<Interval> out;
    std::size_t lineno = 0;
    for (std::string_view line : text::lines(input)) {
        ++lineno;
        auto tok = text::tokens(line);
        if (tok.empty() || (tok[0] == "dim" && lineno == 1))
            continue;
        if (tok.size() != 4)
            throw ParseError(lineno, "expected `dim birth death kind`");
        auto dim = text::parse_int<int>(tok[0]);
        auto birth = text::parse_real(tok[1]);
        auto death = text::parse_real(tok[2]);
        if (!dim || !birth || !death)
            throw ParseError(lineno, "bad number");
        Interval i{*dim, *birth, *death, IntervalKind::finite, 0, std::nullopt};
        if (tok[3] == "finite") {
            if (!(*birth < *death))
                throw ParseError(lineno, "finite interval needs birth < death");
            i.death_index = 0;
        } else if (tok[3] == "essential") {
            i.kind = IntervalKind::essential;
        } else if (tok[3] == "ephemeral") {
            i.kind = IntervalKind::ephemeral;
            i.birth_index = static_cast<CellId>(*birth);
            i.death_index = static_cast<CellId>(*death);
        } else {
            throw ParseError(lineno, "unknown interval kind '" + std::string(tok[3]) + "'");
        }
        out.push_back(i);
    }
    return Barcode(std::move(out));
}

} // namespace persista
