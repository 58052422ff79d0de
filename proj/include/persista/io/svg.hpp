#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "persista/persistence/barcode.hpp"

namespace persista {

enum class SvgStyle { diagram, barcode_strips };

namespace detail {

inline std::string svg_num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

struct SvgRange {
    double lo = 0.0;
    double hi = 1.0;
};

inline SvgRange svg_range(const Barcode& b) {
    std::vector<double> v;
    for (const Interval& i : b) {
        if (i.kind == IntervalKind::ephemeral)
            continue;
        if (std::isfinite(i.birth))
            v.push_back(i.birth);
        if (std::isfinite(i.death))
            v.push_back(i.death);
    }
    if (v.empty())
        return {};
    auto [mn, mx] = std::minmax_element(v.begin(), v.end());
    SvgRange r{*mn, *mx};
    if (r.hi <= r.lo)
        r.hi = r.lo + 1.0;
    return r;
}

inline const char* svg_color(int dim) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    return palette[static_cast<std::size_t>(dim) % 6];
}

} // namespace detail

/**
 * Persistence diagram (points above the diagonal) or barcode strips. Output
 * depends only on the barcode. In the diagram, classes that never die sit on
 * the top band and classes born at -inf on the left band. Ephemeral
 * intervals carry indices rather than values and are not drawn.
 */
inline std::string emit_diagram_svg(const Barcode& b, SvgStyle style) {
    using detail::svg_num;
    const double size = 400, margin = 40, band = 20;
    const detail::SvgRange r = detail::svg_range(b);
    const double plot = size - 2 * margin - band;
    auto sx = [&](double x) { return margin + band + (x - r.lo) / (r.hi - r.lo) * plot; };
    auto sy = [&](double y) { return size - margin - (y - r.lo) / (r.hi - r.lo) * plot; };

    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                    "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"400\" height=\"400\" "
                    "viewBox=\"0 0 400 400\">\n"
                    "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
    const std::string x0 = svg_num(margin + band), x1 = svg_num(size - margin);
    const std::string y0 = svg_num(size - margin), y1 = svg_num(margin + band);
    s += "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    s += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y0 + "\"/>\n";
    s += "<line x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x0 + "\" y2=\"" + y1 + "\"/>\n";
    s += "</g>\n";
    s += "<text x=\"" + x0 + "\" y=\"" + svg_num(size - margin + 15) + "\" font-size=\"10\">" + svg_num(r.lo) +
         "</text>\n";
    s += "<text x=\"" + svg_num(size - margin - 30) + "\" y=\"" + svg_num(size - margin + 15) +
         "\" font-size=\"10\">" + svg_num(r.hi) + "</text>\n";

    std::size_t id = 0;
    if (style == SvgStyle::diagram) {
        const double top = margin + band / 2, left = margin + band / 2;
        s += "<line id=\"diagonal\" x1=\"" + x0 + "\" y1=\"" + y0 + "\" x2=\"" + x1 + "\" y2=\"" + y1 +
             "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";
        s += "<line id=\"inf-band\" x1=\"" + x0 + "\" y1=\"" + svg_num(top) + "\" x2=\"" + x1 + "\" y2=\"" +
             svg_num(top) + "\" stroke=\"gray\"/>\n";
        s += "<text x=\"" + svg_num(margin - 25) + "\" y=\"" + svg_num(top + 4) + "\" font-size=\"10\">inf</text>\n";
        s += "<line id=\"neg-inf-band\" x1=\"" + svg_num(left) + "\" y1=\"" + y0 + "\" x2=\"" + svg_num(left) +
             "\" y2=\"" + y1 + "\" stroke=\"gray\"/>\n";
        for (const Interval& i : b) {
            if (i.kind == IntervalKind::ephemeral)
                continue;
            const bool no_death = std::isinf(i.death), no_birth = std::isinf(i.birth);
            const double cx = no_birth ? left : sx(i.birth);
            const double cy = no_death ? top : sy(i.death);
            const char* band_name = no_death ? "inf" : no_birth ? "neg-inf" : "none";
            s += "<circle id=\"m" + std::to_string(id++) + "\" class=\"mark\" data-dim=\"" + std::to_string(i.dim) +
                 "\" data-band=\"" + band_name + "\" cx=\"" + svg_num(cx) + "\" cy=\"" + svg_num(cy) +
                 "\" r=\"4\" fill=\"" + detail::svg_color(i.dim) + "\"/>\n";
        }
    } else {
        std::size_t rows = 0;
        for (const Interval& i : b)
            rows += i.kind != IntervalKind::ephemeral;
        const double step = rows ? std::min(12.0, plot / static_cast<double>(rows)) : 0.0;
        double y = margin + band;
        int dim = -1;
        for (const Interval& i : b) {
            if (i.kind == IntervalKind::ephemeral)
                continue;
            if (i.dim != dim) {
                dim = i.dim;
                s += "<text x=\"" + svg_num(margin - 30) + "\" y=\"" + svg_num(y + step / 2 + 3) +
                     "\" font-size=\"10\">H" + std::to_string(dim) + "</text>\n";
            }
            const double a = std::isinf(i.birth) ? margin : sx(i.birth);
            const double e = std::isinf(i.death) ? size - margin / 2 : sx(i.death);
            const char* band_name = std::isinf(i.death) ? "inf" : std::isinf(i.birth) ? "neg-inf" : "none";
            s += "<line id=\"m" + std::to_string(id++) + "\" class=\"mark\" data-dim=\"" + std::to_string(i.dim) +
                 "\" data-band=\"" + band_name + "\" x1=\"" + svg_num(a) + "\" y1=\"" + svg_num(y + step / 2) +
                 "\" x2=\"" + svg_num(e) + "\" y2=\"" + svg_num(y + step / 2) + "\" stroke=\"" +
                 detail::svg_color(i.dim) + "\" stroke-width=\"3\"/>\n";
            y += step;
        }
    }
    s += "</svg>\n";
    return s;
}

} // namespace persista
