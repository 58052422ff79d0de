#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"

namespace persista {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class IntervalKind {
    finite,
    essential,
    /// Zero-length pair kept on request; birth/death hold filtration indices.
    ephemeral,
};

inline const char* to_string(IntervalKind k) {
    switch (k) {
    case IntervalKind::finite:
        return "finite";
    case IntervalKind::essential:
        return "essential";
    case IntervalKind::ephemeral:
        return "ephemeral";
    }
    return "?";
}

/// A half-open interval [birth, death) in homological dimension `dim`,
/// plus the filtration indices it came from.
struct Interval {
    int dim = 0;
    double birth = 0.0;
    double death = kInfinity;
    IntervalKind kind = IntervalKind::essential;
    CellId birth_index = 0;
    std::optional<CellId> death_index;

    static Interval finite(int dim, double birth, double death, CellId b, CellId d) {
        if (!(birth < death))
            throw ValidationError("finite interval needs birth < death");
        return {dim, birth, death, IntervalKind::finite, b, d};
    }
    /// [birth, inf)
    static Interval essential(int dim, double birth, CellId b) {
        return {dim, birth, kInfinity, IntervalKind::essential, b, std::nullopt};
    }
    /// [-inf, death): the relative counterpart of an essential class born at `b`.
    static Interval essential_relative(int dim, double death, CellId b) {
        return {dim, -kInfinity, death, IntervalKind::essential, b, std::nullopt};
    }
    static Interval ephemeral(int dim, CellId b, CellId d) {
        return {dim, static_cast<double>(b), static_cast<double>(d), IntervalKind::ephemeral, b, d};
    }

    bool is_finite() const noexcept { return kind == IntervalKind::finite; }
    bool is_essential() const noexcept { return kind == IntervalKind::essential; }

    /// Value-level equality: provenance is not compared.
    bool same_value(const Interval& o) const noexcept {
        return dim == o.dim && birth == o.birth && death == o.death && kind == o.kind;
    }
};

/// Canonical order: (dim, birth, death, kind, provenance).
inline bool canonical_less(const Interval& a, const Interval& b) {
    auto key = [](const Interval& i) {
        return std::make_tuple(i.dim, i.birth, i.death, static_cast<int>(i.kind), i.birth_index,
                               i.death_index.value_or(std::numeric_limits<CellId>::max()));
    };
    return key(a) < key(b);
}

/// A multiset of intervals, always held in canonical order.
class Barcode {
public:
    Barcode() = default;
    explicit Barcode(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
        std::sort(intervals_.begin(), intervals_.end(), canonical_less);
    }

    std::size_t size() const noexcept { return intervals_.size(); }
    bool empty() const noexcept { return intervals_.empty(); }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    auto begin() const noexcept { return intervals_.begin(); }
    auto end() const noexcept { return intervals_.end(); }
    const std::vector<Interval>& intervals() const noexcept { return intervals_; }

    template <class Pred>
    Barcode filtered(Pred pred) const {
        std::vector<Interval> out;
        for (const Interval& i : intervals_)
            if (pred(i))
                out.push_back(i);
        return Barcode(std::move(out));
    }
    Barcode in_dimension(int d) const {
        return filtered([d](const Interval& i) { return i.dim == d; });
    }
    Barcode finite_part() const {
        return filtered([](const Interval& i) { return i.is_finite(); });
    }
    Barcode essential_part() const {
        return filtered([](const Interval& i) { return i.is_essential(); });
    }

    /// Multiset equality of (dim, birth, death, kind).
    bool operator==(const Barcode& o) const {
        if (size() != o.size())
            return false;
        for (std::size_t i = 0; i < size(); ++i)
            if (!intervals_[i].same_value(o.intervals_[i]))
                return false;
        return true;
    }

    /// Equality including the originating filtration indices.
    bool same_provenance(const Barcode& o) const {
        if (!(*this == o))
            return false;
        auto key = [](const Interval& i) {
            return std::make_tuple(i.dim, i.birth_index, i.death_index.value_or(std::numeric_limits<CellId>::max()));
        };
        std::vector<std::tuple<int, CellId, CellId>> a, b;
        for (const Interval& i : intervals_)
            a.push_back(key(i));
        for (const Interval& i : o.intervals_)
            b.push_back(key(i));
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }

private:
    std::vector<Interval> intervals_;
};

/// Finite endpoints of every (non-ephemeral) interval, ascending, then +inf.
inline std::vector<double> spectrum(const Barcode& b) {
    std::vector<double> pts;
    for (const Interval& i : b) {
        if (i.kind == IntervalKind::ephemeral)
            continue;
        if (std::isfinite(i.birth))
            pts.push_back(i.birth);
        if (std::isfinite(i.death))
            pts.push_back(i.death);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    pts.push_back(kInfinity);
    return pts;
}

inline std::string describe(const Interval& i) {
    auto num = [](double x) {
        if (std::isinf(x))
            return std::string(x > 0 ? "inf" : "-inf");
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return std::string(buf);
    };
    return "[" + num(i.birth) + "," + num(i.death) + ")_" + std::to_string(i.dim);
}

inline std::string describe(const Barcode& b) {
    std::string s = "{";
    for (std::size_t k = 0; k < b.size(); ++k)
        s += (k ? ", " : "") + describe(b[k]);
    return s + "}";
}

} // namespace persista
