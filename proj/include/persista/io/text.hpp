#pragma once

#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace persista::text {

/// 17 significant digits: enough to round-trip any double. Infinities print
/// as inf / -inf.
inline std::string format_real(double x) {
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

/// Strips a trailing `#` comment and splits on blanks (and commas when asked).
inline std::vector<std::string_view> tokens(std::string_view line, bool commas = false) {
    if (auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    std::vector<std::string_view> out;
    std::size_t i = 0;
    auto sep = [commas](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f' || (commas && c == ','); };
    while (i < line.size()) {
        while (i < line.size() && sep(line[i]))
            ++i;
        std::size_t j = i;
        while (j < line.size() && !sep(line[j]))
            ++j;
        if (j > i)
            out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::vector<std::string_view> lines(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t nl = s.find('\n', start);
        if (nl == std::string_view::npos) {
            if (start < s.size())
                out.push_back(s.substr(start));
            break;
        }
        out.push_back(s.substr(start, nl - start));
        start = nl + 1;
    }
    return out;
}

inline std::optional<double> parse_real(std::string_view s) {
    if (s == "inf" || s == "+inf")
        return HUGE_VAL;
    if (s == "-inf")
        return -HUGE_VAL;
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

template <class Int>
std::optional<Int> parse_int(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    Int v{};
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        return std::nullopt;
    return v;
}

} // namespace persista::text
