#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "persista/core/errors.hpp"
#include "persista/core/filtration.hpp"
#include "persista/io/text.hpp"

namespace persista {

/// Points in R^m, all of the same dimension m >= 1, finite coordinates.
class PointCloud {
public:
    using Point = std::vector<double>;

    PointCloud() = default;
    explicit PointCloud(std::vector<Point> points) : points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (points_[i].empty())
                throw ValidationError("point " + std::to_string(i) + " has no coordinates");
            if (points_[i].size() != points_[0].size())
                throw ValidationError("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
                                      " coordinates, expected " + std::to_string(points_[0].size()));
            for (double x : points_[i])
                if (!std::isfinite(x))
                    throw ValidationError("point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }

    /// One point per line, coordinates separated by blanks or commas.
    static PointCloud parse(std::string_view input) {
        std::vector<Point> pts;
        std::size_t lineno = 0;
        for (std::string_view line : text::lines(input)) {
            ++lineno;
            auto tok = text::tokens(line, true);
            if (tok.empty())
                continue;
            Point p;
            for (std::string_view t : tok) {
                auto x = text::parse_real(t);
                if (!x)
                    throw ParseError(lineno, "bad coordinate '" + std::string(t) + "'");
                p.push_back(*x);
            }
            if (!pts.empty() && p.size() != pts.front().size())
                throw ParseError(lineno, "expected " + std::to_string(pts.front().size()) + " coordinates, got " +
                                             std::to_string(p.size()));
            pts.push_back(std::move(p));
        }
        return PointCloud(std::move(pts));
    }

    std::size_t size() const noexcept { return points_.size(); }
    std::size_t dimension() const noexcept { return points_.empty() ? 0 : points_[0].size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }

    double distance(std::size_t i, std::size_t j) const {
        double s = 0.0;
        for (std::size_t k = 0; k < dimension(); ++k) {
            const double d = points_[i][k] - points_[j][k];
            s += d * d;
        }
        return std::sqrt(s);
    }

private:
    std::vector<Point> points_;
};

inline constexpr std::size_t kDefaultRipsCap = 1'000'000;

/**
 * Vietoris-Rips filtration: every set of at most max_dim + 1 points whose
 * pairwise distances are all <= max_radius. A simplex is born at the largest
 * pairwise distance among its vertices (0 for a vertex).
 */
inline Filtration build_rips(const PointCloud& pc, int max_dim, double max_radius, std::size_t cap = kDefaultRipsCap) {
    if (max_dim < 0)
        throw ValidationError("max_dim must be >= 0");
    if (!(max_radius > 0))
        throw ValidationError("max_radius must be > 0");
    const std::size_t n = pc.size();
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    std::vector<std::vector<Vertex>> up(n); // neighbours with larger id
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            dist[i][j] = dist[j][i] = pc.distance(i, j);
            if (dist[i][j] <= max_radius)
                up[i].push_back(static_cast<Vertex>(j));
        }

    std::vector<std::pair<Simplex, double>> items;
    auto push = [&](const std::vector<Vertex>& verts, double birth) {
        if (items.size() >= cap)
            throw SizeError("Rips complex exceeds the cap of " + std::to_string(cap) + " simplices");
        items.emplace_back(Simplex(verts), birth);
    };

    // Depth-first clique extension; candidates are common larger neighbours.
    std::vector<Vertex> clique;
    auto extend = [&](auto&& self, const std::vector<Vertex>& candidates, double birth) -> void {
        push(clique, birth);
        if (static_cast<int>(clique.size()) > max_dim)
            return;
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            const Vertex v = candidates[k];
            double b = birth;
            for (Vertex u : clique)
                b = std::max(b, dist[u][v]);
            std::vector<Vertex> next;
            for (std::size_t m = k + 1; m < candidates.size(); ++m)
                if (dist[v][candidates[m]] <= max_radius)
                    next.push_back(candidates[m]);
            clique.push_back(v);
            self(self, next, b);
            clique.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        clique.assign(1, static_cast<Vertex>(i));
        extend(extend, up[i], 0.0);
    }
    return filtration_from_simplices(std::move(items));
}

} // namespace persista
