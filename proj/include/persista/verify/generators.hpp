#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "persista/core/filtration.hpp"
#include "persista/core/simplex.hpp"

namespace persista::verify {

/**
 * Seeded source of random instances. Uses mt19937_64 and plain modulo
 * reduction so that a seed produces the same instances with every standard
 * library (std distributions are not portable across implementations).
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish in [0, n); n > 0.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Inclusive range.
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    bool coin() { return engine_() & 1U; }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent per-case seed.
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

struct ComplexShape {
    std::size_t max_vertices = 8;
    int max_dim = 3;
    std::size_t max_simplices = 40;
};

inline Simplex random_simplex(Rng& rng, std::size_t vertices, int max_dim) {
    const auto k = static_cast<std::size_t>(rng.between(1, std::min<std::int64_t>(max_dim + 1, static_cast<std::int64_t>(vertices))));
    std::vector<Vertex> pool(vertices);
    for (std::size_t i = 0; i < vertices; ++i)
        pool[i] = static_cast<Vertex>(i);
    for (std::size_t i = 0; i < k; ++i)
        std::swap(pool[i], pool[i + rng.below(vertices - i)]);
    pool.resize(k);
    return Simplex(std::move(pool));
}

/// Face-closed complex grown by adding random simplices with their faces,
/// never exceeding shape.max_simplices.
inline SimplicialComplex random_complex(Rng& rng, const ComplexShape& shape = {}) {
    const auto vmax = static_cast<std::int64_t>(shape.max_vertices);
    const auto nv = static_cast<std::size_t>(rng.between((vmax + 1) / 2, vmax));
    const auto cap = static_cast<std::int64_t>(shape.max_simplices);
    const auto target = static_cast<std::size_t>(rng.between((cap + 1) / 2, cap));
    SimplicialComplex c;
    for (int attempts = 0; attempts < 256 && c.size() < target; ++attempts) {
        SimplicialComplex next = c;
        next.insert_with_faces(random_simplex(rng, nv, shape.max_dim));
        if (next.size() <= shape.max_simplices)
            c = std::move(next);
    }
    if (c.empty())
        c.insert(Simplex{0});
    return c;
}

/// Closure of a random subset of the simplices of x.
inline SimplicialComplex random_subcomplex(Rng& rng, const SimplicialComplex& x) {
    std::vector<Simplex> picked;
    for (const Simplex& s : x)
        if (rng.below(3) == 0)
            picked.push_back(s);
    return SimplicialComplex::closure(picked);
}

struct Cover {
    SimplicialComplex a;
    SimplicialComplex b;
};

/// Subcomplexes A, B with A u B = x: every maximal simplex goes to A, to B,
/// or to both.
inline Cover random_cover(Rng& rng, const SimplicialComplex& x) {
    std::vector<Simplex> a, b;
    for (const Simplex& s : x.maximal_simplices()) {
        switch (rng.below(3)) {
        case 0:
            a.push_back(s);
            break;
        case 1:
            b.push_back(s);
            break;
        default:
            a.push_back(s);
            b.push_back(s);
        }
    }
    return {SimplicialComplex::closure(a), SimplicialComplex::closure(b)};
}

/// Random face-closed complex with monotone births on the grid 0..grid:
/// each simplex is born at the max of its facets' births and a random grid
/// value, so ties and zero-length pairs are common.
inline Filtration random_filtration(Rng& rng, const ComplexShape& shape = {}, int grid = 6) {
    const SimplicialComplex c = random_complex(rng, shape);
    std::map<Simplex, double> birth;
    for (const Simplex& s : c) { // faces come first in this order
        double b = static_cast<double>(rng.between(0, grid));
        if (s.dimension() > 0)
            for (const Simplex& f : s.facets())
                b = std::max(b, birth.at(f));
        birth.emplace(s, b);
    }
    return filtration_from_complex(c, birth);
}

} // namespace persista::verify
