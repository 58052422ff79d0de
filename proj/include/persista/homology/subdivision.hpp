#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <vector>

#include "persista/core/simplex.hpp"

namespace persista {

/// The barycentric subdivision and, for each new vertex, the simplex of the
/// original complex it stands for (new vertex id = index into vertex_origin).
struct Subdivision {
    SimplicialComplex complex;
    std::vector<Simplex> vertex_origin;
};

/**
 * Combinatorial barycentric subdivision: the order complex of the face
 * poset. New vertices are the simplices of `c` (numbered in the complex's
 * iteration order); new simplices are the chains s_0 < s_1 < ... < s_k.
 * Every chain extends to a maximal flag of some simplex, so generating the
 * maximal flags of every simplex and closing under faces is enough.
 */
inline Subdivision barycentric_subdivision(const SimplicialComplex& c) {
    Subdivision out;
    std::map<Simplex, Vertex> id;
    for (const Simplex& s : c) {
        id.emplace(s, static_cast<Vertex>(out.vertex_origin.size()));
        out.vertex_origin.push_back(s);
    }
    for (const Simplex& s : c) {
        std::vector<Vertex> order(s.vertices().begin(), s.vertices().end());
        do {
            std::vector<Vertex> flag;
            std::vector<Vertex> prefix;
            for (Vertex v : order) {
                prefix.push_back(v);
                flag.push_back(id.at(Simplex(prefix)));
            }
            out.complex.insert_with_faces(Simplex(std::move(flag)));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return out;
}

inline SimplicialComplex barycentric_subdivide(const SimplicialComplex& c) { return barycentric_subdivision(c).complex; }

inline double euclidean_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        sum += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(sum);
}

/// Largest simplex diameter (max pairwise vertex distance); 0 if no edges.
inline double mesh_diameter(const GeometricComplex& g) {
    double best = 0.0;
    for (const Simplex& s : g.complex())
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j)
                best = std::max(best, euclidean_distance(g.point(s[i]), g.point(s[j])));
    return best;
}

struct GeometricSubdivision {
    GeometricComplex complex;
    std::vector<Simplex> vertex_origin;
    int dimension = -1;
    double diameter_before = 0.0;
    double diameter_after = 0.0;

    /// diameter_after <= d / (d + 1) * diameter_before, d the complex dimension.
    bool within_bound(double slack = 1e-12) const {
        if (dimension < 1)
            return diameter_after <= diameter_before + slack;
        const double ratio = static_cast<double>(dimension) / (dimension + 1);
        return diameter_after <= ratio * diameter_before + slack;
    }
};

/// Subdivision with every new vertex at the barycenter of its simplex.
inline GeometricSubdivision barycentric_subdivide(const GeometricComplex& g) {
    Subdivision sub = barycentric_subdivision(g.complex());
    std::map<Vertex, GeometricComplex::Point> coords;
    for (std::size_t k = 0; k < sub.vertex_origin.size(); ++k) {
        const Simplex& s = sub.vertex_origin[k];
        GeometricComplex::Point p(g.point(s[0]).size(), 0.0);
        for (Vertex v : s.vertices())
            for (std::size_t i = 0; i < p.size(); ++i)
                p[i] += g.point(v)[i];
        for (double& x : p)
            x /= static_cast<double>(s.size());
        coords.emplace(static_cast<Vertex>(k), std::move(p));
    }
    GeometricComplex out(std::move(sub.complex), std::move(coords));
    const double after = mesh_diameter(out);
    return {std::move(out), std::move(sub.vertex_origin), g.complex().dimension(), mesh_diameter(g), after};
}

} // namespace persista
