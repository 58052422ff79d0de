#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "persista/core/filtration.hpp"
#include "persista/core/simplex.hpp"
#include "persista/io/formats.hpp"
#include "persista/io/rips.hpp"

namespace persista::fixtures {

/**
 * The 2-sphere as a CW filtration with two cells per dimension:
 * vertices 0, 1; edges 2, 3 with boundary s0 - s1; discs 4, 5 with boundary
 * s2 - s3. Cell i is born at i.
 */
inline const char* s2_cwf_text() {
    return "# 2-sphere: two cells in each dimension, cell i born at i\n"
           "0 0 0\n"
           "1 0 1\n"
           "2 1 2 0:1 1:-1\n"
           "3 1 3 0:1 1:-1\n"
           "4 2 4 2:1 3:-1\n"
           "5 2 5 2:1 3:-1\n";
}

inline Filtration s2() { return parse_cwf(s2_cwf_text()); }

/// Boundary of the (d+1)-simplex: a triangulated d-sphere.
inline SimplicialComplex sphere(int d) {
    std::vector<Vertex> v;
    for (int i = 0; i <= d + 1; ++i)
        v.push_back(static_cast<Vertex>(i));
    return SimplicialComplex::closure(Simplex(v).facets());
}

/// The full d-simplex with all faces.
inline SimplicialComplex full_simplex(int d) {
    std::vector<Vertex> v;
    for (int i = 0; i <= d; ++i)
        v.push_back(static_cast<Vertex>(i));
    return SimplicialComplex::closure(std::vector<Simplex>{Simplex(v)});
}

inline SimplicialComplex disjoint_points(int p) {
    SimplicialComplex c;
    for (int i = 0; i < p; ++i)
        c.insert(Simplex{static_cast<Vertex>(i)});
    return c;
}

/// Six-vertex triangulation of the real projective plane (10 triangles).
inline SimplicialComplex rp2() {
    static const int tri[10][3] = {{1, 2, 4}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                                   {2, 3, 4}, {2, 3, 5}, {2, 5, 6}, {3, 4, 6}, {4, 5, 6}};
    std::vector<Simplex> top;
    for (const auto& t : tri)
        top.push_back(Simplex{static_cast<Vertex>(t[0] - 1), static_cast<Vertex>(t[1] - 1), static_cast<Vertex>(t[2] - 1)});
    return SimplicialComplex::closure(top);
}

/// rp2() with vertices at 0, edges at 1, triangles at 2.
inline Filtration rp2_filtration() {
    return filtration_from_complex(rp2(), [](const Simplex& s) { return static_cast<double>(s.dimension()); });
}

inline PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Unit-side equilateral triangle as a geometric 2-simplex.
inline GeometricComplex equilateral_triangle() {
    return GeometricComplex(full_simplex(2), {{0, {0.0, 0.0}}, {1, {1.0, 0.0}}, {2, {0.5, std::sqrt(3.0) / 2}}});
}

} // namespace persista::fixtures
