#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "persista/core/errors.hpp"

namespace persista {

using Vertex = std::uint32_t;

/**
 * An abstract simplex: a nonempty set of vertex ids, stored in ascending
 * order. Ascending order is also the orientation used by the boundary map.
 *
 * Simplices compare by dimension first, then lexicographically, so an
 * ordered container of simplices lists every face before its cofaces.
 */
class Simplex {
public:
    /// Sorts the input. Throws std::invalid_argument on an empty list or a
    /// repeated vertex.
    explicit Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty())
            throw std::invalid_argument("a simplex needs at least one vertex");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw std::invalid_argument("repeated vertex in simplex");
    }

    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    std::size_t size() const noexcept { return vertices_.size(); }

    /// The face obtained by deleting the vertex at position i. Requires dimension() >= 1.
    Simplex face(std::size_t i) const {
        std::vector<Vertex> v;
        v.reserve(vertices_.size() - 1);
        for (std::size_t k = 0; k < vertices_.size(); ++k)
            if (k != i)
                v.push_back(vertices_[k]);
        return Simplex(sorted_tag{}, std::move(v));
    }

    /// Codimension-one faces in deletion order (vertex 0 removed first).
    std::vector<Simplex> facets() const {
        std::vector<Simplex> out;
        if (dimension() == 0)
            return out;
        out.reserve(vertices_.size());
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            out.push_back(face(i));
        return out;
    }

    /// All nonempty proper faces.
    std::vector<Simplex> proper_faces() const {
        std::vector<Simplex> out;
        const std::size_t n = vertices_.size();
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t mask = 1; mask < full; ++mask) {
            std::vector<Vertex> v;
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::uint64_t{1} << k))
                    v.push_back(vertices_[k]);
            out.push_back(Simplex(sorted_tag{}, std::move(v)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_face_of(const Simplex& other) const {
        return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
    }

    std::strong_ordering operator<=>(const Simplex& other) const {
        if (auto c = vertices_.size() <=> other.vertices_.size(); c != 0)
            return c;
        return vertices_ <=> other.vertices_;
    }
    bool operator==(const Simplex& other) const = default;

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(vertices_[i]);
        }
        return s + "]";
    }

private:
    struct sorted_tag {};
    Simplex(sorted_tag, std::vector<Vertex> v) : vertices_(std::move(v)) {}

    std::vector<Vertex> vertices_;
};

inline std::ostream& operator<<(std::ostream& os, const Simplex& s) { return os << s.to_string(); }

/// A finite set of simplices. Face closure is not enforced on insertion;
/// use validate_complex() or SimplicialComplex::closure().
class SimplicialComplex {
public:
    using container = std::set<Simplex>;
    using const_iterator = container::const_iterator;

    SimplicialComplex() = default;
    SimplicialComplex(std::initializer_list<Simplex> simplices) : simplices_(simplices) {}
    explicit SimplicialComplex(container simplices) : simplices_(std::move(simplices)) {}

    /// Smallest complex containing every given simplex.
    template <class Range>
    static SimplicialComplex closure(const Range& generators) {
        SimplicialComplex c;
        for (const Simplex& s : generators)
            c.insert_with_faces(s);
        return c;
    }

    void insert(const Simplex& s) { simplices_.insert(s); }

    void insert_with_faces(const Simplex& s) {
        if (simplices_.contains(s))
            return;
        simplices_.insert(s);
        for (const Simplex& f : s.proper_faces())
            simplices_.insert(f);
    }

    bool contains(const Simplex& s) const { return simplices_.contains(s); }
    std::size_t size() const noexcept { return simplices_.size(); }
    bool empty() const noexcept { return simplices_.empty(); }
    const_iterator begin() const noexcept { return simplices_.begin(); }
    const_iterator end() const noexcept { return simplices_.end(); }
    const container& simplices() const noexcept { return simplices_; }

    /// -1 for the empty complex.
    int dimension() const noexcept { return simplices_.empty() ? -1 : simplices_.rbegin()->dimension(); }

    std::vector<Simplex> simplices_of_dimension(int d) const {
        std::vector<Simplex> out;
        for (const Simplex& s : simplices_)
            if (s.dimension() == d)
                out.push_back(s);
        return out;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (const Simplex& s : simplices_)
            for (Vertex v : s.vertices())
                out.push_back(v);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Simplices not a proper face of any other member.
    std::vector<Simplex> maximal_simplices() const {
        std::set<Simplex> covered;
        for (const Simplex& s : simplices_)
            for (const Simplex& f : s.facets())
                covered.insert(f);
        std::vector<Simplex> out;
        for (const Simplex& s : simplices_)
            if (!covered.contains(s))
                out.push_back(s);
        return out;
    }

    bool is_subcomplex_of(const SimplicialComplex& other) const {
        return std::includes(other.simplices_.begin(), other.simplices_.end(), simplices_.begin(), simplices_.end());
    }

    SimplicialComplex united_with(const SimplicialComplex& other) const {
        container u = simplices_;
        u.insert(other.simplices_.begin(), other.simplices_.end());
        return SimplicialComplex(std::move(u));
    }

    SimplicialComplex intersected_with(const SimplicialComplex& other) const {
        container out;
        std::set_intersection(simplices_.begin(), simplices_.end(), other.simplices_.begin(), other.simplices_.end(),
                              std::inserter(out, out.end()));
        return SimplicialComplex(std::move(out));
    }

    /// Counts per dimension 0..dimension().
    std::vector<std::size_t> f_vector() const {
        std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
        for (const Simplex& s : simplices_)
            ++f[static_cast<std::size_t>(s.dimension())];
        return f;
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    container simplices_;
};

struct MissingFace {
    Simplex face;
    Simplex parent;
};

struct ComplexReport {
    std::vector<MissingFace> missing;
    bool ok() const noexcept { return missing.empty(); }
};

/// Reports every missing codimension-one face together with the simplex that
/// needs it. Checking facets is enough: closure under facets implies closure
/// under all faces, and every gap surfaces at some level.
inline ComplexReport validate_complex(const SimplicialComplex& c) {
    ComplexReport report;
    std::set<Simplex> reported;
    for (const Simplex& s : c) {
        for (const Simplex& f : s.proper_faces()) {
            if (!c.contains(f) && reported.insert(f).second)
                report.missing.push_back({f, s});
        }
    }
    return report;
}

/// A complex with coordinates for each vertex, all in the same R^m.
class GeometricComplex {
public:
    using Point = std::vector<double>;

    GeometricComplex(SimplicialComplex complex, std::map<Vertex, Point> coords)
        : complex_(std::move(complex)), coords_(std::move(coords)) {
        std::size_t m = 0;
        for (const auto& [v, p] : coords_) {
            if (p.empty())
                throw ValidationError("vertex " + std::to_string(v) + " has an empty coordinate tuple");
            if (m == 0)
                m = p.size();
            else if (p.size() != m)
                throw ValidationError("vertex " + std::to_string(v) + " has a coordinate tuple of the wrong length");
        }
        for (Vertex v : complex_.vertices())
            if (!coords_.contains(v))
                throw ValidationError("vertex " + std::to_string(v) + " has no coordinates");
    }

    const SimplicialComplex& complex() const noexcept { return complex_; }
    const std::map<Vertex, Point>& coords() const noexcept { return coords_; }
    const Point& point(Vertex v) const { return coords_.at(v); }

private:
    SimplicialComplex complex_;
    std::map<Vertex, Point> coords_;
};

} // namespace persista
