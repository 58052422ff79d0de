#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "persista/core/chain.hpp"
#include "persista/core/errors.hpp"
#include "persista/core/simplex.hpp"

namespace persista {

using CellId = std::size_t;
using CellChain = Chain<CellId>;

/// One step of a filtration: a cell with its birth value and its boundary
/// written over earlier cells with integer coefficients.
struct Cell {
    CellId id = 0;
    int dim = 0;
    double birth = 0.0;
    CellChain boundary;

    bool operator==(const Cell&) const = default;
};

/**
 * A finite cell-at-a-time filtration. Construction validates:
 *  - ids are 0..n in order, births finite and non-decreasing;
 *  - boundaries reference earlier cells of dimension dim - 1;
 *  - the boundary of the boundary vanishes over Z.
 *
 * Filtrations built from simplicial complexes also carry the simplex behind
 * each cell (labels()); CW filtrations have no labels.
 */
class Filtration {
public:
    Filtration() = default;

    explicit Filtration(std::vector<Cell> cells, std::vector<Simplex> labels = {})
        : cells_(std::move(cells)), labels_(std::move(labels)) {
        if (!labels_.empty() && labels_.size() != cells_.size())
            throw ValidationError("label count does not match cell count");
        if (auto problems = check(cells_); !problems.empty())
            throw ValidationError(problems.front());
    }

    /// Every violated invariant, in cell order. Empty means valid.
    static std::vector<std::string> check(const std::vector<Cell>& cells) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const Cell& c = cells[i];
            const std::string at = " at cell " + std::to_string(i);
            if (c.id != i)
                out.push_back("cell id " + std::to_string(c.id) + " out of order" + at);
            if (c.dim < 0)
                out.push_back("negative dimension" + at);
            if (!std::isfinite(c.birth))
                out.push_back("non-finite birth" + at);
            else if (i > 0 && std::isfinite(cells[i - 1].birth) && c.birth < cells[i - 1].birth)
                out.push_back("non-monotone birth" + at);
            if (c.dim == 0 && !c.boundary.empty())
                out.push_back("vertex with nonempty boundary" + at);
            bool refs_ok = true;
            for (const auto& [face, coeff] : c.boundary) {
                if (face >= i) {
                    out.push_back("forward reference to cell " + std::to_string(face) + at);
                    refs_ok = false;
                } else if (cells[face].dim != c.dim - 1) {
                    out.push_back("face " + std::to_string(face) + " has wrong dimension" + at);
                    refs_ok = false;
                }
            }
            if (refs_ok && !boundary_squared(cells, c).empty())
                out.push_back("boundary squared nonzero" + at);
        }
        return out;
    }

    std::size_t size() const noexcept { return cells_.size(); }
    bool empty() const noexcept { return cells_.empty(); }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    const Cell& operator[](std::size_t i) const { return cells_[i]; }
    const std::vector<Simplex>& labels() const noexcept { return labels_; }
    bool is_simplicial() const noexcept { return !labels_.empty() || cells_.empty(); }

    /// -1 when empty.
    int max_dimension() const noexcept {
        int d = -1;
        for (const Cell& c : cells_)
            d = std::max(d, c.dim);
        return d;
    }

    /// Equality ignores labels: two filtrations are equal when their cells are.
    bool operator==(const Filtration& other) const { return cells_ == other.cells_; }

private:
    static CellChain boundary_squared(const std::vector<Cell>& cells, const Cell& c) {
        CellChain out;
        for (const auto& [face, coeff] : c.boundary)
            out += cells[face].boundary.scaled(coeff);
        return out;
    }

    std::vector<Cell> cells_;
    std::vector<Simplex> labels_;
};

/// Canonical filtration order: (birth, dimension, lexicographic vertices).
/// Boundaries are the simplicial boundary re-indexed into filtration ids.
inline Filtration filtration_from_simplices(std::vector<std::pair<Simplex, double>> simplices) {
    std::sort(simplices.begin(), simplices.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second)
            return a.second < b.second;
        return a.first < b.first;
    });
    std::map<Simplex, CellId> index;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (!index.emplace(simplices[i].first, i).second)
            throw ValidationError("duplicate simplex " + simplices[i].first.to_string());

    std::vector<Cell> cells;
    std::vector<Simplex> labels;
    cells.reserve(simplices.size());
    labels.reserve(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        const auto& [s, birth] = simplices[i];
        Cell cell{i, s.dimension(), birth, {}};
        for (const auto& [face, coeff] : simplicial_boundary(s)) {
            auto it = index.find(face);
            if (it == index.end())
                throw ValidationError("face " + face.to_string() + " of " + s.to_string() + " is missing");
            if (it->second > i)
                throw MonotonicityError("face " + face.to_string() + " (birth " + std::to_string(simplices[it->second].second) +
                                        ") is born after coface " + s.to_string() + " (birth " + std::to_string(birth) + ")");
            cell.boundary.add_term(it->second, coeff);
        }
        cells.push_back(std::move(cell));
        labels.push_back(s);
    }
    return Filtration(std::move(cells), std::move(labels));
}

/// `birth` is any callable Simplex -> double. Throws MonotonicityError naming
/// the first face/coface pair whose births are out of order.
template <class BirthFn>
    requires std::is_invocable_r_v<double, BirthFn, const Simplex&>
Filtration filtration_from_complex(const SimplicialComplex& c, BirthFn&& birth) {
    std::vector<std::pair<Simplex, double>> items;
    items.reserve(c.size());
    std::map<Simplex, double> births;
    for (const Simplex& s : c) {
        const double b = birth(s);
        if (!std::isfinite(b))
            throw ValidationError("non-finite birth for " + s.to_string());
        births.emplace(s, b);
        items.emplace_back(s, b);
    }
    for (const Simplex& s : c) {
        for (const Simplex& f : s.facets()) {
            auto it = births.find(f);
            if (it == births.end())
                throw ValidationError("face " + f.to_string() + " of " + s.to_string() + " is missing");
            if (it->second > births.at(s))
                throw MonotonicityError("face " + f.to_string() + " (birth " + std::to_string(it->second) +
                                        ") is born after coface " + s.to_string() + " (birth " +
                                        std::to_string(births.at(s)) + ")");
        }
    }
    return filtration_from_simplices(std::move(items));
}

inline Filtration filtration_from_complex(const SimplicialComplex& c, const std::map<Simplex, double>& birth) {
    return filtration_from_complex(c, [&](const Simplex& s) {
        auto it = birth.find(s);
        if (it == birth.end())
            throw ValidationError("no birth value for " + s.to_string());
        return it->second;
    });
}

} // namespace persista
