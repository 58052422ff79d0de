#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <vector>

#include "persista/core/simplex.hpp"

namespace persista {

/// Vertex classes of a complex, each sorted, ordered by least vertex.
struct Components {
    std::vector<std::vector<Vertex>> classes;
    std::size_t count() const noexcept { return classes.size(); }
};

inline Components connected_components(const SimplicialComplex& c) {
    const std::vector<Vertex> verts = c.vertices();
    std::map<Vertex, std::size_t> pos;
    for (std::size_t i = 0; i < verts.size(); ++i)
        pos[verts[i]] = i;

    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    // Every simplex of dimension >= 1 links its vertices; edges suffice in a
    // closed complex but this also handles unclosed input sensibly.
    for (const Simplex& s : c) {
        if (s.dimension() < 1)
            continue;
        const std::size_t root = find(pos[s[0]]);
        for (std::size_t k = 1; k < s.size(); ++k) {
            const std::size_t r = find(pos[s[k]]);
            if (r != root)
                parent[std::max(r, root)] = std::min(r, root);
        }
    }

    std::map<std::size_t, std::vector<Vertex>> groups;
    for (std::size_t i = 0; i < verts.size(); ++i)
        groups[find(i)].push_back(verts[i]);
    Components out;
    for (auto& [root, vs] : groups)
        out.classes.push_back(std::move(vs));
    std::sort(out.classes.begin(), out.classes.end());
    return out;
}

/// The subcomplexes spanned by each component, in Components order.
inline std::vector<SimplicialComplex> component_subcomplexes(const SimplicialComplex& c) {
    const Components comps = connected_components(c);
    std::map<Vertex, std::size_t> which;
    for (std::size_t k = 0; k < comps.classes.size(); ++k)
        for (Vertex v : comps.classes[k])
            which[v] = k;
    std::vector<SimplicialComplex> out(comps.count());
    for (const Simplex& s : c)
        out[which[s[0]]].insert(s);
    return out;
}

} // namespace persista
