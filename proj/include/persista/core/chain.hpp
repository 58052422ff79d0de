#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "persista/core/checked.hpp"
#include "persista/core/simplex.hpp"

namespace persista {

/**
 * A formal integer combination of generators (simplices or cell ids).
 * Zero coefficients are never stored, so two chains are equal exactly when
 * their term maps are equal. Arithmetic is overflow-checked.
 */
template <class Key>
class Chain {
public:
    using map_type = std::map<Key, std::int64_t>;
    using const_iterator = typename map_type::const_iterator;

    Chain() = default;
    Chain(std::initializer_list<std::pair<const Key, std::int64_t>> terms) {
        for (const auto& [k, c] : terms)
            add_term(k, c);
    }

    void add_term(const Key& k, std::int64_t c) {
        if (c == 0)
            return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second = checked::add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }

    std::int64_t coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? 0 : it->second;
    }

    Chain& operator+=(const Chain& other) {
        for (const auto& [k, c] : other.terms_)
            add_term(k, c);
        return *this;
    }
    Chain& operator-=(const Chain& other) {
        for (const auto& [k, c] : other.terms_)
            add_term(k, checked::neg(c));
        return *this;
    }
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
    Chain operator-() const { return Chain{} - *this; }

    Chain scaled(std::int64_t s) const {
        Chain out;
        if (s == 0)
            return out;
        for (const auto& [k, c] : terms_)
            out.terms_.emplace(k, checked::mul(c, s));
        return out;
    }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const_iterator begin() const noexcept { return terms_.begin(); }
    const_iterator end() const noexcept { return terms_.end(); }
    const map_type& terms() const noexcept { return terms_; }

    bool operator==(const Chain&) const = default;

private:
    map_type terms_;
};

using SimplexChain = Chain<Simplex>;

/// Alternating sum of facets: sum_i (-1)^i [v0..^vi..vd]. Zero for a vertex.
inline SimplexChain simplicial_boundary(const Simplex& s) {
    SimplexChain out;
    if (s.dimension() == 0)
        return out;
    for (std::size_t i = 0; i < s.size(); ++i)
        out.add_term(s.face(i), (i % 2 == 0) ? 1 : -1);
    return out;
}

/// Boundary extended linearly to chains.
inline SimplexChain simplicial_boundary(const SimplexChain& c) {
    SimplexChain out;
    for (const auto& [s, coeff] : c)
        out += simplicial_boundary(s).scaled(coeff);
    return out;
}

} // namespace persista
