#pragma once

#include <cstdint>
#include <string>

#include "persista/core/errors.hpp"

namespace persista {

using FieldElement = std::uint32_t;

/// Integers modulo a prime p < 2^31. Elements are residues 0..p-1.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (std::uint32_t{1} << 31) || !is_prime(p))
            throw NotPrimeError(std::to_string(p) + " is not a prime below 2^31");
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2)
            return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    std::uint32_t characteristic() const noexcept { return p_; }

    FieldElement reduce(std::int64_t a) const noexcept {
        std::int64_t r = a % static_cast<std::int64_t>(p_);
        if (r < 0)
            r += p_;
        return static_cast<FieldElement>(r);
    }

    FieldElement add(FieldElement a, FieldElement b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<FieldElement>(s >= p_ ? s - p_ : s);
    }
    FieldElement neg(FieldElement a) const noexcept { return a == 0 ? 0 : p_ - a; }
    FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
    FieldElement mul(FieldElement a, FieldElement b) const noexcept {
        return static_cast<FieldElement>(std::uint64_t{a} * b % p_);
    }

    /// Extended Euclid. Throws DivisionByZero for a == 0.
    FieldElement inv(FieldElement a) const {
        a %= p_;
        if (a == 0)
            throw DivisionByZero();
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = p_, new_r = a;
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = t - q * new_t;
            std::swap(t, new_t);
            r = r - q * new_r;
            std::swap(r, new_r);
        }
        return reduce(t);
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

inline FieldElement field_inverse(FieldElement a, const PrimeField& f) { return f.inv(a); }

} // namespace persista
