#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace codewidth {

/// Arithmetic in a prime field GF(p), 2 <= p < 2^16.
/// Element values are canonical representatives in [0, p).
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 16))
            throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) +
                                        " outside supported range [2, 65536)");
        if (!is_prime(p))
            throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }

    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p_);
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// Multiplicative inverse of a nonzero element (Fermat).
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::invalid_argument("PrimeField: zero has no inverse");
        return pow(a, p_ - 2);
    }

    bool operator==(const PrimeField& other) const = default;

    static bool is_prime(std::uint32_t v) {
        if (v < 2) return false;
        for (std::uint32_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }

private:
    std::uint32_t p_;
};

}  // namespace codewidth
