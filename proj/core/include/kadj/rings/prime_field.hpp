#pragma once

/**
 * @file prime_field.hpp
 * @brief GF(p) for an odd prime p below 2^63.
 *
 * Products use a 128-bit intermediate and a single reduction.
 */

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

#include "kadj/errors.hpp"

namespace kadj {

#if !defined(__SIZEOF_INT128__)
#error "kadj requires unsigned __int128 (GCC/Clang)"
#endif

__extension__ using uint128 = unsigned __int128;

/// Element of GF(p). Always fully reduced: 0 <= value < modulus.
class PrimeField {
public:
    PrimeField() = default;

    /// `value` must already be reduced.
    PrimeField(std::uint64_t value, std::uint64_t modulus) noexcept : value_(value), modulus_(modulus) {
        assert(value < modulus);
    }

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    friend PrimeField operator+(const PrimeField& a, const PrimeField& b) noexcept {
        assert(a.modulus_ == b.modulus_);
        std::uint64_t s = a.value_ + b.value_;
        if (s >= a.modulus_) s -= a.modulus_;
        return {s, a.modulus_};
    }

    friend PrimeField operator-(const PrimeField& a, const PrimeField& b) noexcept {
        assert(a.modulus_ == b.modulus_);
        return {a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + (a.modulus_ - b.value_), a.modulus_};
    }

    friend PrimeField operator*(const PrimeField& a, const PrimeField& b) noexcept {
        assert(a.modulus_ == b.modulus_);
        const uint128 prod = static_cast<uint128>(a.value_) * b.value_;
        return {static_cast<std::uint64_t>(prod % a.modulus_), a.modulus_};
    }

    PrimeField operator-() const noexcept { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

    PrimeField& operator+=(const PrimeField& b) noexcept { return *this = *this + b; }
    PrimeField& operator-=(const PrimeField& b) noexcept { return *this = *this - b; }
    PrimeField& operator*=(const PrimeField& b) noexcept { return *this = *this * b; }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

    friend std::ostream& operator<<(std::ostream& os, const PrimeField& x) { return os << x.value_; }

private:
    std::uint64_t value_ = 0;
    std::uint64_t modulus_ = 1;
};

std::string to_string(const PrimeField& x);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) noexcept;

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) noexcept;

class PrimeFieldRing {
public:
    using Element = PrimeField;

    /// Throws InvalidModulus unless `p` is an odd prime below 2^63.
    explicit PrimeFieldRing(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }

    PrimeField zero() const noexcept { return {0, p_}; }
    PrimeField one() const noexcept { return {1, p_}; }

    /// Reduces any signed integer into [0, p).
    PrimeField from_int(std::int64_t k) const noexcept {
        const auto p = static_cast<std::int64_t>(p_);
        std::int64_t r = k % p;
        if (r < 0) r += p;
        return {static_cast<std::uint64_t>(r), p_};
    }

    PrimeField from_unsigned(std::uint64_t k) const noexcept { return {k % p_, p_}; }

    bool is_zero(const PrimeField& a) const noexcept { return a.value() == 0; }
    bool is_unit(const PrimeField& a) const noexcept { return a.value() != 0; }

    /// Throws NotInvertible on zero.
    PrimeField inverse(const PrimeField& a) const;

    std::string name() const { return "gf:" + std::to_string(p_); }

    friend bool operator==(const PrimeFieldRing&, const PrimeFieldRing&) = default;

private:
    std::uint64_t p_;
};

}  // namespace kadj
