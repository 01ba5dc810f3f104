#pragma once

/**
 * @file bigint.hpp
 * @brief Arbitrary-precision integers (GMP-backed) and the ring Z.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

namespace kadj {

class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    explicit BigInt(mpz_class v) : value_(std::move(v)) {}

    /// Parses a decimal string with optional sign. Throws std::invalid_argument.
    static BigInt from_string(const std::string& decimal);

    const mpz_class& get() const noexcept { return value_; }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ + b.value_)); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ - b.value_)); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) { return BigInt(mpz_class(a.value_ * b.value_)); }
    BigInt operator-() const { return BigInt(mpz_class(-value_)); }

    BigInt& operator+=(const BigInt& b) {
        value_ += b.value_;
        return *this;
    }
    BigInt& operator-=(const BigInt& b) {
        value_ -= b.value_;
        return *this;
    }
    BigInt& operator*=(const BigInt& b) {
        value_ *= b.value_;
        return *this;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return a.value_ == b.value_; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return a.value_ < b.value_; }

    int sign() const noexcept { return sgn(value_); }

    /// Residue in [0, p).
    std::uint64_t mod_u64(std::uint64_t p) const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.value_.get_str(); }

private:
    mpz_class value_;
};

std::string to_string(const BigInt& x);

class IntegerRing {
public:
    using Element = BigInt;

    BigInt zero() const { return BigInt(0); }
    BigInt one() const { return BigInt(1); }
    BigInt from_int(std::int64_t k) const { return BigInt(k); }
    bool is_zero(const BigInt& a) const { return a.sign() == 0; }
    /// Units of Z are +1 and -1.
    bool is_unit(const BigInt& a) const { return a == BigInt(1) || a == BigInt(-1); }
    BigInt inverse(const BigInt& a) const;
    std::string name() const { return "int"; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

}  // namespace kadj
