#include "kadj/rings/prime_field.hpp"

#include <array>

namespace kadj {

std::string to_string(const PrimeField& x) { return std::to_string(x.value()); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) noexcept {
    using u128 = uint128;
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1U) result = static_cast<std::uint64_t>(static_cast<u128>(result) * base % modulus);
        base = static_cast<std::uint64_t>(static_cast<u128>(base) * base % modulus);
        exponent >>= 1U;
    }
    return result;
}

bool is_prime_u64(std::uint64_t n) noexcept {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> kBases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (std::uint64_t q : kBases) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (std::uint64_t a : kBases) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = static_cast<std::uint64_t>(static_cast<uint128>(x) * x % n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeFieldRing::PrimeFieldRing(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime_u64(p)) {
        throw InvalidModulus("modulus " + std::to_string(p) + " is not an odd prime below 2^63");
    }
}

PrimeField PrimeFieldRing::inverse(const PrimeField& a) const {
    if (a.value() == 0) throw NotInvertible("zero has no inverse in " + name());
    return {pow_mod(a.value(), p_ - 2, p_), p_};
}

}  // namespace kadj
