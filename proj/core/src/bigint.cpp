#include "kadj/rings/bigint.hpp"

#include <stdexcept>

#include "kadj/errors.hpp"

namespace kadj {

BigInt BigInt::from_string(const std::string& decimal) {
    std::string digits = decimal;
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    mpz_class v;
    if (digits.empty() || v.set_str(digits, 10) != 0) {
        throw std::invalid_argument("not a decimal integer: '" + decimal + "'");
    }
    return BigInt(std::move(v));
}

std::uint64_t BigInt::mod_u64(std::uint64_t p) const {
    mpz_class r;
    mpz_class modulus;
    mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
    mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), modulus.get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
    return out;
}

std::string to_string(const BigInt& x) { return x.get().get_str(); }

BigInt IntegerRing::inverse(const BigInt& a) const {
    if (!is_unit(a)) throw NotInvertible(to_string(a) + " is not a unit in Z");
    return a;
}

}  // namespace kadj
