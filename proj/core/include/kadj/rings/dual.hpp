#pragma once

/**
 * @file dual.hpp
 * @brief Dual numbers a + b*eps with eps^2 = 0.
 *
 * Used as a forward-mode differentiation oracle: running any ring
 * computation on x + eps yields f(x) + f'(x) eps.
 */

#include <string>

#include "kadj/errors.hpp"
#include "kadj/rings/concepts.hpp"

namespace kadj {

template <RingElement E>
class DualNumber {
public:
    DualNumber(E real, E eps) : real_(std::move(real)), eps_(std::move(eps)) {}

    const E& real() const noexcept { return real_; }
    const E& eps() const noexcept { return eps_; }

    friend DualNumber operator+(const DualNumber& a, const DualNumber& b) { return {a.real_ + b.real_, a.eps_ + b.eps_}; }
    friend DualNumber operator-(const DualNumber& a, const DualNumber& b) { return {a.real_ - b.real_, a.eps_ - b.eps_}; }
    friend DualNumber operator*(const DualNumber& a, const DualNumber& b) {
        return {a.real_ * b.real_, a.real_ * b.eps_ + a.eps_ * b.real_};
    }
    DualNumber operator-() const { return {-real_, -eps_}; }

    DualNumber& operator+=(const DualNumber& b) { return *this = *this + b; }
    DualNumber& operator-=(const DualNumber& b) { return *this = *this - b; }
    DualNumber& operator*=(const DualNumber& b) { return *this = *this * b; }

    friend bool operator==(const DualNumber& a, const DualNumber& b) { return a.real_ == b.real_ && a.eps_ == b.eps_; }

private:
    E real_;
    E eps_;
};

template <RingElement E>
std::string to_string(const DualNumber<E>& x) {
    return to_string(x.real()) + "+" + to_string(x.eps()) + "e";
}

template <CommutativeRing Base>
class DualRing {
public:
    using BaseRing = Base;
    using Element = DualNumber<ElementOf<Base>>;

    explicit DualRing(Base base) : base_(std::move(base)) {}

    const Base& base() const noexcept { return base_; }

    Element zero() const { return {base_.zero(), base_.zero()}; }
    Element one() const { return {base_.one(), base_.zero()}; }
    Element from_int(std::int64_t k) const { return {base_.from_int(k), base_.zero()}; }

    Element lift(const ElementOf<Base>& a) const { return {a, base_.zero()}; }
    /// a + eps
    Element variable(const ElementOf<Base>& a) const { return {a, base_.one()}; }

    bool is_zero(const Element& a) const { return base_.is_zero(a.real()) && base_.is_zero(a.eps()); }
    bool is_unit(const Element& a) const { return base_.is_unit(a.real()); }

    /// (a + b eps)^-1 = a^-1 - b a^-2 eps.
    Element inverse(const Element& a) const {
        if (!is_unit(a)) throw NotInvertible("dual number with non-unit real part");
        const auto ai = base_.inverse(a.real());
        return {ai, -(a.eps() * ai * ai)};
    }

    std::string name() const { return base_.name() + "[eps]"; }

private:
    Base base_;
};

}  // namespace kadj
