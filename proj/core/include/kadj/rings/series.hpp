#pragma once

/**
 * @file series.hpp
 * @brief Truncated power series c_0 + c_1 z + ... + c_N z^N over a base ring.
 *
 * All series built by one SeriesRing share the truncation order N, and every
 * product discards coefficients above N. Multiplication is the classical
 * O(N^2) convolution. The only division is series_reciprocal, which needs a
 * unit constant term and otherwise bumps the division-violation counter.
 */

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/instrument.hpp"
#include "kadj/rings/concepts.hpp"

namespace kadj {

template <RingElement E>
class TruncatedSeries {
public:
    using Coefficient = E;

    /// `coeffs` must be non-empty; its length fixes the order (size - 1).
    explicit TruncatedSeries(std::vector<E> coeffs) : coeffs_(std::move(coeffs)) { assert(!coeffs_.empty()); }

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const E& operator[](std::size_t i) const { return coeffs_[i]; }
    E& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<E>& coefficients() const noexcept { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order() == b.order());
        std::vector<E> out;
        out.reserve(a.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.push_back(a.coeffs_[i] + b.coeffs_[i]);
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order() == b.order());
        std::vector<E> out;
        out.reserve(a.coeffs_.size());
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.push_back(a.coeffs_[i] - b.coeffs_[i]);
        return TruncatedSeries(std::move(out));
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        assert(a.order() == b.order());
        return TruncatedSeries(multiply_truncated(a.coeffs_, b.coeffs_, a.coeffs_.size()));
    }

    TruncatedSeries operator-() const {
        std::vector<E> out;
        out.reserve(coeffs_.size());
        for (const E& c : coeffs_) out.push_back(-c);
        return TruncatedSeries(std::move(out));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
    TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
    TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

    /// First `len` coefficients of a*b; inputs shorter than `len` are
    /// treated as zero-padded. Both inputs must be non-empty.
    static std::vector<E> multiply_truncated(const std::vector<E>& a, const std::vector<E>& b, std::size_t len) {
        const E zero = a.front() - a.front();
        std::vector<E> out(len, zero);
        for (std::size_t i = 0; i < std::min(len, a.size()); ++i) {
            if (a[i] == zero) continue;
            for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

private:
    std::vector<E> coeffs_;
};

template <class T>
struct is_truncated_series : std::false_type {};
template <class E>
struct is_truncated_series<TruncatedSeries<E>> : std::true_type {};
template <class T>
inline constexpr bool is_truncated_series_v = is_truncated_series<T>::value;

template <CommutativeRing Base>
class SeriesRing {
public:
    using BaseRing = Base;
    using Coefficient = ElementOf<Base>;
    using Element = TruncatedSeries<Coefficient>;

    SeriesRing(Base base, std::size_t order) : base_(std::move(base)), order_(order) {}

    const Base& base() const noexcept { return base_; }
    std::size_t order() const noexcept { return order_; }

    Element zero() const { return Element(std::vector<Coefficient>(order_ + 1, base_.zero())); }
    Element one() const { return constant(base_.one()); }
    Element from_int(std::int64_t k) const { return constant(base_.from_int(k)); }

    Element constant(const Coefficient& c) const {
        std::vector<Coefficient> coeffs(order_ + 1, base_.zero());
        coeffs[0] = c;
        return Element(std::move(coeffs));
    }

    /// Zero-pads or rejects; `coeffs.size()` must not exceed order + 1.
    Element from_coefficients(std::vector<Coefficient> coeffs) const {
        if (coeffs.size() > order_ + 1) throw IndexOutOfRange("series has more coefficients than the truncation order allows");
        coeffs.resize(order_ + 1, base_.zero());
        return Element(std::move(coeffs));
    }

    /// The series z (zero when the order is 0).
    Element variable() const {
        Element x = zero();
        if (order_ >= 1) x[1] = base_.one();
        return x;
    }

    bool is_zero(const Element& a) const {
        return std::all_of(a.coefficients().begin(), a.coefficients().end(),
                           [&](const Coefficient& c) { return base_.is_zero(c); });
    }

    bool is_unit(const Element& a) const { return base_.is_unit(a[0]); }

    Element inverse(const Element& a) const;

    std::string name() const { return base_.name() + "[[z]]/z^" + std::to_string(order_ + 1); }

private:
    Base base_;
    std::size_t order_;
};

/// Newton iteration r <- r(2 - a r), doubling the number of correct
/// coefficients per step. Only c_0 is inverted in the base ring.
template <CommutativeRing Base>
TruncatedSeries<ElementOf<Base>> series_reciprocal(const SeriesRing<Base>& ring, const TruncatedSeries<ElementOf<Base>>& a) {
    using C = ElementOf<Base>;
    using S = TruncatedSeries<C>;
    const Base& base = ring.base();
    if (!base.is_unit(a[0])) {
        record_division_violation();
        throw NonUnitConstantTerm("series reciprocal: constant term " + to_string(a[0]) + " is not a unit");
    }
    const std::size_t len = a.order() + 1;
    std::vector<C> r{base.inverse(a[0])};
    const C two = base.from_int(2);
    std::size_t prec = 1;
    while (prec < len) {
        prec = std::min(2 * prec, len);
        std::vector<C> ar = S::multiply_truncated(a.coefficients(), r, prec);
        for (std::size_t i = 0; i < prec; ++i) ar[i] = -ar[i];
        ar[0] += two;
        r = S::multiply_truncated(r, ar, prec);
    }
    return S(std::move(r));
}

template <CommutativeRing Base>
typename SeriesRing<Base>::Element SeriesRing<Base>::inverse(const Element& a) const {
    return series_reciprocal(*this, a);
}

/// c_0 + c_1 + ... + c_N.
template <RingElement E>
E series_eval_at_one(const TruncatedSeries<E>& a) {
    E sum = a[0];
    for (std::size_t i = 1; i <= a.order(); ++i) sum += a[i];
    return sum;
}

/// Collapses c_0..c_m into their sum at degree m, zeroing lower degrees.
/// The value at z = 1 is preserved.
template <RingElement E>
TruncatedSeries<E> partial_evaluate(const TruncatedSeries<E>& a, std::size_t m) {
    if (m > a.order()) {
        throw IndexOutOfRange("partial_evaluate: index " + std::to_string(m) + " exceeds order " + std::to_string(a.order()));
    }
    if (m == 0) return a;
    std::vector<E> coeffs = a.coefficients();
    const E zero = coeffs[0] - coeffs[0];
    E sum = coeffs[0];
    for (std::size_t i = 1; i <= m; ++i) sum += coeffs[i];
    for (std::size_t i = 0; i < m; ++i) coeffs[i] = zero;
    coeffs[m] = sum;
    return TruncatedSeries<E>(std::move(coeffs));
}

/// Index of the highest nonzero coefficient (0 for the zero series).
template <RingElement E>
std::size_t series_degree(const TruncatedSeries<E>& a) {
    const E zero = a[0] - a[0];
    for (std::size_t i = a.order(); i > 0; --i) {
        if (!(a[i] == zero)) return i;
    }
    return 0;
}

/// Polynomial degree of an element as seen by product logging: the series
/// degree for series, 0 for scalars.
template <RingElement E>
std::size_t poly_degree(const E& x) {
    if constexpr (is_truncated_series_v<E>) {
        return series_degree(x);
    } else {
        (void)x;
        return 0;
    }
}

/// Largest poly_degree among the coefficients of a series (0 for scalars).
template <RingElement E>
std::size_t coefficient_degree(const E& x) {
    if constexpr (is_truncated_series_v<E>) {
        std::size_t d = 0;
        for (const auto& c : x.coefficients()) d = std::max(d, poly_degree(c));
        return d;
    } else {
        (void)x;
        return 0;
    }
}

/// "c0:c1:...:cN"; nested series coefficients are parenthesized.
template <RingElement E>
std::string to_string(const TruncatedSeries<E>& a) {
    std::string out;
    for (std::size_t i = 0; i <= a.order(); ++i) {
        if (i) out += ':';
        if constexpr (is_truncated_series_v<E>) {
            out += '(' + to_string(a[i]) + ')';
        } else {
            out += to_string(a[i]);
        }
    }
    return out;
}

}  // namespace kadj
