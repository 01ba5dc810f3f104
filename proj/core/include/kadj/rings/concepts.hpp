#pragma once

/**
 * @file concepts.hpp
 * @brief The commutative-ring interface every algorithm in kadj is written against.
 *
 * A ring is described by a small value object (the "ring descriptor") which
 * knows how to build constants and how to test and invert units. Elements
 * carry enough context of their own (modulus, truncation order) to support
 * +, -, * and == without the descriptor.
 */

#include <concepts>
#include <cstdint>
#include <string>

namespace kadj {

template <class E>
concept RingElement = std::copyable<E> && requires(const E& a, const E& b) {
    { a + b } -> std::same_as<E>;
    { a - b } -> std::same_as<E>;
    { a * b } -> std::same_as<E>;
    { -a } -> std::same_as<E>;
    { a == b } -> std::convertible_to<bool>;
};

template <class R>
concept CommutativeRing = requires(const R& ring, const typename R::Element& a, std::int64_t k) {
    requires RingElement<typename R::Element>;
    { ring.zero() } -> std::same_as<typename R::Element>;
    { ring.one() } -> std::same_as<typename R::Element>;
    { ring.from_int(k) } -> std::same_as<typename R::Element>;
    { ring.is_zero(a) } -> std::convertible_to<bool>;
    { ring.is_unit(a) } -> std::convertible_to<bool>;
    { ring.inverse(a) } -> std::same_as<typename R::Element>;
    { ring.name() } -> std::convertible_to<std::string>;
};

template <CommutativeRing R>
using ElementOf = typename R::Element;

}  // namespace kadj
