#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <vector>

#include "kadj/linalg/matrix.hpp"
#include "kadj/rings.hpp"
#include "kadj/verify.hpp"

namespace kadj::testing {

using Ints = std::vector<std::vector<std::int64_t>>;

inline PrimeFieldRing gf(std::uint64_t p) { return PrimeFieldRing(p); }

template <CommutativeRing R>
Matrix<ElementOf<R>> mat(const R& ring, const Ints& rows) {
    return Matrix<ElementOf<R>>::from_ints(ring, rows);
}

inline Matrix<BigInt> imat(const Ints& rows) { return Matrix<BigInt>::from_ints(IntegerRing{}, rows); }

template <CommutativeRing R>
std::vector<ElementOf<R>> elems(const R& ring, const std::vector<std::int64_t>& xs) {
    std::vector<ElementOf<R>> out;
    for (auto x : xs) out.push_back(ring.from_int(x));
    return out;
}

template <CommutativeRing R>
ColVector<ElementOf<R>> col(const R& ring, const std::vector<std::int64_t>& xs) {
    return {elems(ring, xs)};
}

template <CommutativeRing R>
RowVector<ElementOf<R>> row(const R& ring, const std::vector<std::int64_t>& xs) {
    return {elems(ring, xs)};
}

inline void expect_passed(const verify::Report& report) {
    ASSERT_FALSE(report.empty());
    for (const auto& r : report) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

}  // namespace kadj::testing
