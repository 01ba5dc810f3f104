#pragma once

/**
 * @file random.hpp
 * @brief Seeded sampling of ring elements, vectors and matrices.
 *
 * The generator is std::mt19937_64 and integers in [0, bound) are taken as
 * `engine() % bound`, so a given seed yields the same draws on every
 * platform and standard library.
 */

#include <cstdint>
#include <random>

#include "kadj/linalg/matrix.hpp"
#include "kadj/rings.hpp"

namespace kadj {

inline constexpr const char* kRngName = "mt19937_64";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform-ish in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
    /// In [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

inline PrimeField random_element(const PrimeFieldRing& ring, Rng& rng) { return ring.from_unsigned(rng.below(ring.modulus())); }

inline Matrix<PrimeField> random_matrix(const PrimeFieldRing& ring, std::size_t rows, std::size_t cols, Rng& rng) {
    std::vector<PrimeField> data;
    data.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) data.push_back(random_element(ring, rng));
    return Matrix<PrimeField>(rows, cols, std::move(data));
}

inline Matrix<BigInt> random_int_matrix(std::size_t rows, std::size_t cols, std::int64_t lo, std::int64_t hi, Rng& rng) {
    std::vector<BigInt> data;
    data.reserve(rows * cols);
    for (std::size_t k = 0; k < rows * cols; ++k) data.emplace_back(rng.between(lo, hi));
    return Matrix<BigInt>(rows, cols, std::move(data));
}

inline RowVector<PrimeField> random_row(const PrimeFieldRing& ring, std::size_t n, Rng& rng) {
    RowVector<PrimeField> r;
    for (std::size_t k = 0; k < n; ++k) r.entries.push_back(random_element(ring, rng));
    return r;
}

inline ColVector<PrimeField> random_col(const PrimeFieldRing& ring, std::size_t n, Rng& rng) {
    ColVector<PrimeField> c;
    for (std::size_t k = 0; k < n; ++k) c.entries.push_back(random_element(ring, rng));
    return c;
}

}  // namespace kadj
