#pragma once

/**
 * @file linalg.hpp
 * @brief Determinants, inverses, linear solves and the brute-force oracles.
 *
 * Elimination routines only ever divide by units of the working ring: any
 * nonzero element over a field, an element with unit constant term over a
 * series ring. The oracles (det_gauss, cofactor_det, adjugate_oracle) do not
 * depend on any Krylov or reverse-pass code.
 */

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/linalg/matrix.hpp"
#include "kadj/rings.hpp"

namespace kadj {

template <class R>
struct is_series_ring : std::false_type {};
template <class B>
struct is_series_ring<SeriesRing<B>> : std::true_type {};
template <class R>
inline constexpr bool is_series_ring_v = is_series_ring<R>::value;

namespace detail {

/// Row index in [from, n) holding a unit in column `col`, or nullopt.
/// Sets `all_zero` when the whole candidate range is zero.
template <CommutativeRing R>
std::optional<std::size_t> find_unit_pivot(const R& ring, const Matrix<ElementOf<R>>& a, std::size_t col,
                                           std::size_t from, bool& all_zero) {
    all_zero = true;
    for (std::size_t i = from; i < a.rows(); ++i) {
        if (ring.is_unit(a(i, col))) return i;
        if (!ring.is_zero(a(i, col))) all_zero = false;
    }
    return std::nullopt;
}

template <RingElement E>
void swap_rows(Matrix<E>& a, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

}  // namespace detail

/// Determinant by elimination with unit pivots, tracking row-swap signs.
/// Returns zero when a column is entirely zero; throws NoUnitPivot when a
/// column has nonzero entries but no unit (impossible over a field).
template <CommutativeRing R>
ElementOf<R> det_gauss(const R& ring, Matrix<ElementOf<R>> a) {
    using E = ElementOf<R>;
    if (!a.square()) throw DimensionMismatch("det_gauss: matrix is not square");
    const std::size_t n = a.rows();
    E det = ring.one();
    for (std::size_t k = 0; k < n; ++k) {
        bool all_zero = false;
        const auto pivot = detail::find_unit_pivot(ring, a, k, k, all_zero);
        if (!pivot) {
            if (all_zero) return ring.zero();
            throw NoUnitPivot("det_gauss: column " + std::to_string(k) + " has no unit pivot over " + ring.name());
        }
        if (*pivot != k) {
            detail::swap_rows(a, *pivot, k);
            det = -det;
        }
        const E inv = ring.inverse(a(k, k));
        det = det * a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ring.is_zero(a(i, k))) continue;
            const E factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            count_mul(n - k + 1);
        }
    }
    count_mul(n);
    return det;
}

/// Division-free determinant by Laplace expansion along rows, memoized over
/// column subsets: O(2^n n) ring operations. Valid over any commutative ring.
template <CommutativeRing R>
ElementOf<R> cofactor_det(const R& ring, const Matrix<ElementOf<R>>& a) {
    using E = ElementOf<R>;
    if (!a.square()) throw DimensionMismatch("cofactor_det: matrix is not square");
    const std::size_t n = a.rows();
    if (n == 0) return ring.one();
    if (n > 24) throw DimensionMismatch("cofactor_det: dimension " + std::to_string(n) + " too large (max 24)");
    // minor[S] = det of rows (n-|S|)..n-1 restricted to the column set S.
    std::vector<E> minor(std::size_t{1} << n, ring.zero());
    minor[0] = ring.one();
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        E acc = ring.zero();
        std::size_t position = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t{1} << j))) continue;
            E term = a(row, j) * minor[mask & ~(std::uint32_t{1} << j)];
            if (position % 2 == 0) {
                acc += term;
            } else {
                acc -= term;
            }
            ++position;
        }
        minor[mask] = std::move(acc);
    }
    return minor.back();
}

template <RingElement E>
Matrix<E> delete_row_col(const Matrix<E>& a, std::size_t row, std::size_t col) {
    std::vector<E> out;
    out.reserve((a.rows() - 1) * (a.cols() - 1));
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i == row) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j != col) out.push_back(a(i, j));
        }
    }
    return Matrix<E>(a.rows() - 1, a.cols() - 1, std::move(out));
}

/// Classical adjugate from signed minors: entry (j,i) = (-1)^(i+j) det(A
/// without row i and column j). Minors use det_gauss over fields and
/// cofactor_det over rings that are not fields (integers, series).
template <CommutativeRing R>
Matrix<ElementOf<R>> adjugate_oracle(const R& ring, const Matrix<ElementOf<R>>& a) {
    using E = ElementOf<R>;
    if (!a.square()) throw DimensionMismatch("adjugate_oracle: matrix is not square");
    const std::size_t n = a.rows();
    Matrix<E> adj(n, n, ring.zero());
    if (n == 1) {
        adj(0, 0) = ring.one();
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix<E> minor = delete_row_col(a, i, j);
            E m = ring.zero();
            if constexpr (std::is_same_v<R, PrimeFieldRing>) {
                m = det_gauss(ring, std::move(minor));
            } else {
                m = cofactor_det(ring, minor);
            }
            adj(j, i) = (i + j) % 2 == 0 ? m : -m;
        }
    }
    return adj;
}

/// Gauss-Jordan inverse with unit pivots.
template <CommutativeRing R>
Matrix<ElementOf<R>> gauss_jordan_inverse(const R& ring, Matrix<ElementOf<R>> a) {
    using E = ElementOf<R>;
    if (!a.square()) throw DimensionMismatch("mat_inverse: matrix is not square");
    const std::size_t n = a.rows();
    Matrix<E> inv = Matrix<E>::identity(ring, n);
    for (std::size_t k = 0; k < n; ++k) {
        bool all_zero = false;
        const auto pivot = detail::find_unit_pivot(ring, a, k, k, all_zero);
        if (!pivot) {
            if (all_zero) throw SingularMatrix("mat_inverse: matrix is singular over " + ring.name());
            throw NoUnitPivot("mat_inverse: column " + std::to_string(k) + " has no unit pivot over " + ring.name());
        }
        detail::swap_rows(a, *pivot, k);
        detail::swap_rows(inv, *pivot, k);
        const E p = ring.inverse(a(k, k));
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) = a(k, j) * p;
            inv(k, j) = inv(k, j) * p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || ring.is_zero(a(i, k))) continue;
            const E factor = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= factor * a(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
        count_mul(2 * n * n);
    }
    return inv;
}

/// Constant coefficients of a series matrix, as a matrix over the base ring.
template <CommutativeRing B>
Matrix<ElementOf<B>> constant_term(const SeriesRing<B>& ring, const Matrix<ElementOf<SeriesRing<B>>>& a) {
    (void)ring;
    return a.map([](const auto& s) { return s[0]; });
}

/// Inverse over a series ring: Newton iteration X <- X(2I - AX) lifted from
/// A(0)^-1, so the only divisions happen in the base ring on A(0).
template <CommutativeRing B>
Matrix<ElementOf<SeriesRing<B>>> newton_matrix_inverse(const SeriesRing<B>& ring,
                                                       const Matrix<ElementOf<SeriesRing<B>>>& a);

/// A^-1. Fields and other local rings use Gauss-Jordan with unit pivots;
/// series rings use Newton lifting from A(0)^-1.
template <CommutativeRing R>
Matrix<ElementOf<R>> mat_inverse(const R& ring, const Matrix<ElementOf<R>>& a) {
    if constexpr (is_series_ring_v<R>) {
        return newton_matrix_inverse(ring, a);
    } else {
        return gauss_jordan_inverse(ring, a);
    }
}

template <CommutativeRing B>
Matrix<ElementOf<SeriesRing<B>>> newton_matrix_inverse(const SeriesRing<B>& ring,
                                                       const Matrix<ElementOf<SeriesRing<B>>>& a) {
    using S = ElementOf<SeriesRing<B>>;
    if (!a.square()) throw DimensionMismatch("mat_inverse: matrix is not square");
    const std::size_t n = a.rows();
    const Matrix<ElementOf<B>> a0_inv = mat_inverse(ring.base(), constant_term(ring, a));
    Matrix<S> x = a0_inv.map([&](const auto& c) { return ring.constant(c); });
    const Matrix<S> two_i = Matrix<S>::identity(ring, n).scaled(ring.from_int(2));
    for (std::size_t prec = 1; prec < ring.order() + 1; prec *= 2) {
        x = mat_mul(x, two_i - mat_mul(a, x));
    }
    return x;
}

/// Solves A x = b by elimination with unit pivots. Throws SingularMatrix or
/// NoUnitPivot when no unique solution can be certified.
template <CommutativeRing R>
ColVector<ElementOf<R>> solve(const R& ring, Matrix<ElementOf<R>> a, ColVector<ElementOf<R>> b) {
    using E = ElementOf<R>;
    if (!a.square() || a.rows() != b.size()) throw DimensionMismatch("solve: shape mismatch");
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        bool all_zero = false;
        const auto pivot = detail::find_unit_pivot(ring, a, k, k, all_zero);
        if (!pivot) {
            if (all_zero) throw SingularMatrix("solve: matrix is singular over " + ring.name());
            throw NoUnitPivot("solve: column " + std::to_string(k) + " has no unit pivot over " + ring.name());
        }
        detail::swap_rows(a, *pivot, k);
        std::swap(b[*pivot], b[k]);
        const E inv = ring.inverse(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (ring.is_zero(a(i, k))) continue;
            const E factor = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
            b[i] -= factor * b[k];
        }
    }
    ColVector<E> x = zero_col(ring, n);
    for (std::size_t k = n; k-- > 0;) {
        E acc = b[k];
        for (std::size_t j = k + 1; j < n; ++j) acc -= a(k, j) * x[j];
        x[k] = acc * ring.inverse(a(k, k));
    }
    return x;
}

}  // namespace kadj
