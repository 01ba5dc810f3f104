#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel matrices of a scalar sequence, anti-diagonal sums and the
 *        minimal polynomial of a linearly recurrent sequence.
 *
 * Indices are 0-based throughout: the sequence is h_0..h_{2n-1} and
 * phi_k(M) is the sum of m_ij over i + j = k (0-based i, j), for
 * k = 0..2n-2.
 */

#include <string>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/linalg.hpp"

namespace kadj {

/// h_0 .. h_{2n-1}.
template <RingElement E>
class ScalarSequence {
public:
    explicit ScalarSequence(std::vector<E> values) : values_(std::move(values)) {
        if (values_.empty() || values_.size() % 2 != 0) {
            throw DimensionMismatch("scalar sequence must have even positive length 2n, got " +
                                    std::to_string(values_.size()));
        }
    }

    std::size_t dimension() const noexcept { return values_.size() / 2; }
    std::size_t size() const noexcept { return values_.size(); }
    const E& operator[](std::size_t k) const { return values_[k]; }
    const std::vector<E>& values() const noexcept { return values_; }

    friend bool operator==(const ScalarSequence&, const ScalarSequence&) = default;

private:
    std::vector<E> values_;
};

/// lambda^n + c_{n-1} lambda^{n-1} + ... + c_0, stored as c_0..c_{n-1}, 1.
template <RingElement E>
struct MonicPolynomial {
    std::vector<E> coefficients;

    std::size_t degree() const noexcept { return coefficients.size() - 1; }
    const E& constant_term() const { return coefficients.front(); }
    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;
};

/// Entry (i,j) = h_{i+j+shift} for 0-based i, j; shift is 0 (H) or 1 (H_A).
template <RingElement E>
Matrix<E> build_hankel(const ScalarSequence<E>& h, unsigned shift) {
    if (shift > 1) throw IndexOutOfRange("build_hankel: shift must be 0 or 1");
    const std::size_t n = h.dimension();
    std::vector<E> data;
    data.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) data.push_back(h[i + j + shift]);
    return Matrix<E>(n, n, std::move(data));
}

/// phi_0 .. phi_{2n-2} of a square matrix.
template <CommutativeRing R>
std::vector<ElementOf<R>> phi_sums(const R& ring, const Matrix<ElementOf<R>>& m) {
    if (!m.square()) throw DimensionMismatch("phi_sums: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    std::vector<ElementOf<R>> phi(2 * n - 1, ring.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) phi[i + j] += m(i, j);
    count_add(n * n);
    return phi;
}

/// Solves H c = -(h_n, ..., h_{2n-1})^T and returns the monic f of degree n.
/// Throws SingularHankel when H has no certified inverse over the ring.
template <CommutativeRing R>
MonicPolynomial<ElementOf<R>> minpoly_from_sequence(const R& ring, const ScalarSequence<ElementOf<R>>& h) {
    using E = ElementOf<R>;
    const std::size_t n = h.dimension();
    ColVector<E> rhs = zero_col(ring, n);
    for (std::size_t k = 0; k < n; ++k) rhs[k] = -h[n + k];
    ColVector<E> c;
    try {
        c = solve(ring, build_hankel(h, 0), std::move(rhs));
    } catch (const SingularMatrix& e) {
        throw SingularHankel(std::string("minimal polynomial has degree < n: ") + e.what());
    } catch (const NoUnitPivot& e) {
        throw SingularHankel(std::string("Hankel system not uniquely solvable: ") + e.what());
    }
    MonicPolynomial<E> f{std::move(c.entries)};
    f.coefficients.push_back(ring.one());
    return f;
}

}  // namespace kadj
