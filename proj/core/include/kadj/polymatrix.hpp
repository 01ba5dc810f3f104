#pragma once

/**
 * @file polymatrix.hpp
 * @brief Inversion of univariate polynomial matrices A(z) over GF(p) modulo z^{N+1}.
 *
 * The inverse is adj(A) / det(A), both obtained from the division-free
 * adjoint pipeline whose base ring is GF(p)[z]/(z^{N+1}). det(A) has unit
 * constant term whenever A(0) is invertible, so the final division is a
 * series reciprocal.
 */

#include <cstddef>
#include <string>
#include <vector>

#include "kadj/division_free.hpp"
#include "kadj/errors.hpp"
#include "kadj/linalg.hpp"
#include "kadj/rings.hpp"

namespace kadj {

using PolySeriesRing = SeriesRing<PrimeFieldRing>;
using PolySeries = ElementOf<PolySeriesRing>;
using PolySeriesMatrix = Matrix<PolySeries>;

struct SeriesInverse {
    PolySeriesMatrix inverse;
    PolySeries det;
    std::uint64_t division_violations = 0;
};

namespace detail {

inline void require_invertible_leading(const PolySeriesRing& ring, const PolySeriesMatrix& a) {
    if (!a.square() || a.rows() == 0) throw DimensionMismatch("series inversion needs a non-empty square matrix");
    const auto lead = constant_term(ring, a);
    if (ring.base().is_zero(det_gauss(ring.base(), lead))) {
        throw SingularLeadingMatrix("A(0) is singular over " + ring.base().name() + "; A(z) has no power series inverse");
    }
}

}  // namespace detail

/// A^-1 mod z^{N+1} via the division-free adjoint pipeline.
/// Throws SingularLeadingMatrix when A(0) is not invertible.
inline SeriesInverse invert_series_matrix(const PolySeriesRing& ring, const PolySeriesMatrix& a,
                                          const DivisionFreeOptions& options = {}) {
    detail::require_invertible_leading(ring, a);
    AdjointResult<PolySeries> adj = adjoint_division_free(ring, a, options);
    const PolySeries det_inv = series_reciprocal(ring, adj.det);
    return {adj.adjugate.scaled(det_inv), adj.det, adj.division_violations};
}

/// Independent check: Newton iteration X <- X(2I - AX) from A(0)^-1.
inline PolySeriesMatrix newton_inverse_oracle(const PolySeriesRing& ring, const PolySeriesMatrix& a) {
    detail::require_invertible_leading(ring, a);
    return newton_matrix_inverse(ring, a);
}

}  // namespace kadj
