#pragma once

/**
 * @file adjoint_reverse.hpp
 * @brief Reverse-mode differentiation of the Krylov determinant.
 *
 * Delta is viewed successively as a function of the h_k (step 5), of the
 * u_j and v_i (step 4), of B and the v_i (step 3), and of A (steps 2 and 1).
 * Running the stages in that order yields dA with (dA)_{ab} = dDelta/dA_{ab},
 * and the adjugate is A* = (dA)^T.
 *
 * Orientation conventions: the gradient of a 1 x n row is an n x 1 column and
 * vice versa, so dv_i are rows and du_j are columns.
 */

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/hankel.hpp"
#include "kadj/krylov_det.hpp"
#include "kadj/linalg.hpp"

namespace kadj {

enum class ReverseStage { step5 = 0, step4 = 1, step3 = 2, step2 = 3, step1 = 4 };

inline constexpr std::array<ReverseStage, 5> kReverseOrder{ReverseStage::step5, ReverseStage::step4,
                                                           ReverseStage::step3, ReverseStage::step2,
                                                           ReverseStage::step1};

inline const char* stage_name(ReverseStage s) {
    switch (s) {
        case ReverseStage::step5: return "step5";
        case ReverseStage::step4: return "step4";
        case ReverseStage::step3: return "step3";
        case ReverseStage::step2: return "step2";
        case ReverseStage::step1: return "step1";
    }
    return "?";
}

/// Groups of DetTrace members, used to declare what each reverse stage reads.
enum class TraceField { matrix, baby_vectors, power_chain, giant_vectors, sequence, hankel, hankel_dets, delta, minpoly };

inline const char* field_name(TraceField f) {
    switch (f) {
        case TraceField::matrix: return "A";
        case TraceField::baby_vectors: return "v_i";
        case TraceField::power_chain: return "power chain";
        case TraceField::giant_vectors: return "u_j";
        case TraceField::sequence: return "h";
        case TraceField::hankel: return "H/H_A";
        case TraceField::hankel_dets: return "det H/det H_A";
        case TraceField::delta: return "Delta";
        case TraceField::minpoly: return "f";
    }
    return "?";
}

/// Trace members read by `stage`.
inline std::span<const TraceField> fields_read_by(ReverseStage stage) {
    static constexpr std::array<TraceField, 2> k5{TraceField::hankel, TraceField::delta};
    static constexpr std::array<TraceField, 2> k4{TraceField::giant_vectors, TraceField::baby_vectors};
    static constexpr std::array<TraceField, 2> k3{TraceField::giant_vectors, TraceField::power_chain};
    static constexpr std::array<TraceField, 1> k2{TraceField::power_chain};
    static constexpr std::array<TraceField, 2> k1{TraceField::baby_vectors, TraceField::matrix};
    switch (stage) {
        case ReverseStage::step5: return k5;
        case ReverseStage::step4: return k4;
        case ReverseStage::step3: return k3;
        case ReverseStage::step2: return k2;
        case ReverseStage::step1: return k1;
    }
    return {};
}

// ---- step 5 -----------------------------------------------------------------

/// dDelta/dh_k = (phi_{k-1}(H_A^-1) - phi_k(H^-1)) Delta for k = 0..2n-1,
/// with phi at indices -1 and 2n-1 taken as zero.
template <CommutativeRing R>
std::vector<ElementOf<R>> diff_step5(const R& ring, const DetTrace<ElementOf<R>>& trace) {
    using E = ElementOf<R>;
    const std::size_t n = trace.params.n;
    Matrix<E> h_inv = mat_inverse(ring, trace.hankel);
    Matrix<E> ha_inv = Matrix<E>::zero(ring, n, n);
    try {
        ha_inv = mat_inverse(ring, trace.hankel_a);
    } catch (const SingularMatrix&) {
        throw NonInvertibleHA("H_A is singular (det A = 0); use division-free mode for singular matrices");
    } catch (const NoUnitPivot&) {
        throw NonInvertibleHA("H_A is not invertible over " + ring.name() + "; use division-free mode");
    }
    const std::vector<E> phi_h = phi_sums(ring, h_inv);
    const std::vector<E> phi_ha = phi_sums(ring, ha_inv);
    std::vector<E> dh;
    dh.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        E term = k >= 1 ? phi_ha[k - 1] : ring.zero();
        if (k <= 2 * n - 2) term -= phi_h[k];
        dh.push_back(term * trace.delta);
    }
    count_mul(2 * n);
    return dh;
}

/// r x s grid with entry (i,j) = dh[i + j r] when i + j r < 2n, else 0.
template <CommutativeRing R>
Matrix<ElementOf<R>> assemble_dh_grid(const R& ring, const std::vector<ElementOf<R>>& dh, std::size_t r,
                                      std::size_t s, std::size_t n) {
    if (dh.size() != 2 * n) throw DimensionMismatch("assemble_dh_grid: dh must have 2n entries");
    Matrix<ElementOf<R>> grid(r, s, ring.zero());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < s; ++j)
            if (i + j * r < 2 * n) grid(i, j) = dh[i + j * r];
    return grid;
}

// ---- step 4 -----------------------------------------------------------------

template <RingElement E>
struct Step4Gradients {
    std::vector<RowVector<E>> d_baby;   ///< dv_i = sum_j DH(i,j) u_j
    std::vector<ColVector<E>> d_giant;  ///< du_j = sum_i v_i DH(i,j)
};

template <CommutativeRing R>
Step4Gradients<ElementOf<R>> diff_step4(const R& ring, const DetTrace<ElementOf<R>>& trace,
                                        const Matrix<ElementOf<R>>& dh_grid) {
    using E = ElementOf<R>;
    const std::size_t n = trace.params.n;
    const std::size_t r = trace.baby.size();
    const std::size_t s = trace.giant.size();
    if (dh_grid.rows() != r || dh_grid.cols() != s) throw DimensionMismatch("diff_step4: DH must be r x s");
    Step4Gradients<E> out;
    out.d_baby.assign(r, zero_row(ring, n));
    out.d_giant.assign(s, zero_col(ring, n));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < s; ++j) {
            const E& w = dh_grid(i, j);
            if (ring.is_zero(w)) continue;
            axpy(out.d_baby[i], w, trace.giant[j]);
            axpy(out.d_giant[j], w, trace.baby[i]);
        }
    }
    return out;
}

// ---- the basic reversal -----------------------------------------------------

/// Reverse of q := p M for a row p: dp += M dq, dM += p^T dq^T.
template <RingElement E>
void reverse_vecmat(const RowVector<E>& p, const Matrix<E>& m, const ColVector<E>& dq, ColVector<E>& dp, Matrix<E>& dm) {
    const std::size_t n = p.size();
    if (m.rows() != n || m.cols() != dq.size() || dp.size() != n || dm.rows() != m.rows() || dm.cols() != m.cols()) {
        throw DimensionMismatch("reverse_vecmat: shape mismatch");
    }
    ColVector<E> m_dq = mat_vec(m, dq);
    for (std::size_t k = 0; k < n; ++k) dp[k] += m_dq[k];
    add_outer(dm, to_col(p), to_row(dq));
}

// ---- step 3 -----------------------------------------------------------------

/// dB from du_0..du_{s-1}: reverses u_j = u_{j-1} B for j = s-1 down to 1.
template <CommutativeRing R>
Matrix<ElementOf<R>> diff_step3(const R& ring, const DetTrace<ElementOf<R>>& trace,
                                std::vector<ColVector<ElementOf<R>>> d_giant) {
    const std::size_t n = trace.params.n;
    if (d_giant.size() != trace.giant.size()) throw DimensionMismatch("diff_step3: one gradient per u_j expected");
    Matrix<ElementOf<R>> d_b = Matrix<ElementOf<R>>::zero(ring, n, n);
    for (std::size_t j = d_giant.size(); j-- > 1;) {
        reverse_vecmat(trace.giant[j - 1], trace.b, d_giant[j], d_giant[j - 1], d_b);
    }
    return d_b;
}

// ---- step 2 -----------------------------------------------------------------

/// Walks the power tape backwards: for P = X Y, G(X) += G(P) Y^T and
/// G(Y) += X^T G(P), each realized row by row with reverse_vecmat.
/// Returns the accumulated gradient of values[0] = A.
template <CommutativeRing R>
Matrix<ElementOf<R>> diff_step2(const R& ring, const PowerTape<ElementOf<R>>& tape, const Matrix<ElementOf<R>>& d_b) {
    using E = ElementOf<R>;
    const std::size_t n = d_b.rows();
    std::vector<Matrix<E>> grad(tape.values.size(), Matrix<E>::zero(ring, n, n));
    grad[tape.result_id()] = d_b;
    for (auto it = tape.products.rbegin(); it != tape.products.rend(); ++it) {
        const Matrix<E>& x = tape.values[it->lhs];
        const Matrix<E>& y = tape.values[it->rhs];
        const Matrix<E> g_p = grad[it->result];
        log_product(g_p, y);
        for (std::size_t a = 0; a < n; ++a) {
            ColVector<E> dp = zero_col(ring, n);
            reverse_vecmat(row_of(x, a), y, to_col(row_of(g_p, a)), dp, grad[it->rhs]);
            Matrix<E>& g_x = grad[it->lhs];
            for (std::size_t b = 0; b < n; ++b) g_x(a, b) += dp[b];
        }
    }
    return grad[0];
}

// ---- step 1 -----------------------------------------------------------------

/// Reverses v_i = A v_{i-1} for i = r-1 down to 1 and adds the result to d_a.
template <CommutativeRing R>
Matrix<ElementOf<R>> diff_step1(const R& ring, const DetTrace<ElementOf<R>>& trace,
                                std::vector<RowVector<ElementOf<R>>> d_baby, Matrix<ElementOf<R>> d_a) {
    (void)ring;
    if (d_baby.size() != trace.baby.size()) throw DimensionMismatch("diff_step1: one gradient per v_i expected");
    for (std::size_t i = d_baby.size(); i-- > 1;) {
        add_outer(d_a, to_col(d_baby[i]), to_row(trace.baby[i - 1]));
        const RowVector<ElementOf<R>> back = vec_mat(d_baby[i], trace.a);
        for (std::size_t k = 0; k < back.size(); ++k) d_baby[i - 1][k] += back[k];
    }
    return d_a;
}

// ---- the whole pass ---------------------------------------------------------

/// Ring multiplications per reverse stage, in kReverseOrder.
using ReverseCosts = std::array<std::uint64_t, 5>;

template <RingElement E>
struct GradientBundle {
    std::vector<E> dh;
    Matrix<E> dh_grid;
    std::vector<RowVector<E>> d_baby;
    std::vector<ColVector<E>> d_giant;
    Matrix<E> d_b;
    Matrix<E> d_a;
    ReverseCosts reverse_muls{};
};

enum class StagePhase { before, after };

/// Runs steps 5..1 on `trace`. `hook(phase, stage, trace)` is invoked around
/// every stage; it may inspect or, for a mutable trace, rewrite trace members.
template <CommutativeRing R, class Trace, class Hook>
GradientBundle<ElementOf<R>> reverse_pass(const R& ring, Trace& trace, Hook&& hook) {
    using E = ElementOf<R>;
    const std::size_t n = trace.params.n;
    ReverseCosts costs{};
    auto mark = thread_op_counts().mul;
    auto charge = [&](ReverseStage s) {
        costs[static_cast<std::size_t>(s)] = thread_op_counts().mul - mark;
        mark = thread_op_counts().mul;
    };

    hook(StagePhase::before, ReverseStage::step5, trace);
    std::vector<E> dh = diff_step5(ring, trace);
    Matrix<E> grid = assemble_dh_grid(ring, dh, trace.params.r, trace.params.s, n);
    charge(ReverseStage::step5);
    hook(StagePhase::after, ReverseStage::step5, trace);

    hook(StagePhase::before, ReverseStage::step4, trace);
    Step4Gradients<E> g4 = diff_step4(ring, trace, grid);
    charge(ReverseStage::step4);
    hook(StagePhase::after, ReverseStage::step4, trace);

    hook(StagePhase::before, ReverseStage::step3, trace);
    Matrix<E> d_b = diff_step3(ring, trace, g4.d_giant);
    charge(ReverseStage::step3);
    hook(StagePhase::after, ReverseStage::step3, trace);

    hook(StagePhase::before, ReverseStage::step2, trace);
    Matrix<E> d_a = diff_step2(ring, trace.tape, d_b);
    charge(ReverseStage::step2);
    hook(StagePhase::after, ReverseStage::step2, trace);

    hook(StagePhase::before, ReverseStage::step1, trace);
    d_a = diff_step1(ring, trace, g4.d_baby, std::move(d_a));
    charge(ReverseStage::step1);
    hook(StagePhase::after, ReverseStage::step1, trace);

    return {std::move(dh), std::move(grid), std::move(g4.d_baby), std::move(g4.d_giant),
            std::move(d_b), std::move(d_a), costs};
}

template <CommutativeRing R>
GradientBundle<ElementOf<R>> reverse_pass(const R& ring, const DetTrace<ElementOf<R>>& trace) {
    return reverse_pass(ring, trace, [](StagePhase, ReverseStage, const DetTrace<ElementOf<R>>&) {});
}

template <RingElement E>
struct AdjointResult {
    Matrix<E> adjugate;
    E det;
    StepCosts forward_muls{};
    ReverseCosts reverse_muls{};
    std::uint64_t division_violations = 0;
    int attempts = 1;  ///< projections tried (field mode)
};

/// A* = (dA)^T over GF(p), with A nonsingular and nonderogatory.
/// Throws DegenerateMinimalPolynomial (a SingularHankel) for derogatory A and
/// NonInvertibleHA for singular A.
inline AdjointResult<PrimeField> adjoint(const PrimeFieldRing& ring, const Matrix<PrimeField>& a, std::uint64_t seed) {
    const std::uint64_t violations_before = division_violations();
    RandomizedTrace<PrimeField> rt = randomized_trace(ring, a, seed);
    GradientBundle<PrimeField> g = reverse_pass(ring, rt.trace);
    return {g.d_a.transpose(), rt.trace.delta,          rt.trace.forward_muls,
            g.reverse_muls,    division_violations() - violations_before, rt.attempts};
}

}  // namespace kadj
