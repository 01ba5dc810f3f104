#pragma once

/**
 * @file krylov_det.hpp
 * @brief Baby-steps/giant-steps Krylov determinant with a recorded trace.
 *
 * Forward pass, for A n x n, a row u and a column v:
 *   1. v_i = A^i v                    (i < r, baby steps)
 *   2. B = A^r                        (binary powering, recorded on a tape)
 *   3. u_j = u B^j                    (j < s, giant steps)
 *   4. h_{i+jr} = u_j v_i             (kept for i + jr < 2n)
 *   5. H, H_A from h; Delta = det(H_A) det(H)^-1; f = minpoly of h.
 * with s = ceil(sqrt n) and r = ceil(2n / s). Everything the reverse pass
 * reads is stored in DetTrace.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kadj/errors.hpp"
#include "kadj/hankel.hpp"
#include "kadj/linalg.hpp"
#include "kadj/random.hpp"

namespace kadj {

struct BabyGiantParams {
    std::size_t n = 0;
    std::size_t r = 0;  ///< baby steps
    std::size_t s = 0;  ///< giant steps

    friend bool operator==(const BabyGiantParams&, const BabyGiantParams&) = default;
};

/// s = ceil(sqrt n), r = ceil(2n / s).
inline BabyGiantParams baby_giant_params(std::size_t n) {
    if (n == 0) throw DimensionMismatch("baby_giant_params: n must be positive");
    std::size_t s = 1;
    while (s * s < n) ++s;
    const std::size_t r = (2 * n + s - 1) / s;
    return {n, r, s};
}

/// Square-and-multiply chain computing A^r. values[0] is A; each product
/// appends values[result] = values[lhs] * values[rhs].
template <RingElement E>
struct PowerTape {
    struct Product {
        std::size_t lhs;
        std::size_t rhs;
        std::size_t result;
        friend bool operator==(const Product&, const Product&) = default;
    };

    std::vector<Matrix<E>> values;
    std::vector<Product> products;

    std::size_t result_id() const noexcept { return products.empty() ? 0 : products.back().result; }
    const Matrix<E>& result() const { return values[result_id()]; }

    /// Recomputes every product from values[0]; true iff all stored values match.
    bool replays() const {
        std::vector<Matrix<E>> fresh{values.front()};
        for (const Product& p : products) {
            if (p.result != fresh.size()) return false;
            fresh.push_back(mat_mul(fresh[p.lhs], fresh[p.rhs]));
        }
        return fresh == values;
    }
};

template <RingElement E>
struct PowerWithTape {
    Matrix<E> power;
    PowerTape<E> tape;
};

/// A^r by left-to-right binary exponentiation (at most 2 floor(log2 r) products).
template <RingElement E>
PowerWithTape<E> power_with_tape(const Matrix<E>& a, std::size_t r) {
    if (!a.square()) throw DimensionMismatch("power_with_tape: matrix is not square");
    if (r == 0) throw IndexOutOfRange("power_with_tape: exponent must be >= 1");
    PowerTape<E> tape;
    tape.values.push_back(a);
    std::size_t current = 0;
    int top = 63;
    while (!((r >> top) & 1U)) --top;
    for (int bit = top - 1; bit >= 0; --bit) {
        tape.values.push_back(mat_mul(tape.values[current], tape.values[current]));
        tape.products.push_back({current, current, tape.values.size() - 1});
        current = tape.values.size() - 1;
        if ((r >> bit) & 1U) {
            tape.values.push_back(mat_mul(tape.values[current], tape.values[0]));
            tape.products.push_back({current, 0, tape.values.size() - 1});
            current = tape.values.size() - 1;
        }
    }
    Matrix<E> power = tape.values[current];
    return {std::move(power), std::move(tape)};
}

// ---- individual forward steps (also used by the stage-local oracles) ------

/// Step 1: v_0..v_{r-1} with v_i = A^i v.
template <RingElement E>
std::vector<ColVector<E>> baby_steps(const Matrix<E>& a, const ColVector<E>& v, std::size_t r) {
    std::vector<ColVector<E>> out{v};
    for (std::size_t i = 1; i < r; ++i) out.push_back(mat_vec(a, out.back()));
    return out;
}

/// Step 3: u_0..u_{s-1} with u_j = u B^j.
template <RingElement E>
std::vector<RowVector<E>> giant_steps(const RowVector<E>& u, const Matrix<E>& b, std::size_t s) {
    std::vector<RowVector<E>> out{u};
    for (std::size_t j = 1; j < s; ++j) out.push_back(vec_mat(out.back(), b));
    return out;
}

/// Step 4: the full r x s grid of u_j v_i; only indices below 2n are kept.
template <RingElement E>
ScalarSequence<E> project_sequence(const std::vector<RowVector<E>>& giant, const std::vector<ColVector<E>>& baby,
                                   std::size_t n) {
    const std::size_t r = baby.size();
    std::vector<std::optional<E>> h(2 * n);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < giant.size(); ++j) {
            E value = dot(giant[j], baby[i]);
            if (i + j * r < 2 * n) h[i + j * r] = std::move(value);
        }
    }
    std::vector<E> values;
    values.reserve(2 * n);
    for (std::size_t k = 0; k < 2 * n; ++k) {
        if (!h[k]) throw DimensionMismatch("project_sequence: r * s does not cover 2n");
        values.push_back(std::move(*h[k]));
    }
    return ScalarSequence<E>(std::move(values));
}

template <RingElement E>
struct HankelStage {
    Matrix<E> hankel;    ///< H
    Matrix<E> hankel_a;  ///< H_A
    E det_hankel;
    E det_hankel_a;
    E delta;
    MonicPolynomial<E> minpoly;
};

/// Step 5: Hankel matrices, Delta = det(H_A) / det(H) and the minimal polynomial.
template <CommutativeRing R>
HankelStage<ElementOf<R>> finish_sequence(const R& ring, const ScalarSequence<ElementOf<R>>& h) {
    using E = ElementOf<R>;
    Matrix<E> hk = build_hankel(h, 0);
    Matrix<E> hk_a = build_hankel(h, 1);
    E det_h = ring.zero();
    try {
        det_h = det_gauss(ring, hk);
    } catch (const NoUnitPivot& e) {
        throw SingularHankel(std::string("det(H) is not a unit: ") + e.what());
    }
    if (!ring.is_unit(det_h)) throw SingularHankel("Hankel matrix H is singular (det H = " + to_string(det_h) + ")");
    E det_ha = det_gauss(ring, hk_a);
    E delta = det_ha * ring.inverse(det_h);
    MonicPolynomial<E> f = minpoly_from_sequence(ring, h);
    return {std::move(hk), std::move(hk_a), std::move(det_h), std::move(det_ha), std::move(delta), std::move(f)};
}

/// Ring multiplications spent in forward steps 1..5.
using StepCosts = std::array<std::uint64_t, 5>;

template <RingElement E>
struct DetTrace {
    Matrix<E> a;
    RowVector<E> u;
    ColVector<E> v;
    BabyGiantParams params;
    std::vector<ColVector<E>> baby;   ///< v_i
    Matrix<E> b;                      ///< A^r
    PowerTape<E> tape;
    std::vector<RowVector<E>> giant;  ///< u_j
    ScalarSequence<E> h;
    Matrix<E> hankel;
    Matrix<E> hankel_a;
    E det_hankel;
    E det_hankel_a;
    E delta;
    MonicPolynomial<E> minpoly;
    StepCosts forward_muls{};
};

/// Runs steps 1-5. Throws SingularHankel when H is not invertible.
template <CommutativeRing R>
DetTrace<ElementOf<R>> det_forward(const R& ring, const Matrix<ElementOf<R>>& a, const RowVector<ElementOf<R>>& u,
                                   const ColVector<ElementOf<R>>& v) {
    using E = ElementOf<R>;
    if (!a.square()) throw DimensionMismatch("det_forward: matrix is not square");
    const std::size_t n = a.rows();
    if (u.size() != n || v.size() != n) throw DimensionMismatch("det_forward: projection size mismatch");
    const BabyGiantParams params = baby_giant_params(n);
    StepCosts costs{};
    auto mark = thread_op_counts().mul;
    auto charge = [&](std::size_t step) {
        costs[step] = thread_op_counts().mul - mark;
        mark = thread_op_counts().mul;
    };

    auto baby = baby_steps(a, v, params.r);
    charge(0);
    auto [b, tape] = power_with_tape(a, params.r);
    charge(1);
    auto giant = giant_steps(u, b, params.s);
    charge(2);
    auto h = project_sequence(giant, baby, n);
    charge(3);
    auto stage = finish_sequence(ring, h);
    charge(4);

    return DetTrace<E>{a,
                       u,
                       v,
                       params,
                       std::move(baby),
                       std::move(b),
                       std::move(tape),
                       std::move(giant),
                       std::move(h),
                       std::move(stage.hankel),
                       std::move(stage.hankel_a),
                       std::move(stage.det_hankel),
                       std::move(stage.det_hankel_a),
                       std::move(stage.delta),
                       std::move(stage.minpoly),
                       costs};
}

/// Recomputes v_i, u_j, B and h from (A, u, v) and compares with the trace.
template <CommutativeRing R>
bool trace_replays(const R& ring, const DetTrace<ElementOf<R>>& t) {
    (void)ring;
    if (!t.tape.replays() || !(t.tape.result() == t.b)) return false;
    if (!(baby_steps(t.a, t.v, t.params.r) == t.baby)) return false;
    if (!(giant_steps(t.u, t.b, t.params.s) == t.giant)) return false;
    return project_sequence(t.giant, t.baby, t.params.n) == t.h;
}

/// (-1)^n f(0).
template <CommutativeRing R>
ElementOf<R> signed_minpoly_constant(const R& ring, const MonicPolynomial<ElementOf<R>>& f) {
    (void)ring;
    return f.degree() % 2 == 0 ? f.constant_term() : -f.constant_term();
}

inline constexpr int kMaxProjectionAttempts = 8;

template <RingElement E>
struct RandomizedTrace {
    DetTrace<E> trace;
    int attempts;
};

/// det_forward with uniformly random (u, v), retried on SingularHankel.
/// Throws DegenerateMinimalPolynomial after kMaxProjectionAttempts failures.
inline RandomizedTrace<PrimeField> randomized_trace(const PrimeFieldRing& ring, const Matrix<PrimeField>& a,
                                                    std::uint64_t seed) {
    if (!a.square()) throw DimensionMismatch("determinant: matrix is not square");
    const std::size_t n = a.rows();
    Rng rng(seed);
    for (int attempt = 1; attempt <= kMaxProjectionAttempts; ++attempt) {
        RowVector<PrimeField> u = random_row(ring, n, rng);
        ColVector<PrimeField> v = random_col(ring, n, rng);
        try {
            return {det_forward(ring, a, u, v), attempt};
        } catch (const SingularHankel&) {
            continue;
        }
    }
    throw DegenerateMinimalPolynomial(
        "Hankel matrix singular for " + std::to_string(kMaxProjectionAttempts) +
        " random projections (retry exhausted): the minimal polynomial of A likely has degree < n; "
        "use division-free mode, which handles any matrix");
}

/// det A over GF(p) via the randomized Krylov pipeline.
inline PrimeField determinant(const PrimeFieldRing& ring, const Matrix<PrimeField>& a, std::uint64_t seed) {
    const auto result = randomized_trace(ring, a, seed);
    const DetTrace<PrimeField>& t = result.trace;
    if (!(signed_minpoly_constant(ring, t.minpoly) == t.delta)) {
        throw std::logic_error("determinant: (-1)^n f(0) disagrees with det(H_A)/det(H)");
    }
    return t.delta;
}

}  // namespace kadj
