#pragma once

/**
 * @file dual_oracle.hpp
 * @brief Forward-mode (dual number) gradients of Delta, used to check the
 *        reverse pass stage by stage.
 *
 * Each function perturbs one input of a truncated forward computation by
 * eps, replays the remaining steps over GF(p)[eps], and reads off the eps
 * coefficient of Delta. None of them touch adjoint_reverse code.
 */

#include <type_traits>
#include <vector>

#include "kadj/krylov_det.hpp"
#include "kadj/rings.hpp"

namespace kadj::dual_oracle {

using Dual = DualNumber<PrimeField>;
using DualField = DualRing<PrimeFieldRing>;

template <class T>
auto lift_all(const DualField& d, const T& xs) {
    if constexpr (requires { xs.entries; }) {
        using V = std::conditional_t<std::is_same_v<T, RowVector<PrimeField>>, RowVector<Dual>, ColVector<Dual>>;
        V out;
        for (const auto& x : xs.entries) out.entries.push_back(d.lift(x));
        return out;
    } else {
        return xs.map([&](const PrimeField& x) { return d.lift(x); });
    }
}

template <class V>
auto lift_each(const DualField& d, const std::vector<V>& xs) {
    std::vector<decltype(lift_all(d, xs.front()))> out;
    for (const auto& x : xs) out.push_back(lift_all(d, x));
    return out;
}

/// Delta over dual numbers from a (possibly perturbed) sequence.
inline PrimeField eps_of_delta(const DualField& d, const ScalarSequence<Dual>& h) {
    return finish_sequence(d, h).delta.eps();
}

/// dDelta/dh_k for k < 2n, steps 5 only.
inline std::vector<PrimeField> gradient_h(const PrimeFieldRing& f, const ScalarSequence<PrimeField>& h) {
    const DualField d(f);
    std::vector<PrimeField> out;
    for (std::size_t k = 0; k < h.size(); ++k) {
        std::vector<Dual> hd;
        for (std::size_t i = 0; i < h.size(); ++i) hd.push_back(i == k ? d.variable(h[i]) : d.lift(h[i]));
        out.push_back(eps_of_delta(d, ScalarSequence<Dual>(std::move(hd))));
    }
    return out;
}

/// dDelta/dv_i as rows, steps 4-5 replayed.
inline std::vector<RowVector<PrimeField>> gradient_baby(const PrimeFieldRing& f, const DetTrace<PrimeField>& t) {
    const DualField d(f);
    const auto giant = lift_each(d, t.giant);
    std::vector<RowVector<PrimeField>> out;
    for (std::size_t i = 0; i < t.baby.size(); ++i) {
        RowVector<PrimeField> g;
        for (std::size_t c = 0; c < t.params.n; ++c) {
            auto baby = lift_each(d, t.baby);
            baby[i][c] = d.variable(t.baby[i][c]);
            g.entries.push_back(eps_of_delta(d, project_sequence(giant, baby, t.params.n)));
        }
        out.push_back(std::move(g));
    }
    return out;
}

/// dDelta/du_j as columns, steps 4-5 replayed.
inline std::vector<ColVector<PrimeField>> gradient_giant(const PrimeFieldRing& f, const DetTrace<PrimeField>& t) {
    const DualField d(f);
    const auto baby = lift_each(d, t.baby);
    std::vector<ColVector<PrimeField>> out;
    for (std::size_t j = 0; j < t.giant.size(); ++j) {
        ColVector<PrimeField> g;
        for (std::size_t c = 0; c < t.params.n; ++c) {
            auto giant = lift_each(d, t.giant);
            giant[j][c] = d.variable(t.giant[j][c]);
            g.entries.push_back(eps_of_delta(d, project_sequence(giant, baby, t.params.n)));
        }
        out.push_back(std::move(g));
    }
    return out;
}

/// dDelta/dB, steps 3-5 replayed with the v_i held fixed.
inline Matrix<PrimeField> gradient_b(const PrimeFieldRing& f, const DetTrace<PrimeField>& t) {
    const DualField d(f);
    const std::size_t n = t.params.n;
    const auto baby = lift_each(d, t.baby);
    const auto u = lift_all(d, t.u);
    Matrix<PrimeField> out = Matrix<PrimeField>::zero(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto bd = lift_all(d, t.b);
            bd(a, b) = d.variable(t.b(a, b));
            out(a, b) = eps_of_delta(d, project_sequence(giant_steps(u, bd, t.params.s), baby, n));
        }
    }
    return out;
}

/// dDelta/dA through B = A^r only (steps 2-5, the v_i held fixed).
inline Matrix<PrimeField> gradient_power(const PrimeFieldRing& f, const DetTrace<PrimeField>& t) {
    const DualField d(f);
    const std::size_t n = t.params.n;
    const auto baby = lift_each(d, t.baby);
    const auto u = lift_all(d, t.u);
    Matrix<PrimeField> out = Matrix<PrimeField>::zero(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto ad = lift_all(d, t.a);
            ad(a, b) = d.variable(t.a(a, b));
            const auto bd = power_with_tape(ad, t.params.r).power;
            out(a, b) = eps_of_delta(d, project_sequence(giant_steps(u, bd, t.params.s), baby, n));
        }
    }
    return out;
}

/// dDelta/dA through the whole forward pass.
inline Matrix<PrimeField> gradient_full(const PrimeFieldRing& f, const DetTrace<PrimeField>& t) {
    const DualField d(f);
    const std::size_t n = t.params.n;
    const auto u = lift_all(d, t.u);
    const auto v = lift_all(d, t.v);
    Matrix<PrimeField> out = Matrix<PrimeField>::zero(f, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto ad = lift_all(d, t.a);
            ad(a, b) = d.variable(t.a(a, b));
            out(a, b) = det_forward(d, ad, u, v).delta.eps();
        }
    }
    return out;
}

}  // namespace kadj::dual_oracle
