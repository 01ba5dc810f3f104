#pragma once

/**
 * @file division_free.hpp
 * @brief Determinant and adjugate over any commutative ring R.
 *
 * The Krylov pipeline runs on Z(z) = C + z(A - C) over R[z]/(z^{n+1}) with a
 * fixed projection (C, u, v) for which H(0) and H_A(0) are permutation
 * matrices. Every inversion in the pipeline is then of a series with
 * constant term +-1, and det Z(z), a polynomial of degree <= n, is computed
 * exactly. Evaluating at z = 1 gives det A; evaluating the reverse-pass
 * gradient dZ at z = 1 and transposing gives the adjugate of A.
 */

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kadj/adjoint_reverse.hpp"
#include "kadj/errors.hpp"
#include "kadj/krylov_det.hpp"
#include "kadj/linalg.hpp"
#include "kadj/rings.hpp"

namespace kadj {

/// C is the n-cycle permutation (C e_i = e_{i+1}, C e_n = e_1); u = e_1^T, v = e_1.
/// Then u C^k v = 1 iff n divides k, so H(0) and H_A(0) are permutations.
struct ProjectionChoice {
    std::size_t n = 0;

    template <CommutativeRing R>
    Matrix<ElementOf<R>> c_matrix(const R& ring) const {
        Matrix<ElementOf<R>> c = Matrix<ElementOf<R>>::zero(ring, n, n);
        for (std::size_t i = 0; i < n; ++i) c((i + 1) % n, i) = ring.one();
        return c;
    }

    template <CommutativeRing R>
    RowVector<ElementOf<R>> u(const R& ring) const {
        RowVector<ElementOf<R>> row = zero_row(ring, n);
        row[0] = ring.one();
        return row;
    }

    template <CommutativeRing R>
    ColVector<ElementOf<R>> v(const R& ring) const {
        ColVector<ElementOf<R>> col = zero_col(ring, n);
        col[0] = ring.one();
        return col;
    }
};

inline ProjectionChoice choose_projection(std::size_t n) {
    if (n == 0) throw DimensionMismatch("choose_projection: n must be positive");
    return ProjectionChoice{n};
}

/// Entry (i,j) is the series c_ij + (a_ij - c_ij) z.
template <CommutativeRing R>
Matrix<ElementOf<SeriesRing<R>>> build_z(const SeriesRing<R>& series, const Matrix<ElementOf<R>>& a,
                                         const Matrix<ElementOf<R>>& c) {
    if (a.rows() != c.rows() || a.cols() != c.cols()) throw DimensionMismatch("build_z: A and C differ in shape");
    std::vector<ElementOf<SeriesRing<R>>> data;
    data.reserve(a.data().size());
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        auto entry = series.constant(c.data()[k]);
        if (series.order() >= 1) entry[1] = a.data()[k] - c.data()[k];
        data.push_back(std::move(entry));
    }
    return Matrix<ElementOf<SeriesRing<R>>>(a.rows(), a.cols(), std::move(data));
}

template <CommutativeRing R>
struct DivisionFreeSetup {
    SeriesRing<R> series;
    Matrix<ElementOf<SeriesRing<R>>> z;
    RowVector<ElementOf<SeriesRing<R>>> u;
    ColVector<ElementOf<SeriesRing<R>>> v;
};

template <CommutativeRing R>
DivisionFreeSetup<R> division_free_setup(const R& ring, const Matrix<ElementOf<R>>& a) {
    if (!a.square() || a.rows() == 0) throw DimensionMismatch("division-free pipeline needs a non-empty square matrix");
    const std::size_t n = a.rows();
    const ProjectionChoice proj = choose_projection(n);
    SeriesRing<R> series(ring, n);
    auto z = build_z(series, a, proj.c_matrix(ring));
    auto u = proj.u(series);
    auto v = proj.v(series);
    return {std::move(series), std::move(z), std::move(u), std::move(v)};
}

template <CommutativeRing R>
struct DivisionFreeDet {
    ElementOf<R> det;
    ElementOf<SeriesRing<R>> det_series;  ///< det Z(z) mod z^{n+1}
    std::uint64_t division_violations = 0;
};

/// det A = (det Z)(1), computed without divisions by non-units.
template <CommutativeRing R>
DivisionFreeDet<R> det_division_free(const R& ring, const Matrix<ElementOf<R>>& a) {
    const std::uint64_t before = division_violations();
    auto setup = division_free_setup(ring, a);
    auto trace = det_forward(setup.series, setup.z, setup.u, setup.v);
    return {series_eval_at_one(trace.delta), trace.delta, division_violations() - before};
}

// ---- partial evaluation -------------------------------------------------------

/// Collapse `field` to `watermark` once `after` has completed.
struct WatermarkEntry {
    ReverseStage after;
    TraceField field;
    std::size_t watermark;
};

using WatermarkSchedule = std::vector<WatermarkEntry>;

/// Collapses only what step 5 leaves behind (sequence, Hankel data, Delta, f)
/// at full degree n.
inline WatermarkSchedule conservative_schedule(std::size_t n) {
    WatermarkSchedule s;
    for (TraceField f : {TraceField::sequence, TraceField::hankel, TraceField::hankel_dets, TraceField::delta,
                         TraceField::minpoly}) {
        s.push_back({ReverseStage::step5, f, n});
    }
    return s;
}

/// Collapses every field right after its last reader.
inline WatermarkSchedule last_use_schedule(std::size_t n) {
    WatermarkSchedule s = conservative_schedule(n);
    s.push_back({ReverseStage::step3, TraceField::giant_vectors, n});
    s.push_back({ReverseStage::step2, TraceField::power_chain, n});
    return s;
}

namespace detail {

template <RingElement E>
void collapse(Matrix<TruncatedSeries<E>>& m, std::size_t w) {
    for (auto& x : m.data()) x = partial_evaluate(x, w);
}

template <class Vec>
void collapse_vec(Vec& v, std::size_t w) {
    for (auto& x : v.entries) x = partial_evaluate(x, w);
}

}  // namespace detail

/// Partially evaluates every series stored under `field` at degree `watermark`.
template <RingElement E>
void apply_partial_evaluation(DetTrace<TruncatedSeries<E>>& trace, TraceField field, std::size_t watermark) {
    if (watermark == 0) return;
    switch (field) {
        case TraceField::matrix: detail::collapse(trace.a, watermark); break;
        case TraceField::baby_vectors:
            for (auto& v : trace.baby) detail::collapse_vec(v, watermark);
            break;
        case TraceField::power_chain:
            for (auto& m : trace.tape.values) detail::collapse(m, watermark);
            detail::collapse(trace.b, watermark);
            break;
        case TraceField::giant_vectors:
            for (auto& u : trace.giant) detail::collapse_vec(u, watermark);
            break;
        case TraceField::sequence: {
            std::vector<TruncatedSeries<E>> h = trace.h.values();
            for (auto& x : h) x = partial_evaluate(x, watermark);
            trace.h = ScalarSequence<TruncatedSeries<E>>(std::move(h));
            break;
        }
        case TraceField::hankel:
            detail::collapse(trace.hankel, watermark);
            detail::collapse(trace.hankel_a, watermark);
            break;
        case TraceField::hankel_dets:
            trace.det_hankel = partial_evaluate(trace.det_hankel, watermark);
            trace.det_hankel_a = partial_evaluate(trace.det_hankel_a, watermark);
            break;
        case TraceField::delta: trace.delta = partial_evaluate(trace.delta, watermark); break;
        case TraceField::minpoly:
            for (auto& c : trace.minpoly.coefficients) c = partial_evaluate(c, watermark);
            break;
    }
}

/// Applies a schedule around the reverse stages and poisons collapsed fields:
/// a stage that reads a collapsed field raises WatermarkViolation.
class PartialEvaluator {
public:
    explicit PartialEvaluator(WatermarkSchedule schedule) : schedule_(std::move(schedule)) {}

    template <RingElement E>
    void operator()(StagePhase phase, ReverseStage stage, DetTrace<TruncatedSeries<E>>& trace) {
        if (phase == StagePhase::before) {
            for (TraceField f : fields_read_by(stage)) {
                auto it = collapsed_.find(f);
                if (it != collapsed_.end()) {
                    throw WatermarkViolation(std::string(stage_name(stage)) + " reads " + field_name(f) +
                                             ", collapsed below degree " + std::to_string(it->second));
                }
            }
            return;
        }
        for (const WatermarkEntry& e : schedule_) {
            if (e.after != stage || e.watermark == 0) continue;
            apply_partial_evaluation(trace, e.field, e.watermark);
            auto& w = collapsed_[e.field];
            w = std::max(w, e.watermark);
        }
    }

    const std::map<TraceField, std::size_t>& collapsed() const noexcept { return collapsed_; }

private:
    WatermarkSchedule schedule_;
    std::map<TraceField, std::size_t> collapsed_;
};

struct DivisionFreeOptions {
    bool partial_evaluation = false;
    WatermarkSchedule schedule;  ///< used when partial_evaluation is set; empty means conservative
};

/// A* = (dZ(1))^T for any square A over R, including singular and derogatory A.
template <CommutativeRing R>
AdjointResult<ElementOf<R>> adjoint_division_free(const R& ring, const Matrix<ElementOf<R>>& a,
                                                  const DivisionFreeOptions& options = {}) {
    const std::uint64_t before = division_violations();
    auto setup = division_free_setup(ring, a);
    auto trace = det_forward(setup.series, setup.z, setup.u, setup.v);
    GradientBundle<ElementOf<SeriesRing<R>>> g = [&] {
        if (!options.partial_evaluation) return reverse_pass(setup.series, trace);
        PartialEvaluator pe(options.schedule.empty() ? conservative_schedule(a.rows()) : options.schedule);
        return reverse_pass(setup.series, trace, pe);
    }();
    Matrix<ElementOf<R>> adj = g.d_a.map([](const auto& s) { return series_eval_at_one(s); }).transpose();
    return {std::move(adj), series_eval_at_one(trace.delta), trace.forward_muls, g.reverse_muls,
            division_violations() - before, 1};
}

}  // namespace kadj
