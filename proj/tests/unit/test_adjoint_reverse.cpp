#include "support.hpp"

#include "kadj/adjoint_reverse.hpp"
#include "kadj/dual_oracle.hpp"

namespace kadj {
namespace {

using testing::col;
using testing::elems;
using testing::gf;
using testing::mat;
using testing::row;

DetTrace<PrimeField> diag12_trace(const PrimeFieldRing& f) {
    return det_forward(f, mat(f, {{1, 0}, {0, 2}}), row(f, {1, 1}), col(f, {1, 1}));
}

TEST(DiffStep5, OneByOneClosedForm) {
    const auto f = gf(7);
    // A = [4], u = 3, v = 1 gives h = (3, 12) = (3, 5)
    const auto t = det_forward(f, mat(f, {{4}}), row(f, {3}), col(f, {1}));
    ASSERT_EQ(t.h.values(), elems(f, {3, 5}));
    EXPECT_EQ(t.delta, f.from_int(4));
    EXPECT_EQ(diff_step5(f, t), elems(f, {1, 5}));
}

TEST(DiffStep5, MatchesDualNumbersOnDiagonal) {
    const auto f = gf(7);
    const auto t = diag12_trace(f);
    EXPECT_EQ(diff_step5(f, t), dual_oracle::gradient_h(f, t.h));
}

TEST(DhGrid, Layout) {
    const auto f = gf(10007);
    EXPECT_EQ(assemble_dh_grid(f, elems(f, {10, 11, 12, 13}), 2, 2, 2), mat(f, {{10, 12}, {11, 13}}));
    std::vector<std::int64_t> dh(10);
    for (int k = 0; k < 10; ++k) dh[k] = 100 + k;
    const auto g5 = assemble_dh_grid(f, elems(f, dh), 4, 3, 5);
    EXPECT_EQ(g5(2, 2), f.zero());
    EXPECT_EQ(g5(3, 2), f.zero());
    EXPECT_EQ(g5(1, 2), f.from_int(109));
    std::vector<std::int64_t> dh3{1, 2, 3, 4, 5, 6};
    EXPECT_EQ(assemble_dh_grid(f, elems(f, dh3), 3, 2, 3), mat(f, {{1, 4}, {2, 5}, {3, 6}}));
}

TEST(DiffStep4, OneByOneUnrolled) {
    const auto f = gf(10007);
    const auto t = det_forward(f, mat(f, {{3}}), row(f, {2}), col(f, {5}));
    const auto grid = mat(f, {{7}, {9}});
    const auto g = diff_step4(f, t, grid);
    ASSERT_EQ(g.d_baby.size(), 2u);
    EXPECT_EQ(g.d_baby[0][0], f.from_int(7) * t.giant[0][0]);
    EXPECT_EQ(g.d_baby[1][0], f.from_int(9) * t.giant[0][0]);
    EXPECT_EQ(g.d_giant[0][0], t.baby[0][0] * f.from_int(7) + t.baby[1][0] * f.from_int(9));
}

TEST(DiffStep4, ZeroGridGivesZeroGradients) {
    const auto f = gf(7);
    const auto t = diag12_trace(f);
    const auto g = diff_step4(f, t, Matrix<PrimeField>::zero(f, 2, 2));
    for (const auto& v : g.d_baby) EXPECT_EQ(v, zero_row(f, 2));
    for (const auto& u : g.d_giant) EXPECT_EQ(u, zero_col(f, 2));
}

TEST(DiffStep4, MatchesDualNumbersOnDiagonal) {
    const auto f = gf(7);
    const auto t = diag12_trace(f);
    const auto g = reverse_pass(f, t);
    EXPECT_EQ(g.d_baby, dual_oracle::gradient_baby(f, t));
    EXPECT_EQ(g.d_giant, dual_oracle::gradient_giant(f, t));
}

TEST(ReverseVecmat, IdentityMatrix) {
    const auto f = gf(7);
    const auto p = row(f, {1, 2});
    const auto dq = col(f, {3, 4});
    ColVector<PrimeField> dp = col(f, {1, 1});
    Matrix<PrimeField> dm = Matrix<PrimeField>::zero(f, 2, 2);
    reverse_vecmat(p, Matrix<PrimeField>::identity(f, 2), dq, dp, dm);
    EXPECT_EQ(dp, col(f, {4, 5}));
    EXPECT_EQ(dm, mat(f, {{3, 4}, {6, 8}}));
}

TEST(ReverseVecmat, ZeroSeedChangesNothing) {
    const auto f = gf(7);
    ColVector<PrimeField> dp = col(f, {1, 2});
    Matrix<PrimeField> dm = mat(f, {{1, 2}, {3, 4}});
    reverse_vecmat(row(f, {5, 6}), mat(f, {{1, 2}, {3, 4}}), col(f, {0, 0}), dp, dm);
    EXPECT_EQ(dp, col(f, {1, 2}));
    EXPECT_EQ(dm, mat(f, {{1, 2}, {3, 4}}));
}

TEST(ReverseVecmat, MatchesDualNumbersOnLinearFunctional) {
    const auto f = gf(7);
    const DualRing<PrimeFieldRing> d(f);
    const auto p = row(f, {3, 5});
    const auto m = mat(f, {{2, 6}, {1, 4}});
    const auto w = col(f, {5, 2});
    ColVector<PrimeField> dp = zero_col(f, 2);
    Matrix<PrimeField> dm = Matrix<PrimeField>::zero(f, 2, 2);
    reverse_vecmat(p, m, w, dp, dm);
    auto functional = [&](const RowVector<DualNumber<PrimeField>>& pd, const Matrix<DualNumber<PrimeField>>& md) {
        return dot(vec_mat(pd, md), dual_oracle::lift_all(d, w)).eps();
    };
    for (std::size_t k = 0; k < 2; ++k) {
        auto pd = dual_oracle::lift_all(d, p);
        pd[k] = d.variable(p[k]);
        EXPECT_EQ(dp[k], functional(pd, dual_oracle::lift_all(d, m)));
    }
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            auto md = dual_oracle::lift_all(d, m);
            md(a, b) = d.variable(m(a, b));
            EXPECT_EQ(dm(a, b), functional(dual_oracle::lift_all(d, p), md));
        }
    }
}

TEST(DiffStep3, SingleGiantStepHasNoGradient) {
    const auto f = gf(7);
    const auto t = det_forward(f, mat(f, {{3}}), row(f, {1}), col(f, {1}));
    ASSERT_EQ(t.params.s, 1u);
    EXPECT_EQ(diff_step3(f, t, {col(f, {5})}), Matrix<PrimeField>::zero(f, 1, 1));
}

TEST(DiffStep3, TwoGiantStepsIsOuterProduct) {
    const auto f = gf(10007);
    const auto t = det_forward(f, mat(f, {{1, 2, 0}, {0, 1, 3}, {4, 0, 1}}), row(f, {1, 2, 3}), col(f, {3, 1, 2}));
    ASSERT_EQ(t.params.s, 2u);
    const auto du1 = col(f, {7, 8, 9});
    Matrix<PrimeField> expected = Matrix<PrimeField>::zero(f, 3, 3);
    add_outer(expected, to_col(t.giant[0]), to_row(du1));
    EXPECT_EQ(diff_step3(f, t, {col(f, {1, 1, 1}), du1}), expected);
}

TEST(DiffStep3, MatchesDualNumbersGf7) {
    const auto f = gf(7);
    const auto t = diag12_trace(f);
    EXPECT_EQ(reverse_pass(f, t).d_b, dual_oracle::gradient_b(f, t));
}

TEST(DiffStep2, EmptyTapeReturnsSeed) {
    const auto f = gf(7);
    const auto pw = power_with_tape(mat(f, {{1, 2}, {3, 4}}), 1);
    EXPECT_EQ(diff_step2(f, pw.tape, mat(f, {{5, 6}, {0, 1}})), mat(f, {{5, 6}, {0, 1}}));
}

TEST(DiffStep2, SquareIsProductRule) {
    const auto f = gf(10007);
    const auto a = mat(f, {{1, 2}, {3, 4}});
    const auto db = mat(f, {{5, 6}, {7, 8}});
    const auto pw = power_with_tape(a, 2);
    EXPECT_EQ(diff_step2(f, pw.tape, db), mat_mul(db, a.transpose()) + mat_mul(a.transpose(), db));
}

TEST(DiffStep2, FifthPowerMatchesDualNumbersGf7) {
    const auto f = gf(7);
    const DualRing<PrimeFieldRing> d(f);
    const auto a = mat(f, {{1, 2}, {3, 5}});
    const auto db = mat(f, {{2, 0}, {1, 3}});
    const auto pw = power_with_tape(a, 5);
    const auto grad = diff_step2(f, pw.tape, db);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            auto ad = dual_oracle::lift_all(d, a);
            ad(i, j) = d.variable(a(i, j));
            const auto bd = power_with_tape(ad, 5).power;
            PrimeField expected = f.zero();
            for (std::size_t k = 0; k < 4; ++k) expected += bd.data()[k].eps() * db.data()[k];
            EXPECT_EQ(grad(i, j), expected);
        }
    }
}

TEST(DiffStep1, TwoBabyStepsAddOuterProduct) {
    const auto f = gf(10007);
    const auto t = det_forward(f, mat(f, {{3}}), row(f, {1}), col(f, {5}));
    ASSERT_EQ(t.params.r, 2u);
    const auto seed = mat(f, {{4}});
    EXPECT_EQ(diff_step1(f, t, {row(f, {2}), row(f, {6})}, seed), mat(f, {{4 + 6 * 5}}));
    EXPECT_EQ(diff_step1(f, t, {row(f, {0}), row(f, {0})}, seed), seed);
}

TEST(ReversePass, FullGradientMatchesDualNumbersGf7) {
    const auto f = gf(7);
    const auto t = diag12_trace(f);
    EXPECT_EQ(reverse_pass(f, t).d_a, dual_oracle::gradient_full(f, t));
}

TEST(Adjoint, SwapMatrixGf7) {
    const auto f = gf(7);
    const auto r = adjoint(f, mat(f, {{0, 1}, {1, 0}}), 1);
    EXPECT_EQ(r.adjugate, mat(f, {{0, 6}, {6, 0}}));
    EXPECT_EQ(r.det, f.from_int(6));
    EXPECT_EQ(r.division_violations, 0u);
}

TEST(Adjoint, RandomFourByFourMatchesOracle) {
    const auto f = gf(10007);
    Rng rng(4);
    const auto a = random_matrix(f, 4, 4, rng);
    EXPECT_EQ(adjoint(f, a, 9).adjugate, adjugate_oracle(f, a));
}

TEST(Adjoint, IdentityIsSingularHankel) {
    const auto f = gf(10007);
    EXPECT_THROW((void)adjoint(f, Matrix<PrimeField>::identity(f, 4), 1), SingularHankel);
}

TEST(AdjointProperties, Suite) { testing::expect_passed(verify::adjoint_properties(verify::kDefaultSeed)); }

}  // namespace
}  // namespace kadj
