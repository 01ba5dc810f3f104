#include "support.hpp"

#include "kadj/krylov_det.hpp"

namespace kadj {
namespace {

using testing::col;
using testing::elems;
using testing::gf;
using testing::mat;
using testing::row;

TEST(BabyGiantParams, Formula) {
    EXPECT_EQ(baby_giant_params(7), (BabyGiantParams{7, 5, 3}));
    EXPECT_EQ(baby_giant_params(1), (BabyGiantParams{1, 2, 1}));
    EXPECT_EQ(baby_giant_params(16), (BabyGiantParams{16, 8, 4}));
    for (std::size_t n = 1; n <= 100; ++n) {
        const auto p = baby_giant_params(n);
        EXPECT_GE(p.r * p.s, 2 * n);
        EXPECT_GE(p.r, 2u);
    }
}

TEST(PowerTape, EmptyForFirstPower) {
    const auto f = gf(7);
    const auto a = mat(f, {{1, 2}, {3, 4}});
    const auto pw = power_with_tape(a, 1);
    EXPECT_EQ(pw.power, a);
    EXPECT_TRUE(pw.tape.products.empty());
}

TEST(PowerTape, BinaryChainForFive) {
    const auto f = gf(7);
    const auto a = mat(f, {{1, 2}, {3, 4}});
    const auto pw = power_with_tape(a, 5);
    ASSERT_EQ(pw.tape.products.size(), 3u);
    using P = PowerTape<PrimeField>::Product;
    EXPECT_EQ(pw.tape.products[0], (P{0, 0, 1}));
    EXPECT_EQ(pw.tape.products[1], (P{1, 1, 2}));
    EXPECT_EQ(pw.tape.products[2], (P{2, 0, 3}));
    EXPECT_EQ(pw.power, mat_mul(mat_mul(mat_mul(mat_mul(a, a), a), a), a));
    EXPECT_TRUE(pw.tape.replays());
}

TEST(PowerTape, CyclePermutationToTheN) {
    const auto f = gf(7);
    for (std::size_t n = 2; n <= 6; ++n) {
        Matrix<PrimeField> c = Matrix<PrimeField>::zero(f, n, n);
        for (std::size_t i = 0; i < n; ++i) c((i + 1) % n, i) = f.one();
        EXPECT_EQ(power_with_tape(c, n).power, Matrix<PrimeField>::identity(f, n));
    }
}

TEST(DetForward, SwapMatrixGf7) {
    const auto f = gf(7);
    const auto t = det_forward(f, mat(f, {{0, 1}, {1, 0}}), row(f, {1, 0}), col(f, {1, 0}));
    EXPECT_EQ(t.h.values(), elems(f, {1, 0, 1, 0}));
    EXPECT_EQ(t.hankel, Matrix<PrimeField>::identity(f, 2));
    EXPECT_EQ(t.hankel_a, mat(f, {{0, 1}, {1, 0}}));
    EXPECT_EQ(t.delta, f.from_int(6));
}

TEST(DetForward, DiagonalOneTwoGf7) {
    const auto f = gf(7);
    const auto t = det_forward(f, mat(f, {{1, 0}, {0, 2}}), row(f, {1, 1}), col(f, {1, 1}));
    EXPECT_EQ(t.delta, f.from_int(2));
    EXPECT_EQ(t.minpoly.coefficients, elems(f, {2, 4, 1}));
    EXPECT_TRUE(trace_replays(f, t));
}

TEST(DetForward, IdentityIsSingularHankel) {
    const auto f = gf(10007);
    EXPECT_THROW((void)det_forward(f, Matrix<PrimeField>::identity(f, 3), row(f, {1, 2, 3}), col(f, {4, 5, 6})),
                 SingularHankel);
}

TEST(Determinant, RandomFiveByFive) {
    const auto f = gf(10007);
    Rng rng(11);
    const auto a = random_matrix(f, 5, 5, rng);
    EXPECT_EQ(determinant(f, a, 3), det_gauss(f, a));
}

TEST(Determinant, ZeroMatrixIsDegenerate) {
    const auto f = gf(10007);
    EXPECT_THROW((void)determinant(f, Matrix<PrimeField>::zero(f, 3, 3), 1), DegenerateMinimalPolynomial);
    try {
        (void)determinant(f, Matrix<PrimeField>::zero(f, 3, 3), 1);
    } catch (const DegenerateMinimalPolynomial& e) {
        EXPECT_NE(std::string(e.what()).find("retry exhausted"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("division-free"), std::string::npos);
    }
}

TEST(Determinant, CompanionOfCubeRootsOfUnity) {
    const auto f = gf(7);
    // companion matrix of x^3 - 1
    EXPECT_EQ(determinant(f, mat(f, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}), 2), f.one());
}

TEST(Determinant, SeedIsReproducible) {
    const auto f = gf(10007);
    Rng rng(3);
    const auto a = random_matrix(f, 9, 9, rng);
    const auto x = randomized_trace(f, a, 77);
    const auto y = randomized_trace(f, a, 77);
    EXPECT_EQ(x.trace.u, y.trace.u);
    EXPECT_EQ(x.trace.h, y.trace.h);
}

TEST(KrylovProperties, Suite) { testing::expect_passed(verify::krylov_properties(verify::kDefaultSeed)); }

}  // namespace
}  // namespace kadj
