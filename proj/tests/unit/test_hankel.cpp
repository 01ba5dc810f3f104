#include "support.hpp"

#include "kadj/hankel.hpp"

namespace kadj {
namespace {

using testing::elems;
using testing::gf;
using testing::mat;

TEST(BuildHankel, ShiftZeroAndOne) {
    const IntegerRing z;
    const ScalarSequence<BigInt> h(elems(z, {10, 20, 30, 40}));
    EXPECT_EQ(build_hankel(h, 0), testing::imat({{10, 20}, {20, 30}}));
    EXPECT_EQ(build_hankel(h, 1), testing::imat({{20, 30}, {30, 40}}));
    EXPECT_EQ(build_hankel(ScalarSequence<BigInt>(elems(z, {7, 8})), 0), testing::imat({{7}}));
    EXPECT_THROW((void)build_hankel(h, 2), IndexOutOfRange);
}

TEST(ScalarSequence, NeedsEvenLength) {
    const IntegerRing z;
    EXPECT_THROW(ScalarSequence<BigInt>(elems(z, {1, 2, 3})), DimensionMismatch);
    EXPECT_THROW(ScalarSequence<BigInt>(std::vector<BigInt>{}), DimensionMismatch);
}

TEST(PhiSums, AntiDiagonals) {
    const IntegerRing z;
    EXPECT_EQ(phi_sums(z, testing::imat({{1, 2}, {3, 4}})), elems(z, {1, 5, 4}));
    EXPECT_EQ(phi_sums(z, Matrix<BigInt>::identity(z, 3)), elems(z, {1, 0, 1, 0, 1}));
    EXPECT_EQ(phi_sums(z, testing::imat({{1, 1}, {1, 1}})), elems(z, {1, 2, 1}));
}

TEST(MinPoly, SmallCases) {
    const auto f = gf(7);
    EXPECT_EQ(minpoly_from_sequence(f, ScalarSequence<PrimeField>(elems(f, {1, 1}))).coefficients, elems(f, {-1, 1}));
    EXPECT_EQ(minpoly_from_sequence(f, ScalarSequence<PrimeField>(elems(f, {1, 0}))).coefficients, elems(f, {0, 1}));
}

TEST(MinPoly, DiagonalOneTwo) {
    const auto f = gf(7);
    const auto g = minpoly_from_sequence(f, ScalarSequence<PrimeField>(elems(f, {2, 3, 5, 2})));
    EXPECT_EQ(g.coefficients, elems(f, {2, 4, 1}));
    EXPECT_EQ(g.degree(), 2u);
}

TEST(MinPoly, SingularHankelIsReported) {
    const auto f = gf(7);
    EXPECT_THROW((void)minpoly_from_sequence(f, ScalarSequence<PrimeField>(elems(f, {1, 1, 1, 1}))), SingularHankel);
}

TEST(HankelProperties, Suite) { testing::expect_passed(verify::hankel_properties(verify::kDefaultSeed)); }

}  // namespace
}  // namespace kadj
