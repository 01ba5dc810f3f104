#include "support.hpp"

#include "kadj/polymatrix.hpp"
#include "kadj/random.hpp"

namespace kadj {
namespace {

using testing::elems;
using testing::gf;

PolySeriesMatrix poly_matrix(const PolySeriesRing& ring, const std::vector<std::vector<std::vector<std::int64_t>>>& rows) {
    std::vector<PolySeries> data;
    for (const auto& r : rows)
        for (const auto& e : r) data.push_back(ring.from_coefficients(elems(ring.base(), e)));
    return PolySeriesMatrix(rows.size(), rows.size(), std::move(data));
}

TEST(InvertSeriesMatrix, IdentityPlusNilpotent) {
    const PolySeriesRing ring(gf(7), 4);
    // I + zN with N = [[0,1],[0,0]]: inverse is I - zN
    const auto a = poly_matrix(ring, {{{1}, {0, 1}}, {{0}, {1}}});
    const auto r = invert_series_matrix(ring, a);
    EXPECT_EQ(r.inverse, poly_matrix(ring, {{{1}, {0, -1}}, {{0}, {1}}}));
    EXPECT_EQ(r.det, ring.one());
    EXPECT_EQ(r.division_violations, 0u);
}

TEST(InvertSeriesMatrix, ConstantMatrix) {
    const PolySeriesRing ring(gf(7), 3);
    const auto a = poly_matrix(ring, {{{1}, {2}}, {{3}, {4}}});
    EXPECT_EQ(invert_series_matrix(ring, a).inverse, poly_matrix(ring, {{{5}, {1}}, {{5}, {3}}}));
}

TEST(InvertSeriesMatrix, Identity) {
    const PolySeriesRing ring(gf(7), 5);
    EXPECT_EQ(invert_series_matrix(ring, PolySeriesMatrix::identity(ring, 3)).inverse, PolySeriesMatrix::identity(ring, 3));
}

TEST(InvertSeriesMatrix, DiagonalIsEntrywiseReciprocal) {
    const PolySeriesRing ring(gf(7), 2);
    const auto a = poly_matrix(ring, {{{2, 1}, {0}}, {{0}, {1, -1}}});
    EXPECT_EQ(invert_series_matrix(ring, a).inverse, poly_matrix(ring, {{{4, 5, 1}, {0}}, {{0}, {1, 1, 1}}}));
}

TEST(InvertSeriesMatrix, RandomThreeByThreeMatchesNewton) {
    const PrimeFieldRing f = gf(7);
    const PolySeriesRing ring(f, 6);
    Rng rng(21);
    for (;;) {
        std::vector<PolySeries> data;
        for (int k = 0; k < 9; ++k) {
            data.push_back(ring.from_coefficients({random_element(f, rng), random_element(f, rng), random_element(f, rng)}));
        }
        const PolySeriesMatrix a(3, 3, std::move(data));
        if (f.is_zero(det_gauss(f, constant_term(ring, a)))) continue;
        EXPECT_EQ(invert_series_matrix(ring, a).inverse, newton_inverse_oracle(ring, a));
        break;
    }
}

TEST(InvertSeriesMatrix, MultipliesBackToIdentity) {
    const PolySeriesRing ring(gf(7), 4);
    const auto a = poly_matrix(ring, {{{3, 1}, {1, 6}}, {{2}, {5, 2}}});
    EXPECT_EQ(mat_mul(invert_series_matrix(ring, a).inverse, a), PolySeriesMatrix::identity(ring, 2));
}

TEST(InvertSeriesMatrix, SingularLeadingMatrixIsRejected) {
    const PolySeriesRing ring(gf(7), 3);
    const auto a = poly_matrix(ring, {{{1, 1}, {2}}, {{2}, {4, 1}}});
    EXPECT_THROW((void)invert_series_matrix(ring, a), SingularLeadingMatrix);
    EXPECT_THROW((void)newton_inverse_oracle(ring, a), SingularLeadingMatrix);
}

TEST(InvertSeriesMatrix, ProductDegreesAreLogged) {
    const PolySeriesRing ring(gf(7), 4);
    const auto a = poly_matrix(ring, {{{3, 1}, {1, 6}}, {{2}, {5, 2}}});
    ProductLog log;
    {
        ProductLogScope scope(log);
        (void)invert_series_matrix(ring, a);
    }
    ASSERT_FALSE(log.empty());
    std::size_t max_coeff = 0;
    for (const auto& r : log) max_coeff = std::max({max_coeff, r.lhs_coeff_degree, r.rhs_coeff_degree});
    EXPECT_GE(max_coeff, 1u);
    EXPECT_LE(max_coeff, 4u);
}

TEST(PolymatrixProperties, Suite) { testing::expect_passed(verify::polymatrix_properties(verify::kDefaultSeed)); }

}  // namespace
}  // namespace kadj
