#include "support.hpp"

#include "kadj/division_free.hpp"

namespace kadj {
namespace {

using testing::elems;
using testing::gf;
using testing::imat;

Matrix<BigInt> constant_part(const IntegerRing& z, const Matrix<ElementOf<SeriesRing<IntegerRing>>>& m) {
    return constant_term(SeriesRing<IntegerRing>(z, 0), m);
}

TEST(Projection, CycleThree) {
    const IntegerRing z;
    const auto p = choose_projection(3);
    EXPECT_EQ(p.c_matrix(z), imat({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
    const auto setup = division_free_setup(z, Matrix<BigInt>::zero(z, 3, 3));
    const auto t = det_forward(setup.series, setup.z, setup.u, setup.v);
    std::vector<BigInt> h0;
    for (const auto& x : t.h.values()) h0.push_back(x[0]);
    EXPECT_EQ(h0, elems(z, {1, 0, 0, 1, 0, 0}));
    EXPECT_EQ(constant_part(z, t.hankel), imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    EXPECT_EQ(constant_part(z, t.hankel_a), imat({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
}

TEST(Projection, OneAndTwo) {
    const IntegerRing z;
    EXPECT_EQ(choose_projection(1).c_matrix(z), imat({{1}}));
    EXPECT_EQ(choose_projection(2).c_matrix(z), imat({{0, 1}, {1, 0}}));
    const auto s2 = division_free_setup(z, Matrix<BigInt>::zero(z, 2, 2));
    const auto t = det_forward(s2.series, s2.z, s2.u, s2.v);
    EXPECT_EQ(constant_part(z, t.hankel), Matrix<BigInt>::identity(z, 2));
    EXPECT_EQ(constant_part(z, t.hankel_a), imat({{0, 1}, {1, 0}}));
    EXPECT_THROW((void)choose_projection(0), DimensionMismatch);
}

TEST(BuildZ, Entries) {
    const IntegerRing z;
    const SeriesRing<IntegerRing> s(z, 1);
    const auto one = build_z(s, imat({{5}}), imat({{1}}));
    EXPECT_EQ(one(0, 0), s.from_coefficients(elems(z, {1, 4})));
    const auto c = choose_projection(3).c_matrix(z);
    const SeriesRing<IntegerRing> s3(z, 3);
    EXPECT_EQ(build_z(s3, c, c), c.map([&](const BigInt& x) { return s3.constant(x); }));
    const auto a = imat({{1, -2, 3}, {4, 5, -6}, {7, 8, 9}});
    EXPECT_EQ(build_z(s3, a, c).map([](const auto& x) { return series_eval_at_one(x); }), a);
}

TEST(DetDivisionFree, Examples) {
    const IntegerRing z;
    const auto two = det_division_free(z, imat({{1, 2}, {3, 4}}));
    EXPECT_EQ(two.det, BigInt(-2));
    EXPECT_EQ(two.division_violations, 0u);
    EXPECT_EQ(det_division_free(z, Matrix<BigInt>::identity(z, 5)).det, BigInt(1));
    EXPECT_EQ(det_division_free(z, imat({{1, 2}, {2, 4}})).det, BigInt(0));
}

TEST(AdjointDivisionFree, Examples) {
    const IntegerRing z;
    const auto r = adjoint_division_free(z, imat({{1, 2}, {3, 4}}));
    EXPECT_EQ(r.adjugate, imat({{4, -2}, {-3, 1}}));
    EXPECT_EQ(r.det, BigInt(-2));
    EXPECT_EQ(r.division_violations, 0u);
    EXPECT_EQ(adjoint_division_free(z, Matrix<BigInt>::zero(z, 3, 3)).adjugate, Matrix<BigInt>::zero(z, 3, 3));
    EXPECT_EQ(adjoint_division_free(z, Matrix<BigInt>::identity(z, 4)).adjugate, Matrix<BigInt>::identity(z, 4));
}

TEST(AdjointDivisionFree, NilpotentShift) {
    const IntegerRing z;
    const auto a = imat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    const auto r = adjoint_division_free(z, a);
    EXPECT_EQ(r.adjugate, imat({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    EXPECT_EQ(r.det, BigInt(0));
}

TEST(AdjointDivisionFree, WorksOverPrimeFields) {
    const auto f = gf(7);
    const auto a = testing::mat(f, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    EXPECT_EQ(adjoint_division_free(f, a).adjugate, a);
}

TEST(PartialEvaluation, ZeroWatermarksAreNoOps) {
    const IntegerRing z;
    const auto a = imat({{2, -1, 0}, {3, 3, 1}, {-4, 0, 5}});
    WatermarkSchedule zeros;
    for (ReverseStage s : kReverseOrder) zeros.push_back({s, TraceField::matrix, 0});
    const auto plain = adjoint_division_free(z, a);
    const auto pe = adjoint_division_free(z, a, DivisionFreeOptions{true, zeros});
    EXPECT_EQ(pe.adjugate, plain.adjugate);
    EXPECT_EQ(pe.det, plain.det);
}

TEST(PartialEvaluation, ConservativeScheduleIsExact) {
    const IntegerRing z;
    const auto a = imat({{2, -1, 0}, {3, 3, 1}, {-4, 0, 5}});
    const auto plain = adjoint_division_free(z, a);
    const auto pe = adjoint_division_free(z, a, DivisionFreeOptions{true, conservative_schedule(3)});
    EXPECT_EQ(pe.adjugate, plain.adjugate);
    EXPECT_EQ(pe.det, plain.det);
}

TEST(PartialEvaluation, CollapsedFieldsArePoisoned) {
    const IntegerRing z;
    const auto a = imat({{2, -1, 0}, {3, 3, 1}, {-4, 0, 5}});
    const WatermarkSchedule aggressive{{ReverseStage::step5, TraceField::baby_vectors, 2}};
    EXPECT_THROW((void)adjoint_division_free(z, a, DivisionFreeOptions{true, aggressive}), WatermarkViolation);
    const WatermarkSchedule late{{ReverseStage::step3, TraceField::matrix, 1}};
    EXPECT_THROW((void)adjoint_division_free(z, a, DivisionFreeOptions{true, late}), WatermarkViolation);
}

TEST(PartialEvaluation, EvaluatorRecordsCollapsedFields) {
    const IntegerRing z;
    auto setup = division_free_setup(z, imat({{1, 2}, {3, 4}}));
    auto trace = det_forward(setup.series, setup.z, setup.u, setup.v);
    PartialEvaluator pe(last_use_schedule(2));
    (void)reverse_pass(setup.series, trace, pe);
    EXPECT_EQ(pe.collapsed().count(TraceField::delta), 1u);
    EXPECT_EQ(pe.collapsed().count(TraceField::giant_vectors), 1u);
    EXPECT_EQ(pe.collapsed().count(TraceField::matrix), 0u);
    EXPECT_EQ(trace.delta[0], BigInt(0));
    EXPECT_EQ(series_eval_at_one(trace.delta), BigInt(-2));
}

TEST(DivisionFreeProperties, Suite) { testing::expect_passed(verify::division_free_properties(verify::kDefaultSeed)); }

}  // namespace
}  // namespace kadj
