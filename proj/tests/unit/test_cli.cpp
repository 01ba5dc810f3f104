#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace kadj::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
protected:
    std::string write(const std::string& name, const std::string& content) {
        const auto path = std::filesystem::temp_directory_path() / ("kadj_cli_" + name);
        std::ofstream(path) << content;
        files_.push_back(path);
        return path.string();
    }

    static Result call(std::vector<std::string> args) {
        args.insert(args.begin(), "kadj");
        std::vector<const char*> argv;
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
        return {code, out.str(), err.str()};
    }

    void TearDown() override {
        for (const auto& f : files_) std::filesystem::remove(f);
    }

private:
    std::vector<std::filesystem::path> files_;
};

TEST(ParseMatrix, Scalars) {
    const RawMatrix raw = parse_matrix_text("2\n1 2\n3 4\n");
    EXPECT_EQ(to_integer_matrix(raw), Matrix<BigInt>::from_ints(IntegerRing{}, {{1, 2}, {3, 4}}));
}

TEST(ParseMatrix, ReducesModP) {
    const PrimeFieldRing f(7);
    EXPECT_EQ(to_field_matrix(parse_matrix_text("1\n-5\n"), f), Matrix<PrimeField>::from_ints(f, {{2}}));
}

TEST(ParseMatrix, PolynomialEntries) {
    const PolySeriesRing ring(PrimeFieldRing(7), 3);
    const auto m = to_series_matrix(parse_matrix_text("2\n1:1 0:0\n0:0 1:1\n"), ring);
    const auto one_plus_z = ring.from_coefficients({ring.base().one(), ring.base().one()});
    EXPECT_EQ(m, PolySeriesMatrix::identity(ring, 2).scaled(one_plus_z));
}

TEST(ParseMatrix, ErrorsCarryPositions) {
    try {
        (void)parse_matrix_text("2\n1 2\n3 4x\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 3u);
    }
    try {
        (void)parse_matrix_text("2\n1 2\n3 4:\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_EQ(e.column(), 5u);
    }
    EXPECT_THROW((void)parse_matrix_text(""), ParseError);
    EXPECT_THROW((void)parse_matrix_text("two\n"), ParseError);
    EXPECT_THROW((void)parse_matrix_text("2 2\n1 2\n3 4\n"), ParseError);
}

TEST(ParseMatrix, RowCountsMustAgree) {
    EXPECT_THROW((void)parse_matrix_text("2\n1 2\n3\n"), DimensionError);
    EXPECT_THROW((void)parse_matrix_text("2\n1 2\n"), DimensionError);
    EXPECT_THROW((void)parse_matrix_text("2\n1 2\n3 4\n5 6\n"), DimensionError);
}

TEST(Validate, FieldAndModeCombinations) {
    RunConfig c;
    c.input = "x";
    EXPECT_EQ(*validate(c).mode, Mode::division_free);
    c.mode = Mode::krylov;
    EXPECT_THROW((void)validate(c), ConfigError);
    c.field = parse_field("gf:7");
    EXPECT_NO_THROW((void)validate(c));
    c.partial_eval = true;
    EXPECT_THROW((void)validate(c), ConfigError);
    c.partial_eval = false;
    c.trunc = 3;
    EXPECT_THROW((void)validate(c), ConfigError);
    EXPECT_THROW((void)parse_field("gf:8"), InvalidModulus);
    EXPECT_THROW((void)parse_field("rational"), ConfigError);
}

TEST_F(CliTest, AdjointKrylovSwapMatrix) {
    const auto path = write("swap", "2\n0 1\n1 0\n");
    const Result r = call({"adjoint", "--field", "gf:7", "--mode", "krylov", "--seed", "1", "--check", "--json", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "{\"n\":2,\"mode\":\"krylov\",\"det\":\"6\",\"adjoint\":[[\"0\",\"6\"],[\"6\",\"0\"]],"
              "\"division_violations\":0,\"seed\":1,\"checked\":true}\n");
}

TEST_F(CliTest, DetDivisionFreeIntegers) {
    const auto path = write("m22", "2\n1 2\n3 4\n");
    const Result r = call({"det", "--field", "int", "--mode", "division-free", "--json", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "{\"n\":2,\"mode\":\"division-free\",\"det\":\"-2\",\"division_violations\":0,\"seed\":0,\"checked\":false}\n");
}

TEST_F(CliTest, IdentityInKrylovModeIsDegenerate) {
    const auto path = write("i3", "3\n1 0 0\n0 1 0\n0 0 1\n");
    const Result r = call({"adjoint", "--field", "gf:7", "--mode", "krylov", path});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("division-free"), std::string::npos);
    const Result d = call({"adjoint", "--field", "int", "--check", path});
    EXPECT_EQ(d.code, 0) << d.err;
    EXPECT_NE(d.out.find("checked: true"), std::string::npos);
}

TEST_F(CliTest, SingularMatrixInKrylovAdjointIsDegenerate) {
    const auto path = write("sing", "3\n1 2 3\n4 5 6\n5 7 9\n");
    EXPECT_EQ(call({"adjoint", "--field", "gf:10007", "--mode", "krylov", path}).code, 2);
    EXPECT_EQ(call({"adjoint", "--field", "gf:10007", "--mode", "division-free", "--check", path}).code, 0);
}

TEST_F(CliTest, InputErrorsExitThree) {
    const auto bad = write("bad", "2\n1 2\n3 x\n");
    EXPECT_EQ(call({"det", bad}).code, 3);
    const auto ragged = write("ragged", "2\n1 2\n3\n");
    EXPECT_EQ(call({"det", ragged}).code, 3);
    EXPECT_EQ(call({"det", "/nonexistent/matrix.txt"}).code, 3);
    const auto ok = write("ok", "2\n1 2\n3 4\n");
    EXPECT_EQ(call({"det", "--field", "int", "--mode", "krylov", ok}).code, 3);
    EXPECT_EQ(call({"det", "--field", "gf:9", ok}).code, 3);
    EXPECT_EQ(call({"det", "--bogus", ok}).code, 3);
    EXPECT_EQ(call({}).code, 3);
}

TEST_F(CliTest, ModesAgreeAndOutputIsDeterministic) {
    const auto path = write("m44", "4\n2 -1 0 3\n1 1 4 -2\n0 5 -3 1\n7 0 2 2\n");
    for (const char* mode : {"krylov", "division-free", "oracle"}) {
        const Result a = call({"adjoint", "--field", "gf:10007", "--mode", mode, "--seed", "5", "--check", path});
        const Result b = call({"adjoint", "--field", "gf:10007", "--mode", mode, "--seed", "5", "--check", path});
        EXPECT_EQ(a.code, 0) << mode << ": " << a.err;
        EXPECT_EQ(a.out, b.out);
    }
    const Result pe = call({"adjoint", "--field", "int", "--partial-eval", "--check", "--json", path});
    const Result plain = call({"adjoint", "--field", "int", "--check", "--json", path});
    EXPECT_EQ(pe.code, 0) << pe.err;
    EXPECT_EQ(pe.out, plain.out);
}

TEST_F(CliTest, InverseSeries) {
    const auto path = write("poly", "2\n1:1 0:0\n0:0 1:1\n");
    const Result r = call({"inverse-series", "--field", "gf:7", "--trunc", "3", "--check", "--json", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "{\"n\":2,\"mode\":\"division-free\",\"trunc\":3,\"det\":\"1:2:1:0\","
              "\"inverse\":[[\"1:6:1:6\",\"0:0:0:0\"],[\"0:0:0:0\",\"1:6:1:6\"]],"
              "\"division_violations\":0,\"seed\":0,\"checked\":true}\n");
    EXPECT_EQ(call({"inverse-series", "--field", "gf:7", path}).code, 3);
    EXPECT_EQ(call({"inverse-series", "--field", "gf:7", "--trunc", "0", path}).code, 3);
    const auto singular = write("polysing", "2\n0:1 1\n1 0:1\n");
    EXPECT_EQ(call({"inverse-series", "--field", "gf:7", "--trunc", "3", singular}).code, 0);
    const auto lead = write("polylead", "1\n0:1\n");
    EXPECT_EQ(call({"inverse-series", "--field", "gf:7", "--trunc", "3", lead}).code, 2);
}

TEST_F(CliTest, BenchReportsStages) {
    const Result r = call({"bench", "--sizes", "4,8", "--json"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("\"reverse step 2\""), std::string::npos);
    EXPECT_NE(r.out.find("\"forward step 5\""), std::string::npos);
    EXPECT_NE(r.out.find("\"step2_ratio\":2"), std::string::npos);
    const Result z = call({"bench", "--field", "int", "--sizes", "3"});
    EXPECT_EQ(z.code, 0) << z.err;
    EXPECT_NE(z.out.find("division-free"), std::string::npos);
}

}  // namespace
}  // namespace kadj::cli
