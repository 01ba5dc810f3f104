#pragma once

// kadj command-line front end: matrix file parsing, run configuration and
// dispatch. Kept in a library so the tests can drive it without a process.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kadj/linalg/matrix.hpp"
#include "kadj/polymatrix.hpp"
#include "kadj/rings.hpp"

namespace kadj::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInternalFailure = 1,
    kDegenerate = 2,
    kInputError = 3,
    kCheckMismatch = 4,
};

enum class Subcommand { det, adjoint, inverse_series, selftest, bench };
enum class FieldKind { prime, integer };
enum class Mode { krylov, division_free, oracle };

struct FieldSpec {
    FieldKind kind = FieldKind::integer;
    std::uint64_t modulus = 0;  ///< prime fields only

    std::string name() const;
};

/// "gf:p" or "int". Throws kadj::Error (InvalidModulus for a bad p).
FieldSpec parse_field(const std::string& text);
Mode parse_mode(const std::string& text);
const char* mode_name(Mode m);

struct RunConfig {
    Subcommand subcommand = Subcommand::det;
    std::optional<FieldSpec> field;  ///< unset: subcommand default
    std::optional<Mode> mode;
    std::string input;  ///< path, or "-" for standard input
    std::optional<std::uint64_t> seed;  ///< unset: 0, or the built-in seed for selftest
    bool check = false;
    bool partial_eval = false;
    std::optional<std::size_t> trunc;
    bool json = false;
    std::vector<std::size_t> bench_sizes{8, 16, 32, 64};
};

class ConfigError : public Error {
public:
    using Error::Error;
};

/// Fills subcommand defaults and rejects inconsistent combinations
/// (krylov needs gf:p, int allows division-free or oracle, --trunc belongs
/// to inverse-series). Throws ConfigError.
RunConfig validate(RunConfig config);

/// Whitespace-separated tokens of a matrix file, with their positions.
struct RawMatrix {
    struct Token {
        std::string text;
        std::size_t line;
        std::size_t column;
    };
    std::size_t n = 0;
    std::vector<std::vector<Token>> rows;
};

/// Line 1: n; lines 2..n+1: n entries each. Entries are decimal integers or
/// colon-joined coefficient lists c0:c1:...:cd.
/// Throws ParseError (with line and column) or DimensionError.
RawMatrix parse_matrix_text(const std::string& text);
RawMatrix parse_matrix_file(const std::string& path);

Matrix<BigInt> to_integer_matrix(const RawMatrix& raw);
Matrix<PrimeField> to_field_matrix(const RawMatrix& raw, const PrimeFieldRing& ring);
PolySeriesMatrix to_series_matrix(const RawMatrix& raw, const PolySeriesRing& ring);

/// Executes a validated config; returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line handling (argument parsing, validation, run).
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kadj::cli
