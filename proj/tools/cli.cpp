#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kadj/adjoint_reverse.hpp"
#include "kadj/division_free.hpp"
#include "kadj/krylov_det.hpp"
#include "kadj/linalg.hpp"
#include "kadj/random.hpp"
#include "kadj/verify.hpp"

namespace kadj::cli {

namespace {

using Json = nlohmann::ordered_json;

/// The cofactor oracle keeps 2^n partial minors; beyond this it is not desk scale.
constexpr std::size_t kIntegerOracleLimit = 16;
constexpr std::uint64_t kBenchModulus = 10007;

class CheckMismatch : public Error {
public:
    using Error::Error;
};

const char* subcommand_name(Subcommand s) {
    switch (s) {
        case Subcommand::det: return "det";
        case Subcommand::adjoint: return "adjoint";
        case Subcommand::inverse_series: return "inverse-series";
        case Subcommand::selftest: return "selftest";
        case Subcommand::bench: return "bench";
    }
    return "?";
}

bool is_decimal(const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

/// Splits "c0:c1:..." and checks every piece; `column` points at the token start.
std::vector<std::string> split_coefficients(const RawMatrix::Token& tok) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t colon = tok.text.find(':', start);
        std::string piece = tok.text.substr(start, colon == std::string::npos ? std::string::npos : colon - start);
        if (!is_decimal(piece)) {
            throw ParseError("malformed entry '" + tok.text + "' (expected a decimal integer or c0:c1:...)", tok.line,
                             tok.column + start);
        }
        parts.push_back(std::move(piece));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    return parts;
}

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open matrix file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <class M>
Json matrix_json(const M& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class M>
void print_matrix(std::ostream& out, const M& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << ' ';
        for (std::size_t j = 0; j < m.cols(); ++j) out << ' ' << to_string(m(i, j));
        out << '\n';
    }
}

template <class M>
void require_square(const M& a) {
    if (!a.square()) throw DimensionError("matrix is not square");
}

// ---- det / adjoint ------------------------------------------------------------

template <class E>
struct Outcome {
    E det;
    std::optional<Matrix<E>> adjugate;
    std::uint64_t division_violations = 0;
};

/// Runs det or adjoint for a field or integer matrix under the chosen mode.
template <CommutativeRing R>
Outcome<ElementOf<R>> compute(const RunConfig& c, const R& ring, const Matrix<ElementOf<R>>& a) {
    using E = ElementOf<R>;
    constexpr bool is_field = std::is_same_v<R, PrimeFieldRing>;
    const bool want_adj = c.subcommand == Subcommand::adjoint;
    const std::uint64_t seed = c.seed.value_or(0);
    switch (*c.mode) {
        case Mode::krylov:
            if constexpr (is_field) {
                if (!want_adj) return {determinant(ring, a, seed), std::nullopt, 0};
                auto r = adjoint(ring, a, seed);
                return {r.det, std::move(r.adjugate), r.division_violations};
            }
            break;
        case Mode::division_free: {
            if (!want_adj) {
                auto r = det_division_free(ring, a);
                return {r.det, std::nullopt, r.division_violations};
            }
            DivisionFreeOptions options;
            options.partial_evaluation = c.partial_eval;
            auto r = adjoint_division_free(ring, a, options);
            return {r.det, std::move(r.adjugate), r.division_violations};
        }
        case Mode::oracle: {
            if constexpr (!is_field) {
                if (a.rows() > kIntegerOracleLimit) {
                    throw ConfigError("integer oracle is limited to n <= " + std::to_string(kIntegerOracleLimit));
                }
            }
            E det = ring.zero();
            if constexpr (is_field) {
                det = det_gauss(ring, a);
            } else {
                det = cofactor_det(ring, a);
            }
            if (!want_adj) return {det, std::nullopt, 0};
            return {det, adjugate_oracle(ring, a), 0};
        }
    }
    throw ConfigError("mode not available for this field");
}

/// Independent recomputation: the oracle, or the division-free pipeline when
/// the oracle itself produced the result.
template <CommutativeRing R>
void check_outcome(const RunConfig& c, const R& ring, const Matrix<ElementOf<R>>& a, const Outcome<ElementOf<R>>& got) {
    RunConfig other = c;
    other.mode = *c.mode == Mode::oracle ? Mode::division_free : Mode::oracle;
    other.partial_eval = false;
    const Outcome<ElementOf<R>> want = compute(other, ring, a);
    if (!(want.det == got.det)) throw CheckMismatch("determinant disagrees with " + std::string(mode_name(*other.mode)));
    if (got.adjugate && !(*want.adjugate == *got.adjugate)) {
        throw CheckMismatch("adjugate disagrees with " + std::string(mode_name(*other.mode)));
    }
}

template <CommutativeRing R>
void det_or_adjoint(const RunConfig& c, const R& ring, const Matrix<ElementOf<R>>& a, std::ostream& out) {
    require_square(a);
    const auto got = compute(c, ring, a);
    if (c.check) check_outcome(c, ring, a, got);
    const std::uint64_t seed = c.seed.value_or(0);
    if (c.json) {
        Json j;
        j["n"] = a.rows();
        j["mode"] = mode_name(*c.mode);
        j["det"] = to_string(got.det);
        if (got.adjugate) j["adjoint"] = matrix_json(*got.adjugate);
        j["division_violations"] = got.division_violations;
        j["seed"] = seed;
        j["checked"] = c.check;
        out << j.dump() << '\n';
        return;
    }
    out << "n: " << a.rows() << '\n'
        << "field: " << c.field->name() << '\n'
        << "mode: " << mode_name(*c.mode) << '\n'
        << "seed: " << seed << " (" << kRngName << ")\n"
        << "det: " << to_string(got.det) << '\n';
    if (got.adjugate) {
        out << "adjoint:\n";
        print_matrix(out, *got.adjugate);
    }
    out << "division_violations: " << got.division_violations << '\n' << "checked: " << (c.check ? "true" : "false") << '\n';
}

// ---- inverse-series -------------------------------------------------------------

void inverse_series(const RunConfig& c, const RawMatrix& raw, std::ostream& out) {
    const PolySeriesRing ring(PrimeFieldRing(c.field->modulus), *c.trunc);
    const PolySeriesMatrix a = to_series_matrix(raw, ring);
    require_square(a);
    PolySeriesMatrix inverse = PolySeriesMatrix::zero(ring, a.rows(), a.cols());
    PolySeries det = ring.zero();
    std::uint64_t violations = 0;
    if (*c.mode == Mode::oracle) {
        inverse = newton_inverse_oracle(ring, a);
        det = det_gauss(ring, a);
    } else {
        DivisionFreeOptions options;
        options.partial_evaluation = c.partial_eval;
        SeriesInverse r = invert_series_matrix(ring, a, options);
        inverse = std::move(r.inverse);
        det = std::move(r.det);
        violations = r.division_violations;
    }
    if (c.check) {
        const PolySeriesMatrix want =
            *c.mode == Mode::oracle ? invert_series_matrix(ring, a).inverse : newton_inverse_oracle(ring, a);
        if (!(want == inverse)) throw CheckMismatch("series inverse disagrees with the independent computation");
        if (!(mat_mul(a, inverse) == PolySeriesMatrix::identity(ring, a.rows()))) {
            throw CheckMismatch("A * A^-1 is not the identity mod z^(N+1)");
        }
    }
    const std::uint64_t seed = c.seed.value_or(0);
    if (c.json) {
        Json j;
        j["n"] = a.rows();
        j["mode"] = mode_name(*c.mode);
        j["trunc"] = *c.trunc;
        j["det"] = to_string(det);
        j["inverse"] = matrix_json(inverse);
        j["division_violations"] = violations;
        j["seed"] = seed;
        j["checked"] = c.check;
        out << j.dump() << '\n';
        return;
    }
    out << "n: " << a.rows() << '\n'
        << "field: " << c.field->name() << '\n'
        << "mode: " << mode_name(*c.mode) << '\n'
        << "trunc: " << *c.trunc << '\n'
        << "det: " << to_string(det) << '\n'
        << "inverse:\n";
    print_matrix(out, inverse);
    out << "division_violations: " << violations << '\n' << "checked: " << (c.check ? "true" : "false") << '\n';
}

// ---- selftest -------------------------------------------------------------------

int selftest(const RunConfig& c, std::ostream& out) {
    const std::uint64_t seed = c.seed.value_or(verify::kDefaultSeed);
    const verify::Report report = verify::module_properties(seed);
    std::size_t failed = 0;
    Json checks = Json::array();
    for (const auto& r : report) {
        failed += !r.passed;
        if (c.json) {
            checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}, {"seconds", r.seconds}});
        } else {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        }
    }
    if (c.json) {
        out << Json{{"seed", seed}, {"checks", checks}, {"failed", failed}}.dump() << '\n';
    } else {
        out << report.size() - failed << '/' << report.size() << " checks passed (seed " << seed << ")\n";
    }
    return failed == 0 ? kSuccess : kCheckMismatch;
}

// ---- bench ------------------------------------------------------------------------

struct StageSample {
    std::string stage;
    OpCounts ops;
    double seconds;
};

class StageTimer {
public:
    template <class F>
    auto operator()(const std::string& name, F&& f) {
        const OpCounts before = thread_op_counts();
        const auto start = std::chrono::steady_clock::now();
        auto result = f();
        samples.push_back({name, thread_op_counts() - before,
                           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
        return result;
    }

    std::vector<StageSample> samples;
};

template <CommutativeRing R>
std::pair<std::vector<StageSample>, std::size_t> bench_stages(const R& ring, const Matrix<ElementOf<R>>& a,
                                                              const RowVector<ElementOf<R>>& u,
                                                              const ColVector<ElementOf<R>>& v) {
    using E = ElementOf<R>;
    const BabyGiantParams p = baby_giant_params(a.rows());
    StageTimer t;
    auto baby = t("forward step 1", [&] { return baby_steps(a, v, p.r); });
    auto power = t("forward step 2", [&] { return power_with_tape(a, p.r); });
    auto giant = t("forward step 3", [&] { return giant_steps(u, power.power, p.s); });
    auto h = t("forward step 4", [&] { return project_sequence(giant, baby, p.n); });
    auto st = t("forward step 5", [&] { return finish_sequence(ring, h); });
    const std::size_t tape_length = power.tape.products.size();
    const DetTrace<E> trace{a,          u,           v,
                            p,          std::move(baby),
                            std::move(power.power), std::move(power.tape),
                            std::move(giant),       std::move(h),
                            std::move(st.hankel),   std::move(st.hankel_a),
                            std::move(st.det_hankel), std::move(st.det_hankel_a),
                            std::move(st.delta),    std::move(st.minpoly),
                            {}};
    auto grid = t("reverse step 5", [&] { return assemble_dh_grid(ring, diff_step5(ring, trace), p.r, p.s, p.n); });
    auto g4 = t("reverse step 4", [&] { return diff_step4(ring, trace, grid); });
    auto d_b = t("reverse step 3", [&] { return diff_step3(ring, trace, g4.d_giant); });
    auto d_a = t("reverse step 2", [&] { return diff_step2(ring, trace.tape, d_b); });
    (void)t("reverse step 1", [&] { return diff_step1(ring, trace, g4.d_baby, d_a); });
    return {std::move(t.samples), tape_length};
}

int bench(const RunConfig& c, std::ostream& out) {
    const std::uint64_t seed = c.seed.value_or(0);
    Json runs = Json::array();
    for (std::size_t n : c.bench_sizes) {
        if (n == 0) throw ConfigError("bench sizes must be positive");
        Rng rng(seed + n);
        std::vector<StageSample> samples;
        std::size_t tape_length = 0;
        if (*c.mode == Mode::krylov) {
            const PrimeFieldRing f(c.field->modulus);
            const Matrix<PrimeField> a = random_matrix(f, n, n, rng);
            const auto found = randomized_trace(f, a, rng.next()).trace;
            std::tie(samples, tape_length) = bench_stages(f, a, found.u, found.v);
        } else if (c.field->kind == FieldKind::prime) {
            const PrimeFieldRing f(c.field->modulus);
            const auto s = division_free_setup(f, random_matrix(f, n, n, rng));
            std::tie(samples, tape_length) = bench_stages(s.series, s.z, s.u, s.v);
        } else {
            const auto s = division_free_setup(IntegerRing{}, random_int_matrix(n, n, -9, 9, rng));
            std::tie(samples, tape_length) = bench_stages(s.series, s.z, s.u, s.v);
        }
        std::uint64_t step2 = 0;
        for (const auto& s : samples)
            if (s.stage == "reverse step 2") step2 = s.ops.mul;
        const double ratio = static_cast<double>(step2) / (static_cast<double>(n) * n * n * std::max<std::size_t>(1, tape_length));
        if (c.json) {
            Json stages = Json::array();
            for (const auto& s : samples) {
                stages.push_back({{"stage", s.stage}, {"mul", s.ops.mul}, {"add", s.ops.add}, {"seconds", s.seconds}});
            }
            runs.push_back({{"n", n}, {"stages", stages}, {"tape_length", tape_length}, {"step2_ratio", ratio}});
            continue;
        }
        out << "n = " << n << "  (" << c.field->name() << ", " << mode_name(*c.mode) << ", tape length " << tape_length
            << ")\n";
        for (const auto& s : samples) {
            char line[128];
            std::snprintf(line, sizeof line, "  %-16s %14llu mul %14llu add %10.4f s\n", s.stage.c_str(),
                          static_cast<unsigned long long>(s.ops.mul), static_cast<unsigned long long>(s.ops.add),
                          s.seconds);
            out << line;
        }
        out << "  reverse step 2 muls / (n^3 * tape length) = " << ratio << '\n';
    }
    if (c.json) {
        out << Json{{"field", c.field->name()}, {"mode", mode_name(*c.mode)}, {"seed", seed}, {"runs", runs}}.dump()
            << '\n';
    }
    return kSuccess;
}

}  // namespace

std::string FieldSpec::name() const { return kind == FieldKind::integer ? "int" : "gf:" + std::to_string(modulus); }

FieldSpec parse_field(const std::string& text) {
    if (text == "int") return {FieldKind::integer, 0};
    if (text.rfind("gf:", 0) == 0 && text.size() > 3) {
        const std::string digits = text.substr(3);
        if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 19) {
            const std::uint64_t p = std::stoull(digits);
            (void)PrimeFieldRing(p);
            return {FieldKind::prime, p};
        }
    }
    throw ConfigError("invalid field '" + text + "' (expected gf:<prime> or int)");
}

Mode parse_mode(const std::string& text) {
    if (text == "krylov") return Mode::krylov;
    if (text == "division-free") return Mode::division_free;
    if (text == "oracle") return Mode::oracle;
    throw ConfigError("invalid mode '" + text + "' (expected krylov, division-free or oracle)");
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::krylov: return "krylov";
        case Mode::division_free: return "division-free";
        case Mode::oracle: return "oracle";
    }
    return "?";
}

RunConfig validate(RunConfig c) {
    const std::string sub = subcommand_name(c.subcommand);
    if (c.trunc && c.subcommand != Subcommand::inverse_series) throw ConfigError("--trunc applies to inverse-series only");
    switch (c.subcommand) {
        case Subcommand::selftest: return c;
        case Subcommand::bench:
            if (!c.field) c.field = FieldSpec{FieldKind::prime, kBenchModulus};
            if (!c.mode) c.mode = c.field->kind == FieldKind::prime ? Mode::krylov : Mode::division_free;
            if (*c.mode == Mode::oracle) throw ConfigError("bench has no oracle mode");
            break;
        case Subcommand::inverse_series:
            if (!c.field || c.field->kind != FieldKind::prime) throw ConfigError("inverse-series needs --field gf:p");
            if (!c.trunc) throw ConfigError("inverse-series needs --trunc N");
            if (!c.mode) c.mode = Mode::division_free;
            if (*c.mode == Mode::krylov) throw ConfigError("inverse-series runs in division-free or oracle mode");
            break;
        case Subcommand::det:
        case Subcommand::adjoint:
            if (!c.field) c.field = FieldSpec{};
            if (!c.mode) c.mode = c.field->kind == FieldKind::prime ? Mode::krylov : Mode::division_free;
            break;
    }
    if (*c.mode == Mode::krylov && c.field->kind != FieldKind::prime) {
        throw ConfigError("krylov mode requires --field gf:p; use --mode division-free over int");
    }
    if (c.partial_eval && *c.mode != Mode::division_free) throw ConfigError("--partial-eval requires --mode division-free");
    if (c.subcommand != Subcommand::bench && c.input.empty()) throw ConfigError(sub + " needs a matrix file");
    return c;
}

RawMatrix parse_matrix_text(const std::string& text) {
    std::vector<std::vector<RawMatrix::Token>> lines;
    std::size_t line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<RawMatrix::Token> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            if (line[i] == ' ' || line[i] == '\t') {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            toks.push_back({line.substr(start, i - start), line_no, start + 1});
        }
        lines.push_back(std::move(toks));
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.empty() || lines.front().empty()) throw ParseError("missing dimension n", 1, 1);
    const auto& head = lines.front();
    if (head.size() != 1) throw ParseError("line 1 must hold only the dimension n", 1, head[1].column);
    const std::string& nt = head[0].text;
    if (nt.find_first_not_of("0123456789") != std::string::npos || nt.size() > 9 || std::stoul(nt) == 0) {
        throw ParseError("dimension must be a positive integer, got '" + nt + "'", 1, head[0].column);
    }
    RawMatrix raw;
    raw.n = std::stoul(nt);
    if (lines.size() - 1 != raw.n) {
        throw DimensionError("expected " + std::to_string(raw.n) + " matrix rows, found " + std::to_string(lines.size() - 1));
    }
    for (std::size_t r = 1; r < lines.size(); ++r) {
        if (lines[r].size() != raw.n) {
            throw DimensionError("row " + std::to_string(r) + " (line " + std::to_string(r + 1) + ") has " +
                                 std::to_string(lines[r].size()) + " entries, expected " + std::to_string(raw.n));
        }
        for (const auto& tok : lines[r]) (void)split_coefficients(tok);
        raw.rows.push_back(std::move(lines[r]));
    }
    return raw;
}

RawMatrix parse_matrix_file(const std::string& path) { return parse_matrix_text(read_input(path)); }

Matrix<BigInt> to_integer_matrix(const RawMatrix& raw) {
    std::vector<BigInt> data;
    for (const auto& row : raw.rows) {
        for (const auto& tok : row) {
            const auto parts = split_coefficients(tok);
            if (parts.size() != 1) throw ParseError("polynomial entry '" + tok.text + "' in a scalar matrix", tok.line, tok.column);
            data.push_back(BigInt::from_string(parts[0]));
        }
    }
    return Matrix<BigInt>(raw.n, raw.n, std::move(data));
}

Matrix<PrimeField> to_field_matrix(const RawMatrix& raw, const PrimeFieldRing& ring) {
    return to_integer_matrix(raw).map([&](const BigInt& x) { return ring.from_unsigned(x.mod_u64(ring.modulus())); });
}

PolySeriesMatrix to_series_matrix(const RawMatrix& raw, const PolySeriesRing& ring) {
    const PrimeFieldRing& f = ring.base();
    std::vector<PolySeries> data;
    for (const auto& row : raw.rows) {
        for (const auto& tok : row) {
            const auto parts = split_coefficients(tok);
            if (parts.size() > ring.order() + 1) {
                throw ParseError("entry '" + tok.text + "' has degree above the truncation order", tok.line, tok.column);
            }
            std::vector<PrimeField> coeffs;
            for (const auto& p : parts) coeffs.push_back(f.from_unsigned(BigInt::from_string(p).mod_u64(f.modulus())));
            data.push_back(ring.from_coefficients(std::move(coeffs)));
        }
    }
    return PolySeriesMatrix(raw.n, raw.n, std::move(data));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig c = validate(config);
        switch (c.subcommand) {
            case Subcommand::selftest: return selftest(c, out);
            case Subcommand::bench: return bench(c, out);
            case Subcommand::inverse_series: inverse_series(c, parse_matrix_file(c.input), out); return kSuccess;
            case Subcommand::det:
            case Subcommand::adjoint: {
                const RawMatrix raw = parse_matrix_file(c.input);
                if (c.field->kind == FieldKind::integer) {
                    det_or_adjoint(c, IntegerRing{}, to_integer_matrix(raw), out);
                } else {
                    const PrimeFieldRing f(c.field->modulus);
                    det_or_adjoint(c, f, to_field_matrix(raw, f), out);
                }
                return kSuccess;
            }
        }
    } catch (const SingularHankel& e) {
        err << "kadj: " << e.what() << "\nhint: the minimal polynomial is degenerate; rerun with --mode division-free\n";
        return kDegenerate;
    } catch (const NonInvertibleHA& e) {
        err << "kadj: " << e.what() << '\n';
        return kDegenerate;
    } catch (const SingularLeadingMatrix& e) {
        err << "kadj: " << e.what() << '\n';
        return kDegenerate;
    } catch (const CheckMismatch& e) {
        err << "kadj: check failed: " << e.what() << '\n';
        return kCheckMismatch;
    } catch (const ParseError& e) {
        err << "kadj: parse error: " << e.what() << '\n';
        return kInputError;
    } catch (const ConfigError& e) {
        err << "kadj: " << e.what() << '\n';
        return kInputError;
    } catch (const DimensionError& e) {
        err << "kadj: dimension error: " << e.what() << '\n';
        return kInputError;
    } catch (const InvalidModulus& e) {
        err << "kadj: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "kadj: internal error: " << e.what() << '\n';
        return kInternalFailure;
    }
    return kInternalFailure;
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact determinants, adjugates and series inverses via Krylov reverse-mode differentiation", "kadj"};
    app.require_subcommand(1);

    RunConfig config;
    std::string field;
    std::string mode;
    std::uint64_t seed = 0;
    std::size_t trunc = 0;

    auto common = [&](CLI::App* sub, bool takes_input) {
        sub->add_option("--field", field, "gf:<prime> or int");
        sub->add_option("--mode", mode, "krylov, division-free or oracle");
        sub->add_option("--seed", seed, "64-bit seed of the mt19937_64 projection generator");
        sub->add_flag("--json", config.json, "emit one JSON object");
        if (takes_input) {
            sub->add_option("matrix", config.input, "matrix file, '-' for standard input")->required();
            sub->add_flag("--check", config.check, "recompute independently and compare exactly");
            sub->add_flag("--partial-eval", config.partial_eval, "collapse trace series once no longer read");
            sub->add_option("--trunc", trunc, "truncation order N (inverse-series)");
        }
    };
    CLI::App* det = app.add_subcommand("det", "determinant");
    CLI::App* adj = app.add_subcommand("adjoint", "adjugate and determinant");
    CLI::App* inv = app.add_subcommand("inverse-series", "inverse of a polynomial matrix mod z^(N+1)");
    CLI::App* self = app.add_subcommand("selftest", "run the property suites of every module");
    CLI::App* bench_cmd = app.add_subcommand("bench", "per-stage op counts and wall time");
    for (CLI::App* s : {det, adj, inv}) common(s, true);
    common(self, false);
    common(bench_cmd, false);
    bench_cmd->add_option("--sizes", config.bench_sizes, "matrix sizes")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    const std::pair<CLI::App*, Subcommand> subs[] = {{det, Subcommand::det},
                                                     {adj, Subcommand::adjoint},
                                                     {inv, Subcommand::inverse_series},
                                                     {self, Subcommand::selftest},
                                                     {bench_cmd, Subcommand::bench}};
    for (const auto& [app_ptr, kind] : subs)
        if (app_ptr->parsed()) config.subcommand = kind;
    CLI::App* chosen = app.get_subcommands().front();
    try {
        if (chosen->count("--field")) config.field = parse_field(field);
        if (chosen->count("--mode")) config.mode = parse_mode(mode);
    } catch (const Error& e) {
        err << "kadj: " << e.what() << '\n';
        return kInputError;
    }
    if (chosen->count("--seed")) config.seed = seed;
    if (chosen->get_option_no_throw("--trunc") && chosen->count("--trunc")) config.trunc = trunc;
    return run(config, out, err);
}

}  // namespace kadj::cli
