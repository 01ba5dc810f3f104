#include "kadj/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <sstream>

#include "kadj/adjoint_reverse.hpp"
#include "kadj/division_free.hpp"
#include "kadj/dual_oracle.hpp"
#include "kadj/hankel.hpp"
#include "kadj/krylov_det.hpp"
#include "kadj/linalg.hpp"
#include "kadj/polymatrix.hpp"
#include "kadj/random.hpp"

namespace kadj::verify {

namespace {

constexpr std::uint64_t kPrime = 10007;

PrimeFieldRing field() { return PrimeFieldRing(kPrime); }

/// Distinct sub-seeds so suites do not share random streams.
std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) { return seed * 0x9e3779b97f4a7c15ULL + salt; }

bool fail(std::string& detail, const std::string& msg) {
    detail = msg;
    return false;
}

template <CommutativeRing R>
bool is_scalar_identity(const R& ring, const Matrix<ElementOf<R>>& m, const ElementOf<R>& d) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!(m(i, j) == (i == j ? d : ring.zero()))) return false;
    return true;
}

template <CommutativeRing R>
bool adjugate_identities(const R& ring, const Matrix<ElementOf<R>>& a, const Matrix<ElementOf<R>>& adj,
                         const ElementOf<R>& det) {
    return is_scalar_identity(ring, mat_mul(a, adj), det) && is_scalar_identity(ring, mat_mul(adj, a), det);
}

/// Random matrix over GF(p) that is nonsingular; derogatory draws are
/// left to the caller since they are astronomically rare at p = 10007.
Matrix<PrimeField> random_nonsingular(const PrimeFieldRing& f, std::size_t n, Rng& rng) {
    for (;;) {
        Matrix<PrimeField> a = random_matrix(f, n, n, rng);
        if (!f.is_zero(det_gauss(f, a))) return a;
    }
}

/// Random rank-(n-1) matrix: the last row is a random combination of the others.
Matrix<PrimeField> random_singular(const PrimeFieldRing& f, std::size_t n, Rng& rng) {
    Matrix<PrimeField> a = random_matrix(f, n, n, rng);
    for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = f.zero();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const PrimeField c = random_element(f, rng);
        for (std::size_t j = 0; j < n; ++j) a(n - 1, j) += c * a(i, j);
    }
    return a;
}

template <RingElement E>
E horner(const std::vector<E>& coeffs, const E& x) {
    E acc = coeffs.back();
    for (std::size_t k = coeffs.size() - 1; k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

std::vector<std::int64_t> derivative(const std::vector<std::int64_t>& p) {
    std::vector<std::int64_t> d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(static_cast<std::int64_t>(k) * p[k]);
    if (d.empty()) d.push_back(0);
    return d;
}

template <CommutativeRing R>
std::vector<ElementOf<R>> lift_ints(const R& ring, const std::vector<std::int64_t>& xs) {
    std::vector<ElementOf<R>> out;
    for (auto x : xs) out.push_back(ring.from_int(x));
    return out;
}

template <CommutativeRing R, class Sample>
bool ring_axioms(const R& ring, Sample&& sample, int trials, std::string& detail) {
    for (int t = 0; t < trials; ++t) {
        const auto a = sample();
        const auto b = sample();
        const auto c = sample();
        if (!((a + b) + c == a + (b + c))) return fail(detail, ring.name() + ": + not associative");
        if (!((a * b) * c == a * (b * c))) return fail(detail, ring.name() + ": * not associative");
        if (!(a + b == b + a) || !(a * b == b * a)) return fail(detail, ring.name() + ": not commutative");
        if (!(a * (b + c) == a * b + a * c)) return fail(detail, ring.name() + ": not distributive");
        if (!(a + ring.zero() == a) || !(a * ring.one() == a)) return fail(detail, ring.name() + ": identities");
        if (!ring.is_zero(a + (-a)) || !(a - b == a + (-b))) return fail(detail, ring.name() + ": negation");
    }
    detail = ring.name() + ": " + std::to_string(trials) + " triples";
    return true;
}

// ---- shared bodies of property checks and acceptance criteria ---------------

bool check_field_adjugates(std::uint64_t seed, int count, std::size_t max_n, std::size_t oracle_n,
                           std::string& detail) {
    const PrimeFieldRing f = field();
    Rng rng(seed);
    int oracle_checked = 0;
    for (int t = 0; t < count; ++t) {
        const std::size_t n = 2 + rng.below(max_n - 1);
        const Matrix<PrimeField> a = random_nonsingular(f, n, rng);
        const auto res = adjoint(f, a, rng.next());
        if (!(res.det == det_gauss(f, a))) return fail(detail, "det mismatch at n=" + std::to_string(n));
        if (!adjugate_identities(f, a, res.adjugate, res.det)) {
            return fail(detail, "A*A* != det*I at n=" + std::to_string(n) + " instance " + std::to_string(t));
        }
        if (n <= oracle_n) {
            if (!(res.adjugate == adjugate_oracle(f, a))) return fail(detail, "oracle mismatch at n=" + std::to_string(n));
            ++oracle_checked;
        }
    }
    detail = std::to_string(count) + " matrices over GF(10007), n in [2," + std::to_string(max_n) + "], " +
             std::to_string(oracle_checked) + " against the oracle";
    return true;
}

bool check_gradients(std::uint64_t seed, int count, std::string& detail) {
    const PrimeFieldRing f = field();
    Rng rng(seed);
    for (int t = 0; t < count; ++t) {
        const std::size_t n = 1 + rng.below(6);
        const Matrix<PrimeField> a = random_nonsingular(f, n, rng);
        const DetTrace<PrimeField> tr = randomized_trace(f, a, rng.next()).trace;
        const GradientBundle<PrimeField> g = reverse_pass(f, tr);
        const std::string at = " (instance " + std::to_string(t) + ", n=" + std::to_string(n) + ")";
        if (!(g.dh == dual_oracle::gradient_h(f, tr.h))) return fail(detail, "dh differs" + at);
        if (!(g.d_baby == dual_oracle::gradient_baby(f, tr))) return fail(detail, "dv differs" + at);
        if (!(g.d_giant == dual_oracle::gradient_giant(f, tr))) return fail(detail, "du differs" + at);
        if (!(g.d_b == dual_oracle::gradient_b(f, tr))) return fail(detail, "dB differs" + at);
        if (!(diff_step2(f, tr.tape, g.d_b) == dual_oracle::gradient_power(f, tr))) {
            return fail(detail, "power-chain gradient differs" + at);
        }
        if (!(g.d_a == dual_oracle::gradient_full(f, tr))) return fail(detail, "dA differs" + at);
    }
    detail = std::to_string(count) + " instances, n <= 6: dh, dv, du, dB, dA(step 2), dA exact";
    return true;
}

/// determinant vs det_gauss, (-1)^n f(0) = Delta, det H_A = det A det H.
bool check_determinants(std::uint64_t seed, int count, std::string& detail) {
    const PrimeFieldRing f = field();
    Rng rng(seed);
    int singular = 0;
    for (int t = 0; t < count; ++t) {
        const std::size_t n = 2 + rng.below(29);
        const bool make_singular = t % 4 == 3;
        const Matrix<PrimeField> a = make_singular ? random_singular(f, n, rng) : random_nonsingular(f, n, rng);
        const PrimeField expected = det_gauss(f, a);
        singular += f.is_zero(expected);
        const std::uint64_t s = rng.next();
        if (!(determinant(f, a, s) == expected)) return fail(detail, "determinant != det_gauss at n=" + std::to_string(n));
        const DetTrace<PrimeField> tr = randomized_trace(f, a, s).trace;
        if (!(signed_minpoly_constant(f, tr.minpoly) == tr.delta)) return fail(detail, "(-1)^n f(0) != Delta");
        if (!(tr.det_hankel_a == expected * tr.det_hankel)) return fail(detail, "det H_A != det A det H");
    }
    detail = std::to_string(count) + " instances over GF(10007), n in [2,30], " + std::to_string(singular) +
             " singular nonderogatory";
    return true;
}

bool check_division_free_corpus(const std::vector<std::pair<std::string, Matrix<BigInt>>>& corpus,
                                std::string& detail) {
    const IntegerRing z;
    for (const auto& [name, a] : corpus) {
        const auto d = det_division_free(z, a);
        const auto adj = adjoint_division_free(z, a);
        if (d.division_violations != 0 || adj.division_violations != 0) {
            return fail(detail, name + ": division violation counter is nonzero");
        }
        const BigInt expected = cofactor_det(z, a);
        if (!(d.det == expected) || !(adj.det == expected)) return fail(detail, name + ": det differs from cofactor oracle");
        if (!(adj.adjugate == adjugate_oracle(z, a))) return fail(detail, name + ": adjugate differs from cofactor oracle");
    }
    detail = std::to_string(corpus.size()) + " integer matrices exact, 0 division violations";
    return true;
}

template <CommutativeRing R>
bool same_result(const AdjointResult<ElementOf<R>>& x, const AdjointResult<ElementOf<R>>& y) {
    return x.adjugate == y.adjugate && x.det == y.det;
}

bool check_partial_evaluation(const std::vector<std::pair<std::string, Matrix<BigInt>>>& corpus,
                              const std::function<WatermarkSchedule(std::size_t)>& schedule, std::string& detail) {
    const IntegerRing z;
    for (const auto& [name, a] : corpus) {
        const auto plain = adjoint_division_free(z, a);
        const auto pe = adjoint_division_free(z, a, DivisionFreeOptions{true, schedule(a.rows())});
        if (!same_result<IntegerRing>(plain, pe)) return fail(detail, name + ": partial evaluation changed the output");
    }
    detail = std::to_string(corpus.size()) + " matrices bit-identical";
    return true;
}

PolySeriesMatrix random_poly_matrix(const PolySeriesRing& ring, std::size_t n, std::size_t deg, Rng& rng) {
    const PrimeFieldRing& f = ring.base();
    for (;;) {
        std::vector<PolySeries> data;
        for (std::size_t k = 0; k < n * n; ++k) {
            std::vector<PrimeField> c;
            for (std::size_t d = 0; d <= std::min(deg, ring.order()); ++d) c.push_back(random_element(f, rng));
            data.push_back(ring.from_coefficients(std::move(c)));
        }
        PolySeriesMatrix a(n, n, std::move(data));
        if (!f.is_zero(det_gauss(f, constant_term(ring, a)))) return a;
    }
}

bool check_series_inversion(std::uint64_t seed, int count, std::string& detail) {
    Rng rng(seed);
    for (int t = 0; t < count; ++t) {
        const std::size_t n = 1 + rng.below(4);
        const std::size_t deg = rng.below(4);
        const std::size_t trunc = 1 + rng.below(12);
        const PolySeriesRing ring(field(), trunc);
        const PolySeriesMatrix a = random_poly_matrix(ring, n, deg, rng);
        const SeriesInverse inv = invert_series_matrix(ring, a);
        const std::string at = " (n=" + std::to_string(n) + ", deg=" + std::to_string(deg) +
                               ", N=" + std::to_string(trunc) + ")";
        if (inv.division_violations != 0) return fail(detail, "division violation" + at);
        if (!(inv.inverse == newton_inverse_oracle(ring, a))) return fail(detail, "differs from Newton oracle" + at);
        if (!(mat_mul(inv.inverse, a) == PolySeriesMatrix::identity(ring, n))) return fail(detail, "A^-1 A != I" + at);
    }
    detail = std::to_string(count) + " instances, n <= 4, deg <= 3, N <= 12";
    return true;
}

bool check_cost_shape(const std::vector<std::size_t>& sizes, std::uint64_t seed, std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (std::size_t n : sizes) {
        const Step2Cost c = measure_step2_cost(n, derive(seed, n));
        if (os.tellp() > 0) os << "; ";
        os << "n=" << n << " muls=" << c.multiplications << " tape=" << c.tape_length << " ratio=" << c.ratio;
        ok = ok && c.ratio <= kStep2CostFactor;
    }
    detail = os.str();
    return ok;
}

Matrix<BigInt> companion_shift(std::size_t n) {
    Matrix<BigInt> a(n, n, BigInt(0));
    for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = BigInt(1);
    return a;
}

}  // namespace

CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("unexpected exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

bool all_passed(const Report& report) {
    return std::all_of(report.begin(), report.end(), [](const CheckResult& r) { return r.passed; });
}

std::vector<std::pair<std::string, Matrix<BigInt>>> integer_fixtures(std::size_t n, std::uint64_t seed) {
    const IntegerRing z;
    Rng rng(derive(seed, n));
    const std::string sz = "n=" + std::to_string(n);
    std::vector<std::pair<std::string, Matrix<BigInt>>> out;
    out.emplace_back("identity " + sz, Matrix<BigInt>::identity(z, n));
    out.emplace_back("zero " + sz, Matrix<BigInt>::zero(z, n, n));
    out.emplace_back("nilpotent shift " + sz, companion_shift(n));

    Matrix<BigInt> rank1(n, n, BigInt(0));
    std::vector<std::int64_t> x(n), y(n);
    for (auto& e : x) e = rng.between(-3, 3);
    for (auto& e : y) e = rng.between(-3, 3);
    x[0] = y[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) rank1(i, j) = BigInt(x[i] * y[j]);
    out.emplace_back("rank-1 " + sz, std::move(rank1));

    Matrix<BigInt> low = random_int_matrix(n, n, -9, 9, rng);
    for (std::size_t k = 0; k < std::min<std::size_t>(2, n); ++k)
        for (std::size_t j = 0; j < n; ++j) low(n - 1 - k, j) = n >= 4 ? low(k, j) : BigInt(0);
    out.emplace_back("rank-(n-2) " + sz, std::move(low));
    return out;
}

std::vector<std::pair<std::string, Matrix<BigInt>>> division_free_corpus(std::uint64_t seed) {
    Rng rng(derive(seed, 3));
    std::vector<std::pair<std::string, Matrix<BigInt>>> out;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + rng.below(10);
        out.emplace_back("sample " + std::to_string(t) + " n=" + std::to_string(n), random_int_matrix(n, n, -9, 9, rng));
    }
    for (std::size_t n = 2; n <= 10; ++n) {
        for (auto& fx : integer_fixtures(n, seed)) out.push_back(std::move(fx));
    }
    return out;
}

Step2Cost measure_step2_cost(std::size_t n, std::uint64_t seed) {
    const PrimeFieldRing f = field();
    Rng rng(seed);
    const Matrix<PrimeField> a = random_nonsingular(f, n, rng);
    const DetTrace<PrimeField> tr = randomized_trace(f, a, rng.next()).trace;
    const GradientBundle<PrimeField> g = reverse_pass(f, tr);
    Step2Cost c;
    c.n = n;
    c.tape_length = tr.tape.products.size();
    c.multiplications = g.reverse_muls[static_cast<std::size_t>(ReverseStage::step2)];
    const double scale = static_cast<double>(n) * n * n * std::max<std::size_t>(1, c.tape_length);
    c.ratio = static_cast<double>(c.multiplications) / scale;
    return c;
}

// ---- rings ------------------------------------------------------------------

Report rings_properties(std::uint64_t seed) {
    Report out;
    out.push_back(run_check("rings.axioms", [&](std::string& detail) {
        Rng rng(derive(seed, 10));
        const PrimeFieldRing f = field();
        const IntegerRing z;
        const SeriesRing<PrimeFieldRing> s(f, 5);
        const DualRing<PrimeFieldRing> d(f);
        std::string part;
        std::string all;
        if (!ring_axioms(f, [&] { return random_element(f, rng); }, 300, part)) return fail(detail, part);
        all += part + "; ";
        auto big = [&] {
            BigInt x(rng.between(-1000000, 1000000));
            return x * BigInt(rng.between(-1000000000, 1000000000)) * BigInt(rng.between(-1000000000, 1000000000));
        };
        if (!ring_axioms(z, big, 300, part)) return fail(detail, part);
        all += part + "; ";
        auto series = [&] {
            std::vector<PrimeField> c;
            for (int k = 0; k <= 5; ++k) c.push_back(random_element(f, rng));
            return s.from_coefficients(std::move(c));
        };
        if (!ring_axioms(s, series, 300, part)) return fail(detail, part);
        all += part + "; ";
        auto dual = [&] { return DualNumber<PrimeField>(random_element(f, rng), random_element(f, rng)); };
        if (!ring_axioms(d, dual, 300, part)) return fail(detail, part);
        detail = all + part;
        return true;
    }));

    out.push_back(run_check("rings.series_reciprocal", [&](std::string& detail) {
        Rng rng(derive(seed, 11));
        const PrimeFieldRing f = field();
        const IntegerRing z;
        for (int t = 0; t < 1000; ++t) {
            const std::size_t order = rng.below(13);
            if (t % 2 == 0) {
                const SeriesRing<PrimeFieldRing> s(f, order);
                std::vector<PrimeField> c{f.from_unsigned(1 + rng.below(kPrime - 1))};
                for (std::size_t k = 1; k <= order; ++k) c.push_back(random_element(f, rng));
                const auto a = s.from_coefficients(std::move(c));
                if (!(series_reciprocal(s, a) * a == s.one())) return fail(detail, "GF(p) reciprocal failed");
            } else {
                const SeriesRing<IntegerRing> s(z, order);
                std::vector<BigInt> c{BigInt(rng.below(2) ? 1 : -1)};
                for (std::size_t k = 1; k <= order; ++k) c.emplace_back(rng.between(-50, 50));
                const auto a = s.from_coefficients(std::move(c));
                if (!(series_reciprocal(s, a) * a == s.one())) return fail(detail, "Z reciprocal failed");
            }
        }
        detail = "1000 series over GF(10007) and Z, N <= 12";
        return true;
    }));

    out.push_back(run_check("rings.partial_evaluate", [&](std::string& detail) {
        Rng rng(derive(seed, 12));
        const IntegerRing z;
        for (int t = 0; t < 1000; ++t) {
            const std::size_t order = rng.below(13);
            const SeriesRing<IntegerRing> s(z, order);
            std::vector<BigInt> c;
            for (std::size_t k = 0; k <= order; ++k) c.emplace_back(rng.between(-1000, 1000));
            const auto a = s.from_coefficients(std::move(c));
            const std::size_t m = rng.below(order + 1);
            if (!(series_eval_at_one(partial_evaluate(a, m)) == series_eval_at_one(a))) {
                return fail(detail, "value at 1 changed for m=" + std::to_string(m));
            }
        }
        detail = "1000 (a, m) pairs";
        return true;
    }));

    out.push_back(run_check("rings.dual_derivatives", [&](std::string& detail) {
        Rng rng(derive(seed, 13));
        const PrimeFieldRing f = field();
        const DualRing<PrimeFieldRing> d(f);
        const std::vector<std::vector<std::int64_t>> polys = {
            {5, -2, 0, 3}, {1, 1, 1, 1, 1, 1}, {0, 0, 7}, {-4}, {2, 0, 0, 0, 0, 0, 0, -1}};
        for (int t = 0; t < 200; ++t) {
            const PrimeField a = random_element(f, rng);
            for (const auto& p : polys) {
                const auto g = horner(lift_ints(d, p), d.variable(a));
                if (!(g.real() == horner(lift_ints(f, p), a))) return fail(detail, "value part wrong");
                if (!(g.eps() == horner(lift_ints(f, derivative(p)), a))) return fail(detail, "derivative wrong");
            }
            // g(x) = x / (x^2 + 3), g'(x) = (3 - x^2) / (x^2 + 3)^2
            const PrimeField q = a * a + f.from_int(3);
            if (f.is_zero(q)) continue;
            const auto x = d.variable(a);
            const auto g = x * d.inverse(x * x + d.from_int(3));
            if (!(g.eps() == (f.from_int(3) - a * a) * f.inverse(q * q))) return fail(detail, "quotient rule wrong");
        }
        detail = "200 points x 5 polynomials and a rational function";
        return true;
    }));
    return out;
}

// ---- linalg -----------------------------------------------------------------

Report linalg_properties(std::uint64_t seed) {
    Report out;
    out.push_back(run_check("linalg.adjugate_oracle", [&](std::string& detail) {
        Rng rng(derive(seed, 20));
        const PrimeFieldRing f = field();
        int singular = 0;
        for (int t = 0; t < 200; ++t) {
            const std::size_t n = 1 + rng.below(8);
            Matrix<PrimeField> a = random_matrix(f, n, n, rng);
            if (t % 3 == 1 && n >= 2) a = random_singular(f, n, rng);
            if (t % 6 == 5 && n >= 3) {
                for (std::size_t j = 0; j < n; ++j) a(n - 1, j) = a(0, j), a(n - 2, j) = a(1, j);
            }
            const PrimeField det = det_gauss(f, a);
            singular += f.is_zero(det);
            if (!adjugate_identities(f, a, adjugate_oracle(f, a), det)) return fail(detail, "A adj(A) != det I");
        }
        detail = "200 matrices, n <= 8, " + std::to_string(singular) + " singular";
        return true;
    }));

    out.push_back(run_check("linalg.det_multiplicative", [&](std::string& detail) {
        Rng rng(derive(seed, 21));
        const PrimeFieldRing f = field();
        const IntegerRing z;
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto x = random_matrix(f, n, n, rng);
            const auto y = random_matrix(f, n, n, rng);
            if (!(det_gauss(f, mat_mul(x, y)) == det_gauss(f, x) * det_gauss(f, y))) return fail(detail, "GF(p)");
            const auto xi = random_int_matrix(n, n, -9, 9, rng);
            const auto yi = random_int_matrix(n, n, -9, 9, rng);
            if (!(cofactor_det(z, mat_mul(xi, yi)) == cofactor_det(z, xi) * cofactor_det(z, yi))) return fail(detail, "Z");
        }
        detail = "100 pairs over GF(10007) and Z, n <= 6";
        return true;
    }));

    out.push_back(run_check("linalg.series_inverse", [&](std::string& detail) {
        Rng rng(derive(seed, 22));
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 1 + rng.below(5);
            const PolySeriesRing ring(field(), rng.below(9));
            const PolySeriesMatrix a = random_poly_matrix(ring, n, ring.order(), rng);
            const PolySeriesMatrix inv = mat_inverse(ring, a);
            if (!(mat_mul(a, inv) == PolySeriesMatrix::identity(ring, n))) return fail(detail, "A A^-1 != I");
        }
        detail = "50 series matrices, n <= 5, N <= 8";
        return true;
    }));
    return out;
}

// ---- hankel -----------------------------------------------------------------

Report hankel_properties(std::uint64_t seed) {
    Report out;
    const PrimeFieldRing f = field();
    out.push_back(run_check("hankel.symmetry", [&](std::string& detail) {
        Rng rng(derive(seed, 30));
        int inverted = 0;
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + rng.below(10);
            std::vector<PrimeField> h;
            for (std::size_t k = 0; k < 2 * n; ++k) h.push_back(random_element(f, rng));
            const ScalarSequence<PrimeField> seq(std::move(h));
            for (unsigned shift : {0u, 1u}) {
                const auto m = build_hankel(seq, shift);
                if (!(m == m.transpose())) return fail(detail, "Hankel matrix not symmetric");
                if (f.is_zero(det_gauss(f, m))) continue;
                const auto inv = mat_inverse(f, m);
                if (!(inv == inv.transpose())) return fail(detail, "inverse not symmetric");
                ++inverted;
            }
        }
        detail = "200 Hankel matrices, " + std::to_string(inverted) + " inverted";
        return true;
    }));

    out.push_back(run_check("hankel.companion_minpoly", [&](std::string& detail) {
        Rng rng(derive(seed, 31));
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + rng.below(12);
            std::vector<PrimeField> g;
            for (std::size_t k = 0; k < n; ++k) g.push_back(random_element(f, rng));
            Matrix<PrimeField> a = Matrix<PrimeField>::zero(f, n, n);
            for (std::size_t i = 0; i + 1 < n; ++i) a(i + 1, i) = f.one();
            for (std::size_t i = 0; i < n; ++i) a(i, n - 1) = -g[i];
            ColVector<PrimeField> v = zero_col(f, n);
            v[0] = f.one();
            std::vector<PrimeField> h;
            for (std::size_t k = 0; k < 2 * n; ++k) {
                h.push_back(v[0]);
                v = mat_vec(a, v);
            }
            MonicPolynomial<PrimeField> expected{g};
            expected.coefficients.push_back(f.one());
            if (!(minpoly_from_sequence(f, ScalarSequence<PrimeField>(std::move(h))) == expected)) {
                return fail(detail, "minpoly differs from g at n=" + std::to_string(n));
            }
        }
        detail = "100 companion matrices, n <= 12";
        return true;
    }));

    out.push_back(run_check("hankel.ratio_and_sign", [&](std::string& detail) {
        Rng rng(derive(seed, 32));
        int used = 0;
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + rng.below(10);
            const auto a = random_matrix(f, n, n, rng);
            const auto u = random_row(f, n, rng);
            const auto v = random_col(f, n, rng);
            std::optional<DetTrace<PrimeField>> tr;
            try {
                tr.emplace(det_forward(f, a, u, v));
            } catch (const SingularHankel&) {
                continue;
            }
            ++used;
            const PrimeField det = det_gauss(f, a);
            if (!(det_gauss(f, tr->hankel_a) * f.inverse(det_gauss(f, tr->hankel)) == det)) return fail(detail, "ratio");
            if (!(signed_minpoly_constant(f, tr->minpoly) == det)) return fail(detail, "sign");
        }
        detail = std::to_string(used) + " traces with H nonsingular";
        return true;
    }));
    return out;
}

// ---- krylov_det ---------------------------------------------------------------

Report krylov_properties(std::uint64_t seed) {
    Report out;
    const PrimeFieldRing f = field();
    out.push_back(run_check("krylov_det.replay_and_projection", [&](std::string& detail) {
        Rng rng(derive(seed, 40));
        for (int t = 0; t < 50; ++t) {
            const std::size_t n = 1 + rng.below(20);
            const auto tr = randomized_trace(f, random_nonsingular(f, n, rng), rng.next()).trace;
            if (!trace_replays(f, tr)) return fail(detail, "trace does not replay");
            const auto [nn, r, s] = tr.params;
            if (r * s < 2 * n || s < 1 || r < 2) return fail(detail, "bad (r, s)");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < s; ++j)
                    if (i + j * r < 2 * n && !(tr.h[i + j * r] == dot(tr.giant[j], tr.baby[i]))) {
                        return fail(detail, "h_{i+jr} != u_j v_i");
                    }
            if (tr.minpoly.degree() != n || !(tr.minpoly.coefficients.back() == f.one())) return fail(detail, "f not monic of degree n");
            if (!(signed_minpoly_constant(f, tr.minpoly) == tr.delta)) return fail(detail, "(-1)^n f(0) != Delta");
        }
        detail = "50 traces, n <= 20";
        return true;
    }));
    out.push_back(run_check("krylov_det.determinant", [&](std::string& detail) {
        return check_determinants(derive(seed, 41), 200, detail);
    }));
    return out;
}

// ---- adjoint_reverse ----------------------------------------------------------

Report adjoint_properties(std::uint64_t seed) {
    Report out;
    out.push_back(run_check("adjoint_reverse.gradients", [&](std::string& detail) {
        return check_gradients(derive(seed, 50), 100, detail);
    }));
    out.push_back(run_check("adjoint_reverse.adjugate", [&](std::string& detail) {
        return check_field_adjugates(derive(seed, 51), 60, 12, 8, detail);
    }));
    out.push_back(run_check("adjoint_reverse.transpose_orientation", [&](std::string& detail) {
        const PrimeFieldRing f = field();
        // upper triangular, so adj(A) is upper triangular and dA lower triangular
        const auto a = Matrix<PrimeField>::from_ints(f, {{2, 3, 5}, {0, 7, 11}, {0, 0, 13}});
        const auto tr = randomized_trace(f, a, seed).trace;
        const auto g = reverse_pass(f, tr);
        const auto oracle = adjugate_oracle(f, a);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (!(oracle(j, i) == g.d_a(i, j))) return fail(detail, "a*_ji != dA_ij");
        if (oracle == g.d_a) return fail(detail, "test matrix does not distinguish orientation");
        detail = "asymmetric 3x3";
        return true;
    }));
    out.push_back(run_check("adjoint_reverse.step2_cost", [&](std::string& detail) {
        return check_cost_shape({8, 16}, seed, detail);
    }));
    out.push_back(run_check("adjoint_reverse.singular_refused", [&](std::string& detail) {
        const PrimeFieldRing f = field();
        Rng rng(derive(seed, 52));
        const auto a = random_singular(f, 5, rng);
        try {
            (void)adjoint(f, a, seed);
        } catch (const NonInvertibleHA&) {
            detail = "NonInvertibleHA raised";
            return true;
        }
        return fail(detail, "singular matrix accepted");
    }));
    return out;
}

// ---- division_free ------------------------------------------------------------

Report division_free_properties(std::uint64_t seed) {
    Report out;
    const IntegerRing z;
    out.push_back(run_check("division_free.oracle_and_counter", [&](std::string& detail) {
        Rng rng(derive(seed, 60));
        std::vector<std::pair<std::string, Matrix<BigInt>>> corpus;
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 1 + rng.below(8);
            corpus.emplace_back("sample " + std::to_string(t), random_int_matrix(n, n, -9, 9, rng));
        }
        for (std::size_t n : {2, 5, 8})
            for (auto& fx : integer_fixtures(n, seed)) corpus.push_back(std::move(fx));
        return check_division_free_corpus(corpus, detail);
    }));

    out.push_back(run_check("division_free.delta_exact", [&](std::string& detail) {
        Rng rng(derive(seed, 61));
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 1 + rng.below(6);
            const auto a = random_int_matrix(n, n, -9, 9, rng);
            const auto setup = division_free_setup(z, a);
            if (!(cofactor_det(setup.series, setup.z) == det_division_free(z, a).det_series)) {
                return fail(detail, "Delta(z) differs from det(C + z(A - C)) at n=" + std::to_string(n));
            }
        }
        detail = "30 matrices, n <= 6";
        return true;
    }));

    out.push_back(run_check("division_free.cross_mode", [&](std::string& detail) {
        const PrimeFieldRing f = field();
        Rng rng(derive(seed, 62));
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 1 + rng.below(10);
            const auto a = random_nonsingular(f, n, rng);
            const auto k = adjoint(f, a, rng.next());
            const auto d = adjoint_division_free(f, a);
            if (!same_result<PrimeFieldRing>(k, d)) return fail(detail, "krylov and division-free disagree");
        }
        detail = "40 matrices over GF(10007), n <= 10";
        return true;
    }));

    out.push_back(run_check("division_free.partial_evaluation", [&](std::string& detail) {
        Rng rng(derive(seed, 63));
        int clean = 0;
        int poisoned = 0;
        for (int t = 0; t < 60; ++t) {
            const std::size_t n = 1 + rng.below(7);
            const auto a = random_int_matrix(n, n, -9, 9, rng);
            WatermarkSchedule s;
            const std::size_t entries = 1 + rng.below(4);
            for (std::size_t e = 0; e < entries; ++e) {
                s.push_back({kReverseOrder[rng.below(5)], static_cast<TraceField>(rng.below(9)), rng.below(n + 1)});
            }
            const auto plain = adjoint_division_free(z, a);
            try {
                const auto pe = adjoint_division_free(z, a, DivisionFreeOptions{true, s});
                if (!same_result<IntegerRing>(plain, pe)) return fail(detail, "schedule without violation changed output");
                ++clean;
            } catch (const WatermarkViolation&) {
                ++poisoned;
            }
        }
        std::string part;
        std::vector<std::pair<std::string, Matrix<BigInt>>> fixtures;
        for (std::size_t n : {3, 6})
            for (auto& fx : integer_fixtures(n, seed)) fixtures.push_back(std::move(fx));
        if (!check_partial_evaluation(fixtures, last_use_schedule, part)) return fail(detail, "last-use: " + part);
        detail = std::to_string(clean) + " random schedules exact, " + std::to_string(poisoned) +
                 " rejected by the watermark check; last-use schedule " + part;
        return true;
    }));
    return out;
}

// ---- polymatrix ---------------------------------------------------------------

Report polymatrix_properties(std::uint64_t seed) {
    Report out;
    out.push_back(run_check("polymatrix.inverse", [&](std::string& detail) {
        return check_series_inversion(derive(seed, 70), 50, detail);
    }));
    out.push_back(run_check("polymatrix.degree_log", [&](std::string& detail) {
        Rng rng(derive(seed, 71));
        const PolySeriesRing ring(field(), 8);
        const auto a = random_poly_matrix(ring, 4, 2, rng);
        ProductLog log;
        {
            ProductLogScope scope(log);
            (void)invert_series_matrix(ring, a);
        }
        if (log.empty()) return fail(detail, "no products logged");
        std::size_t skewed = 0;
        for (const auto& r : log) skewed += r.lhs_degree != r.rhs_degree;
        detail = std::to_string(log.size()) + " products logged, " + std::to_string(skewed) + " with unequal operand degrees";
        return true;
    }));
    return out;
}

Report module_properties(std::uint64_t seed) {
    Report out;
    for (auto suite : {rings_properties, linalg_properties, hankel_properties, krylov_properties, adjoint_properties,
                       division_free_properties, polymatrix_properties}) {
        for (auto& r : suite(seed)) out.push_back(std::move(r));
    }
    return out;
}

// ---- acceptance -------------------------------------------------------------

CheckResult criterion_adjugate_field(std::uint64_t seed) {
    return run_check("1 adjugate correctness (field mode)", [&](std::string& detail) {
        return check_field_adjugates(derive(seed, 1), 200, 30, 8, detail);
    });
}

CheckResult criterion_gradient_exactness(std::uint64_t seed) {
    return run_check("2 gradient exactness", [&](std::string& detail) {
        return check_gradients(derive(seed, 2), 100, detail);
    });
}

CheckResult criterion_division_free(std::uint64_t seed) {
    return run_check("3 division-free pipeline", [&](std::string& detail) {
        return check_division_free_corpus(division_free_corpus(seed), detail);
    });
}

CheckResult criterion_determinant_agreement(std::uint64_t seed) {
    return run_check("4 determinant agreement and sign", [&](std::string& detail) {
        return check_determinants(derive(seed, 4), 200, detail);
    });
}

CheckResult criterion_degenerate_handling() {
    return run_check("5 degenerate handling", [&](std::string& detail) {
        const PrimeFieldRing f = field();
        const IntegerRing z;
        for (std::size_t n = 2; n <= 10; ++n) {
            const auto id = Matrix<PrimeField>::identity(f, n);
            bool raised = false;
            try {
                (void)adjoint(f, id, n);
            } catch (const SingularHankel&) {
                raised = true;
            }
            if (!raised) return fail(detail, "I_" + std::to_string(n) + " accepted in field mode");
            const auto res = adjoint_division_free(z, Matrix<BigInt>::identity(z, n));
            if (!(res.adjugate == Matrix<BigInt>::identity(z, n)) || !(res.det == BigInt(1))) {
                return fail(detail, "division-free adjugate of I_" + std::to_string(n) + " is wrong");
            }
        }
        detail = "I_n, n = 2..10: SingularHankel after " + std::to_string(kMaxProjectionAttempts) +
                 " projections; division-free adjugate I_n";
        return true;
    });
}

CheckResult criterion_cost_shape(const std::vector<std::size_t>& sizes, std::uint64_t seed) {
    return run_check("6 step-2 cost shape", [&](std::string& detail) { return check_cost_shape(sizes, seed, detail); });
}

CheckResult criterion_partial_evaluation(std::uint64_t seed) {
    return run_check("7 partial evaluation safety", [&](std::string& detail) {
        return check_partial_evaluation(division_free_corpus(seed), conservative_schedule, detail);
    });
}

CheckResult criterion_series_inversion(std::uint64_t seed) {
    return run_check("8 polynomial matrix inversion", [&](std::string& detail) {
        return check_series_inversion(derive(seed, 8), 50, detail);
    });
}

Report acceptance_criteria(std::uint64_t seed) {
    return {criterion_adjugate_field(seed),
            criterion_gradient_exactness(seed),
            criterion_division_free(seed),
            criterion_determinant_agreement(seed),
            criterion_degenerate_handling(),
            criterion_cost_shape({8, 16, 32, 64}, seed),
            criterion_partial_evaluation(seed),
            criterion_series_inversion(seed)};
}

}  // namespace kadj::verify
