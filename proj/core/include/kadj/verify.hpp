#pragma once

/**
 * @file verify.hpp
 * @brief Seeded property suites for every module and the exact-arithmetic
 *        acceptance criteria. Shared by `kadj selftest` and the acceptance
 *        test binary.
 */

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kadj/linalg/matrix.hpp"
#include "kadj/rings.hpp"

namespace kadj::verify {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

using Report = std::vector<CheckResult>;

inline constexpr std::uint64_t kDefaultSeed = 0x6b61646a;  // "kadj"

/// Runs `body` (which returns a detail string and throws or returns
/// passed=false on failure) with timing and exception capture.
CheckResult run_check(const std::string& name, const std::function<bool(std::string&)>& body);

bool all_passed(const Report& report);

// ---- property suites, one per module ---------------------------------------

Report rings_properties(std::uint64_t seed);
Report linalg_properties(std::uint64_t seed);
Report hankel_properties(std::uint64_t seed);
Report krylov_properties(std::uint64_t seed);
Report adjoint_properties(std::uint64_t seed);
Report division_free_properties(std::uint64_t seed);
Report polymatrix_properties(std::uint64_t seed);

/// All module suites, in dependency order.
Report module_properties(std::uint64_t seed);

// ---- acceptance criteria -----------------------------------------------------

CheckResult criterion_adjugate_field(std::uint64_t seed);        // 1
CheckResult criterion_gradient_exactness(std::uint64_t seed);    // 2
CheckResult criterion_division_free(std::uint64_t seed);         // 3
CheckResult criterion_determinant_agreement(std::uint64_t seed); // 4
CheckResult criterion_degenerate_handling();                     // 5
CheckResult criterion_cost_shape(const std::vector<std::size_t>& sizes, std::uint64_t seed);  // 6
CheckResult criterion_partial_evaluation(std::uint64_t seed);    // 7
CheckResult criterion_series_inversion(std::uint64_t seed);      // 8

Report acceptance_criteria(std::uint64_t seed);

// ---- shared fixtures and measurements ---------------------------------------

/// Identity, zero, nilpotent shift, rank-1 and rank-(n-2) integer matrices of size n.
std::vector<std::pair<std::string, Matrix<BigInt>>> integer_fixtures(std::size_t n, std::uint64_t seed);

/// The integer matrices of acceptance criterion 3: 100 seeded samples with
/// n <= 10 and entries in [-9, 9], followed by integer_fixtures for n = 2..10.
std::vector<std::pair<std::string, Matrix<BigInt>>> division_free_corpus(std::uint64_t seed);

struct Step2Cost {
    std::size_t n = 0;
    std::size_t tape_length = 0;
    std::uint64_t multiplications = 0;
    /// multiplications / (n^3 * tape_length)
    double ratio = 0.0;
};

/// Instrumented multiplication count of the step-2 reversal on a random
/// n x n matrix over GF(10007).
Step2Cost measure_step2_cost(std::size_t n, std::uint64_t seed);

inline constexpr double kStep2CostFactor = 4.0;

}  // namespace kadj::verify
