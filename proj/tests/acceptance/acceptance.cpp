// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "kadj/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = kadj::verify::kDefaultSeed;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 0);

    int failed = 0;
    auto report = [&](const kadj::verify::CheckResult& r) {
        std::printf("[%s] criterion %s (%.2fs): %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.seconds,
                    r.detail.c_str());
        std::fflush(stdout);
        failed += !r.passed;
    };
    report(kadj::verify::criterion_adjugate_field(seed));
    report(kadj::verify::criterion_gradient_exactness(seed));
    report(kadj::verify::criterion_division_free(seed));
    report(kadj::verify::criterion_determinant_agreement(seed));
    report(kadj::verify::criterion_degenerate_handling());
    report(kadj::verify::criterion_cost_shape({8, 16, 32, 64}, seed));
    report(kadj::verify::criterion_partial_evaluation(seed));
    report(kadj::verify::criterion_series_inversion(seed));
    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
