#pragma once

/**
 * @file instrument.hpp
 * @brief Operation counters and product-degree logging.
 *
 * Ring-operation counts are kept per thread and are bumped by the matrix and
 * vector kernels (one count per multiplication in the working ring, so a
 * product of two series counts once). The division-violation counter is
 * process wide.
 */

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kadj {

struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;

    OpCounts operator-(const OpCounts& other) const { return {mul - other.mul, add - other.add}; }
};

/// Counters of the calling thread.
OpCounts& thread_op_counts() noexcept;

inline void count_mul(std::uint64_t k = 1) noexcept { thread_op_counts().mul += k; }
inline void count_add(std::uint64_t k = 1) noexcept { thread_op_counts().add += k; }

/// Number of attempted series divisions by a non-unit constant term.
std::uint64_t division_violations() noexcept;
void record_division_violation() noexcept;

/// One matrix product with the polynomial degrees of its operands.
struct ProductRecord {
    std::size_t rows = 0;
    std::size_t inner = 0;
    std::size_t cols = 0;
    std::size_t lhs_degree = 0;        ///< max series degree over left entries
    std::size_t rhs_degree = 0;
    std::size_t lhs_coeff_degree = 0;  ///< max degree of series coefficients (nested series)
    std::size_t rhs_coeff_degree = 0;
};

using ProductLog = std::vector<ProductRecord>;

/// Installs `log` as the sink for matrix-product records on this thread
/// for the lifetime of the guard.
class ProductLogScope {
public:
    explicit ProductLogScope(ProductLog& log) noexcept;
    ~ProductLogScope();
    ProductLogScope(const ProductLogScope&) = delete;
    ProductLogScope& operator=(const ProductLogScope&) = delete;

private:
    ProductLog* previous_;
};

/// Active sink on this thread, or nullptr.
ProductLog* active_product_log() noexcept;

}  // namespace kadj
