#include "kadj/instrument.hpp"

#include <atomic>

namespace kadj {

namespace {

thread_local OpCounts t_counts;
thread_local ProductLog* t_product_log = nullptr;
std::atomic<std::uint64_t> g_division_violations{0};

}  // namespace

OpCounts& thread_op_counts() noexcept { return t_counts; }

std::uint64_t division_violations() noexcept { return g_division_violations.load(std::memory_order_relaxed); }

void record_division_violation() noexcept { g_division_violations.fetch_add(1, std::memory_order_relaxed); }

ProductLogScope::ProductLogScope(ProductLog& log) noexcept : previous_(t_product_log) { t_product_log = &log; }

ProductLogScope::~ProductLogScope() { t_product_log = previous_; }

ProductLog* active_product_log() noexcept { return t_product_log; }

}  // namespace kadj
