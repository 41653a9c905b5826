#pragma once

#include <cstddef>
#include <functional>

namespace koszul_lift {

/// Worker count: hardware concurrency, capped by KOSZUL_LIFT_THREADS when set.
std::size_t worker_count();

/// Runs body(i) for i in [0, count). Iterations must write disjoint state.
/// The first exception thrown (lowest index) is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace koszul_lift
