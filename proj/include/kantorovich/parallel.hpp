#pragma once

#include <cstddef>
#include <functional>

namespace kantorovich {

/// Worker count used by parallel_for. 0 selects hardware concurrency.
void set_thread_count(int threads);
int thread_count();

/// Calls body(i) for i in [0, count) across the configured workers. Each
/// index must write only its own output slot; callers reduce afterwards in
/// index order.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace kantorovich
