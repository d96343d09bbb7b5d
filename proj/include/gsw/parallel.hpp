#pragma once

#include <cstddef>
#include <functional>

namespace gsw {

/// Worker count: GS_THREADS when set and positive, else hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; the
/// order across workers is unspecified.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace gsw
