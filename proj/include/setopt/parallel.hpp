#ifndef SETOPT_PARALLEL_HPP
#define SETOPT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace setopt {

/// Worker count: SETOPT_THREADS when set to a positive integer, otherwise the
/// hardware concurrency.
std::size_t worker_count();

/// Runs body(i) for i in [0, n) across worker_count() threads. Each index is
/// handled exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace setopt

#endif
