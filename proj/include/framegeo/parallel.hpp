#pragma once

#include <cstdint>

namespace framegeo {

/// Runs body(i) for i in [0, n), OpenMP-parallel when available. Bodies must
/// write only to their own slots; exact arithmetic keeps every schedule
/// bit-for-bit deterministic.
template <typename F>
void parallel_for(std::int64_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) body(i);
#else
  for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}  // namespace framegeo
