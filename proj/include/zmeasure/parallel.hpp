// Deterministic parallel reduction helpers.  Work is split into a fixed
// number of blocks independent of the thread count; each block is summed
// serially in index order and block partials are combined in block order,
// so results are bit-identical across runs and across OMP_NUM_THREADS
// settings.  The *_serial variants are the reference implementations the
// tests and the benchmark compare against.
#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zm {

template <class T, class Fn>
T serial_sum(std::size_t count, Fn&& per_index) {
  T acc{};
  for (std::size_t i = 0; i < count; ++i) acc += per_index(i);
  return acc;
}

template <class T, class Fn>
T blocked_parallel_sum(std::size_t count, Fn&& per_index,
                       std::size_t blocks = 256) {
  if (count == 0) return T{};
  if (blocks > count) blocks = count;
  std::vector<T> partial(blocks, T{});
  std::size_t chunk = (count + blocks - 1) / blocks;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (long long b = 0; b < static_cast<long long>(blocks); ++b) {
    std::size_t lo = static_cast<std::size_t>(b) * chunk;
    std::size_t hi = lo + chunk < count ? lo + chunk : count;
    T acc{};
    for (std::size_t i = lo; i < hi; ++i) acc += per_index(i);
    partial[static_cast<std::size_t>(b)] = acc;
  }
  T total{};
  for (const T& p : partial) total += p;
  return total;
}

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace zm
