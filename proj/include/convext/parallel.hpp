#pragma once

// OpenMP-backed loops with serial twins.
//
// Parallel kernels store one result per index and combine serially, so the
// outcome is bitwise identical for any thread count (reductions never
// reassociate floating-point sums). The *_serial versions are the reference
// implementations used by tests and the benchmark target.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace convext {

template <class F>
void parallel_for(std::ptrdiff_t n, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#else
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
#endif
}

template <class F>
void serial_for(std::ptrdiff_t n, F&& f) {
  for (std::ptrdiff_t i = 0; i < n; ++i) f(i);
}

// min over f(i); ties resolved toward the smallest index
template <class F>
std::pair<double, std::ptrdiff_t> parallel_min(std::ptrdiff_t n, F&& f) {
  std::vector<double> vals(static_cast<size_t>(n));
  parallel_for(n, [&](std::ptrdiff_t i) { vals[static_cast<size_t>(i)] = f(i); });
  double best = std::numeric_limits<double>::infinity();
  std::ptrdiff_t arg = -1;
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (vals[static_cast<size_t>(i)] < best) {
      best = vals[static_cast<size_t>(i)];
      arg = i;
    }
  return {best, arg};
}

template <class F>
std::pair<double, std::ptrdiff_t> serial_min(std::ptrdiff_t n, F&& f) {
  double best = std::numeric_limits<double>::infinity();
  std::ptrdiff_t arg = -1;
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double v = f(i);
    if (v < best) {
      best = v;
      arg = i;
    }
  }
  return {best, arg};
}

template <class F>
std::pair<double, std::ptrdiff_t> parallel_max(std::ptrdiff_t n, F&& f) {
  auto [v, i] = parallel_min(n, [&](std::ptrdiff_t k) { return -f(k); });
  return {-v, i};
}

// Sum with fixed 1024-element blocks: block partials are computed in
// parallel, then combined in index order, so results do not depend on the
// thread count.
template <class F>
double parallel_sum(std::ptrdiff_t n, F&& f) {
  constexpr std::ptrdiff_t kBlock = 1024;
  const std::ptrdiff_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(static_cast<size_t>(nb), 0.0);
  parallel_for(nb, [&](std::ptrdiff_t b) {
    double s = 0.0;
    const std::ptrdiff_t end = std::min(n, (b + 1) * kBlock);
    for (std::ptrdiff_t i = b * kBlock; i < end; ++i) s += f(i);
    partial[static_cast<size_t>(b)] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

template <class F>
double serial_sum(std::ptrdiff_t n, F&& f) {
  // same 1024-block association as parallel_sum so the two agree exactly
  constexpr std::ptrdiff_t kBlock = 1024;
  double total = 0.0;
  for (std::ptrdiff_t b = 0; b * kBlock < n; ++b) {
    double s = 0.0;
    const std::ptrdiff_t end = std::min(n, (b + 1) * kBlock);
    for (std::ptrdiff_t i = b * kBlock; i < end; ++i) s += f(i);
    total += s;
  }
  return total;
}

inline int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace convext
