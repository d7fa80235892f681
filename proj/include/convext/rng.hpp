#pragma once

// Deterministic sampling helpers. All randomized tests and estimators seed
// explicitly so that reports are reproducible bit for bit.

#include <cstdint>
#include <random>

#include "convext/linalg.hpp"

namespace convext {

class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  double uniform01() {
    // 53-bit mantissa, independent of library distribution internals
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double log_uniform(double lo, double hi) { return lo * std::exp(uniform01() * std::log(hi / lo)); }
  int uniform_int(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(eng_() % static_cast<uint64_t>(hi - lo + 1));
  }
  double normal() {
    // Box-Muller; keeps determinism across standard libraries
    double u1 = uniform01(), u2 = uniform01();
    if (u1 < 1e-300) u1 = 1e-300;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  Vec unit_vector(int n) {
    Vec v(static_cast<size_t>(n));
    double s2;
    do {
      for (double& x : v) x = normal();
      s2 = dot(v, v);
    } while (s2 < 1e-12);
    const double inv = 1.0 / std::sqrt(s2);
    for (double& x : v) x *= inv;
    return v;
  }

  Vec point_in_box(const Vec& lo, const Vec& hi) {
    Vec p(lo.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = uniform(lo[i], hi[i]);
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

// Deterministic direction grids.
// n==1: {+1,-1}; n==2: uniform angles; n==3: Fibonacci sphere.
inline std::vector<Vec> direction_grid(int n, int count) {
  std::vector<Vec> dirs;
  if (n == 1) {
    dirs.push_back({1.0});
    dirs.push_back({-1.0});
    return dirs;
  }
  if (n == 2) {
    const int k = std::max(4, count);
    dirs.reserve(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) {
      const double a = 2.0 * 3.14159265358979323846 * i / k;
      dirs.push_back({std::cos(a), std::sin(a)});
    }
    return dirs;
  }
  if (n == 3) {
    const int k = std::max(8, count);
    const double ga = 3.14159265358979323846 * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < k; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / k;
      const double rad = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = ga * i;
      dirs.push_back({rad * std::cos(a), rad * std::sin(a), z});
    }
    return dirs;
  }
  // generic dimensions: seeded random directions plus coordinate axes
  Rng rng(0x9E3779B97F4A7C15ull ^ static_cast<uint64_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec e(static_cast<size_t>(n), 0.0);
    e[static_cast<size_t>(i)] = 1.0;
    dirs.push_back(e);
    e[static_cast<size_t>(i)] = -1.0;
    dirs.push_back(e);
  }
  for (int i = 2 * n; i < count; ++i) dirs.push_back(rng.unit_vector(n));
  return dirs;
}

}  // namespace convext
