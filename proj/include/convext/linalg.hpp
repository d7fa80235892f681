#pragma once

// Small dense vector/matrix helpers. Ambient dimensions here are tiny
// (typically 1..3), so everything is hand-rolled on std::vector<double>.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace convext {

using Vec = std::vector<double>;

struct Mat {
  int n = 0;
  std::vector<double> a;  // row-major n*n

  Mat() = default;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_), 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<size_t>(i * n + j)]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i * n + j)]; }
};

inline double dot(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

inline double norm(const Vec& x) { return std::sqrt(dot(x, x)); }

inline Vec operator+(Vec x, const Vec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] += y[i];
  return x;
}
inline Vec operator-(Vec x, const Vec& y) {
  for (size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
  return x;
}
inline Vec operator*(double a, Vec x) {
  for (double& v : x) v *= a;
  return x;
}

inline void axpy(double a, const Vec& x, Vec& y) {
  for (size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline Vec normalized(const Vec& x) {
  const double n = norm(x);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  Vec r = x;
  for (double& v : r) v /= n;
  return r;
}

inline double dist(const Vec& x, const Vec& y) {
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return std::sqrt(s);
}

// angle between unit vectors, robust near 0 and pi
inline double unit_angle(const Vec& u, const Vec& v) {
  const double c = dot(u, v);
  if (c > 1.0 - 1e-9 || c < -1.0 + 1e-9) {
    // use the chord for accuracy at the ends
    double d2 = 0.0, s2 = 0.0;
    for (size_t i = 0; i < u.size(); ++i) {
      const double dm = u[i] - v[i], dp = u[i] + v[i];
      d2 += dm * dm;
      s2 += dp * dp;
    }
    return c > 0.0 ? 2.0 * std::asin(0.5 * std::sqrt(d2)) : 3.14159265358979323846 - 2.0 * std::asin(0.5 * std::sqrt(s2));
  }
  return std::acos(c);
}

// Solve A x = b in place by Gaussian elimination with partial pivoting.
// A is row-major m x m. Throws on (near-)singular systems.
inline Vec solve_dense(std::vector<double> A, Vec b) {
  const int m = static_cast<int>(b.size());
  for (int col = 0; col < m; ++col) {
    int piv = col;
    double best = std::fabs(A[static_cast<size_t>(col * m + col)]);
    for (int r = col + 1; r < m; ++r) {
      const double v = std::fabs(A[static_cast<size_t>(r * m + col)]);
      if (v > best) {
        best = v;
        piv = r;
      }
    }
    if (best < 1e-300) throw std::runtime_error("singular linear system");
    if (piv != col) {
      for (int j = 0; j < m; ++j) std::swap(A[static_cast<size_t>(col * m + j)], A[static_cast<size_t>(piv * m + j)]);
      std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(piv)]);
    }
    const double d = A[static_cast<size_t>(col * m + col)];
    for (int r = col + 1; r < m; ++r) {
      const double f = A[static_cast<size_t>(r * m + col)] / d;
      if (f == 0.0) continue;
      for (int j = col; j < m; ++j) A[static_cast<size_t>(r * m + j)] -= f * A[static_cast<size_t>(col * m + j)];
      b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
    }
  }
  Vec x(static_cast<size_t>(m), 0.0);
  for (int r = m - 1; r >= 0; --r) {
    double s = b[static_cast<size_t>(r)];
    for (int j = r + 1; j < m; ++j) s -= A[static_cast<size_t>(r * m + j)] * x[static_cast<size_t>(j)];
    x[static_cast<size_t>(r)] = s / A[static_cast<size_t>(r * m + r)];
  }
  return x;
}

// Eigenvalues of a symmetric matrix by cyclic Jacobi. Returns ascending values.
inline Vec sym_eigenvalues(Mat A) {
  const int n = A.n;
  if (n == 1) return {A(0, 0)};
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += A(p, q) * A(p, q);
    if (off < 1e-28) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(A(p, q)) < 1e-300) continue;
        const double theta = 0.5 * (A(q, q) - A(p, p)) / A(p, q);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = A(k, p), akq = A(k, q);
          A(k, p) = c * akp - s * akq;
          A(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = A(p, k), aqk = A(q, k);
          A(p, k) = c * apk - s * aqk;
          A(q, k) = s * apk + c * aqk;
        }
      }
  }
  Vec ev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = A(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline double min_eigenvalue(const Mat& A) { return sym_eigenvalues(A).front(); }

}  // namespace convext
