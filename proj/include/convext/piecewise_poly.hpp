#pragma once

// Piecewise polynomial on [0, +inf) with exact antiderivatives.
// Segment i covers [breaks[i], breaks[i+1]); the last segment extends to
// +inf. Coefficients are stored in the local variable (t - breaks[i]).

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace convext {

class PiecewisePoly {
 public:
  PiecewisePoly() = default;
  PiecewisePoly(std::vector<double> breaks, std::vector<std::vector<double>> coeffs)
      : breaks_(std::move(breaks)), coeffs_(std::move(coeffs)) {
    if (breaks_.empty() || coeffs_.size() != breaks_.size())
      throw std::invalid_argument("piecewise poly: breaks/coeffs mismatch");
  }

  // value at t; for t < breaks.front() returns 0
  double operator()(double t) const {
    if (t < breaks_.front()) return 0.0;
    const size_t i = segment(t);
    return eval_local(coeffs_[i], t - breaks_[i]);
  }

  // j-th derivative at t (one-sided from the right at breakpoints)
  double derivative(double t, int j) const {
    if (t < breaks_.front()) return 0.0;
    const size_t i = segment(t);
    const auto& c = coeffs_[i];
    const double u = t - breaks_[i];
    double s = 0.0, upow = 1.0;
    for (size_t k = static_cast<size_t>(j); k < c.size(); ++k) {
      double f = 1.0;
      for (int l = 0; l < j; ++l) f *= static_cast<double>(k) - static_cast<double>(l);
      s += c[k] * f * upow;
      upow *= u;
    }
    return s;
  }

  // exact antiderivative vanishing at breaks.front()
  PiecewisePoly antiderivative() const {
    std::vector<std::vector<double>> out(coeffs_.size());
    double acc = 0.0;  // running value at the left end of each segment
    for (size_t i = 0; i < coeffs_.size(); ++i) {
      const auto& c = coeffs_[i];
      std::vector<double> a(c.size() + 1, 0.0);
      a[0] = acc;
      for (size_t k = 0; k < c.size(); ++k) a[k + 1] = c[k] / static_cast<double>(k + 1);
      out[i] = a;
      if (i + 1 < coeffs_.size()) acc = eval_local(out[i], breaks_[i + 1] - breaks_[i]);
    }
    return PiecewisePoly(breaks_, std::move(out));
  }

  const std::vector<double>& breaks() const { return breaks_; }
  const std::vector<std::vector<double>>& coeffs() const { return coeffs_; }
  int max_degree() const {
    size_t d = 0;
    for (const auto& c : coeffs_) d = std::max(d, c.size());
    return static_cast<int>(d) - 1;
  }

 private:
  static double eval_local(const std::vector<double>& c, double u) {
    double s = 0.0;
    for (size_t k = c.size(); k-- > 0;) s = s * u + c[k];
    return s;
  }

  size_t segment(double t) const {
    size_t lo = 0, hi = breaks_.size();
    while (hi - lo > 1) {
      const size_t mid = (lo + hi) / 2;
      if (breaks_[mid] <= t)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  std::vector<double> breaks_;
  std::vector<std::vector<double>> coeffs_;
};

}  // namespace convext
