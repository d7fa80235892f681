#pragma once

// Truncated Taylor (jet) arithmetic used for all derivative oracles.
//
// Jet1  : univariate series  f(x0 + s)           up to a given order.
// Jet2  : bivariate series   f(x0 + s*w + r*v)   up to a given order in s,
//         truncated at degree 2 in r (second directional slots are only
//         ever contracted twice).
// JetN  : full multivariate series up to a total degree, used when whole
//         coefficient tables of a Taylor polynomial are required.
//
// Coefficients are stored divided by factorials (power-series convention),
// so derivative(j) == j! * coeff(j).

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace convext {

class Jet1 {
 public:
  explicit Jet1(int order) : c_(static_cast<size_t>(order) + 1, 0.0) {}

  static Jet1 constant(double v, int order) {
    Jet1 j(order);
    j.c_[0] = v;
    return j;
  }
  // x0 + s
  static Jet1 variable(double x0, int order) {
    Jet1 j(order);
    j.c_[0] = x0;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  double coeff(int j) const { return c_[static_cast<size_t>(j)]; }
  double& coeff(int j) { return c_[static_cast<size_t>(j)]; }
  double constant_term() const { return c_[0]; }
  void set_constant(double v) { c_[0] = v; }

  double derivative(int j) const {
    double f = 1.0;
    for (int i = 2; i <= j; ++i) f *= i;
    return f * c_[static_cast<size_t>(j)];
  }

  Jet1& operator+=(const Jet1& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet1& operator-=(const Jet1& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet1& operator*=(double a) {
    for (double& x : c_) x *= a;
    return *this;
  }
  Jet1& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend Jet1 operator+(Jet1 a, const Jet1& b) { return a += b; }
  friend Jet1 operator-(Jet1 a, const Jet1& b) { return a -= b; }
  friend Jet1 operator*(Jet1 a, double s) { return a *= s; }
  friend Jet1 operator*(double s, Jet1 a) { return a *= s; }
  friend Jet1 operator+(Jet1 a, double s) { return a += s; }
  friend Jet1 operator+(double s, Jet1 a) { return a += s; }
  friend Jet1 operator-(Jet1 a, double s) { return a += -s; }
  friend Jet1 operator-(double s, const Jet1& a) {
    Jet1 r = a * -1.0;
    r += s;
    return r;
  }
  friend Jet1 operator-(const Jet1& a) { return a * -1.0; }

  friend Jet1 operator*(const Jet1& a, const Jet1& b) {
    Jet1 r(a.order());
    const int K = a.order();
    for (int i = 0; i <= K; ++i) {
      const double ai = a.c_[static_cast<size_t>(i)];
      if (ai == 0.0) continue;
      for (int j = 0; j + i <= K; ++j)
        r.c_[static_cast<size_t>(i + j)] += ai * b.c_[static_cast<size_t>(j)];
    }
    return r;
  }

 private:
  std::vector<double> c_;
};

// Bivariate jet in (s, r); full order in s, degree <= 2 in r.
class Jet2 {
 public:
  explicit Jet2(int order_s) : ks_(order_s), c_(3 * (static_cast<size_t>(order_s) + 1), 0.0) {}

  static Jet2 constant(double v, int order_s) {
    Jet2 j(order_s);
    j.at(0, 0) = v;
    return j;
  }
  // x0 + w*s + v*r  (one coordinate of a point moving in the (w,v) plane)
  static Jet2 variable(double x0, double w, double v, int order_s) {
    Jet2 j(order_s);
    j.at(0, 0) = x0;
    if (order_s >= 1) j.at(1, 0) = w;
    j.at(0, 1) = v;
    return j;
  }

  int order_s() const { return ks_; }
  double& at(int i, int k) { return c_[static_cast<size_t>(3 * i + k)]; }
  double at(int i, int k) const { return c_[static_cast<size_t>(3 * i + k)]; }
  double constant_term() const { return c_[0]; }
  void set_constant(double v) { c_[0] = v; }

  Jet2& operator+=(const Jet2& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet2& operator-=(const Jet2& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet2& operator*=(double a) {
    for (double& x : c_) x *= a;
    return *this;
  }
  Jet2& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(Jet2 a, double s) { return a *= s; }
  friend Jet2 operator*(double s, Jet2 a) { return a *= s; }
  friend Jet2 operator+(Jet2 a, double s) { return a += s; }
  friend Jet2 operator+(double s, Jet2 a) { return a += s; }
  friend Jet2 operator-(Jet2 a, double s) { return a += -s; }
  friend Jet2 operator-(double s, const Jet2& a) {
    Jet2 r = a * -1.0;
    r += s;
    return r;
  }
  friend Jet2 operator-(const Jet2& a) { return a * -1.0; }

  friend Jet2 operator*(const Jet2& a, const Jet2& b) {
    Jet2 out(a.ks_);
    const int K = a.ks_;
    for (int i = 0; i <= K; ++i)
      for (int k = 0; k <= 2; ++k) {
        const double av = a.at(i, k);
        if (av == 0.0) continue;
        for (int j = 0; i + j <= K; ++j)
          for (int l = 0; k + l <= 2; ++l) out.at(i + j, k + l) += av * b.at(j, l);
      }
    return out;
  }

 private:
  int ks_;
  std::vector<double> c_;
};

// Full multivariate jet: coefficients over multi-indices of total degree <= K.
class JetN {
 public:
  // Shared index tables for a given (n, K).
  struct Layout {
    int n = 0, K = 0;
    std::vector<std::vector<int>> exps;         // index -> multi-index
    std::vector<std::vector<int>> prod_table;   // prod_table[i][j] = index of exps[i]+exps[j], or -1
    static const Layout& get(int n, int K);
  };

  JetN(int n, int K) : lay_(&Layout::get(n, K)), c_(lay_->exps.size(), 0.0) {}

  static JetN constant(double v, int n, int K) {
    JetN j(n, K);
    j.c_[0] = v;
    return j;
  }
  static JetN variable(double x0, int var, int n, int K) {
    JetN j(n, K);
    j.c_[0] = x0;
    for (size_t i = 0; i < j.lay_->exps.size(); ++i) {
      int deg = 0;
      for (int e : j.lay_->exps[i]) deg += e;
      if (deg == 1 && j.lay_->exps[i][static_cast<size_t>(var)] == 1) {
        j.c_[i] = 1.0;
        break;
      }
    }
    return j;
  }

  int dim() const { return lay_->n; }
  int order() const { return lay_->K; }
  size_t size() const { return c_.size(); }
  const std::vector<int>& exponent(size_t i) const { return lay_->exps[i]; }
  double coeff(size_t i) const { return c_[i]; }
  double& coeff(size_t i) { return c_[i]; }
  double constant_term() const { return c_[0]; }
  void set_constant(double v) { c_[0] = v; }

  JetN& operator+=(const JetN& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  JetN& operator-=(const JetN& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  JetN& operator*=(double a) {
    for (double& x : c_) x *= a;
    return *this;
  }
  JetN& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend JetN operator+(JetN a, const JetN& b) { return a += b; }
  friend JetN operator-(JetN a, const JetN& b) { return a -= b; }
  friend JetN operator*(JetN a, double s) { return a *= s; }
  friend JetN operator*(double s, JetN a) { return a *= s; }
  friend JetN operator+(JetN a, double s) { return a += s; }
  friend JetN operator+(double s, JetN a) { return a += s; }
  friend JetN operator-(JetN a, double s) { return a += -s; }
  friend JetN operator-(double s, const JetN& a) {
    JetN r = a * -1.0;
    r += s;
    return r;
  }
  friend JetN operator-(const JetN& a) { return a * -1.0; }

  friend JetN operator*(const JetN& a, const JetN& b) {
    JetN out(a.lay_->n, a.lay_->K);
    const auto& pt = a.lay_->prod_table;
    for (size_t i = 0; i < a.c_.size(); ++i) {
      const double av = a.c_[i];
      if (av == 0.0) continue;
      const auto& row = pt[i];
      for (size_t j = 0; j < b.c_.size(); ++j) {
        const int t = row[j];
        if (t >= 0) out.c_[static_cast<size_t>(t)] += av * b.c_[j];
      }
    }
    return out;
  }

 private:
  const Layout* lay_;
  std::vector<double> c_;
};

// F(u) for an analytic F given by its derivatives at the constant term of u:
// dervs[k] = F^(k)(u0) (plain derivatives, not divided by k!).
template <class J>
J apply_analytic(const J& u, const std::vector<double>& dervs, int max_order) {
  J ut = u;
  ut.set_constant(0.0);
  J acc = u;  // reuse shape
  acc *= 0.0;
  acc += dervs[0];
  J pw = ut;
  double fact = 1.0;
  for (int k = 1; k <= max_order && k < static_cast<int>(dervs.size()); ++k) {
    fact *= k;
    J term = pw;
    term *= dervs[static_cast<size_t>(k)] / fact;
    acc += term;
    if (k + 1 <= max_order && k + 1 < static_cast<int>(dervs.size())) pw = pw * ut;
  }
  return acc;
}

namespace detail {
inline std::vector<double> derivs_exp(double a, int K) {
  std::vector<double> d(static_cast<size_t>(K) + 1, std::exp(a));
  return d;
}
inline std::vector<double> derivs_recip(double a, int K) {
  if (a == 0.0) throw std::domain_error("jet recip at zero");
  std::vector<double> d(static_cast<size_t>(K) + 1);
  double v = 1.0 / a;
  d[0] = v;
  for (int k = 1; k <= K; ++k) {
    v *= -static_cast<double>(k) / a;
    d[static_cast<size_t>(k)] = v;
  }
  return d;
}
inline std::vector<double> derivs_pow(double a, double gamma, int K) {
  if (a <= 0.0) throw std::domain_error("jet pow at non-positive base");
  std::vector<double> d(static_cast<size_t>(K) + 1);
  double v = std::pow(a, gamma);
  d[0] = v;
  double g = gamma;
  for (int k = 1; k <= K; ++k) {
    v *= g / a;
    d[static_cast<size_t>(k)] = v;
    g -= 1.0;
  }
  return d;
}
inline std::vector<double> derivs_sqrt(double a, int K) { return derivs_pow(a, 0.5, K); }
inline std::vector<double> derivs_sin(double a, int K) {
  std::vector<double> d(static_cast<size_t>(K) + 1);
  const double s = std::sin(a), c = std::cos(a);
  const double cyc[4] = {s, c, -s, -c};
  for (int k = 0; k <= K; ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
  return d;
}
inline std::vector<double> derivs_cos(double a, int K) {
  std::vector<double> d(static_cast<size_t>(K) + 1);
  const double s = std::sin(a), c = std::cos(a);
  const double cyc[4] = {c, -s, -c, s};
  for (int k = 0; k <= K; ++k) d[static_cast<size_t>(k)] = cyc[k % 4];
  return d;
}
inline std::vector<double> derivs_log(double a, int K) {
  if (a <= 0.0) throw std::domain_error("jet log at non-positive argument");
  std::vector<double> d(static_cast<size_t>(K) + 1);
  d[0] = std::log(a);
  double v = 1.0 / a;
  for (int k = 1; k <= K; ++k) {
    d[static_cast<size_t>(k)] = v;
    v *= -static_cast<double>(k) / a;
  }
  return d;
}
}  // namespace detail

template <class J>
J jet_exp(const J& u, int K) {
  return apply_analytic(u, detail::derivs_exp(u.constant_term(), K), K);
}
template <class J>
J jet_recip(const J& u, int K) {
  return apply_analytic(u, detail::derivs_recip(u.constant_term(), K), K);
}
template <class J>
J jet_sqrt(const J& u, int K) {
  return apply_analytic(u, detail::derivs_sqrt(u.constant_term(), K), K);
}
template <class J>
J jet_pow(const J& u, double gamma, int K) {
  return apply_analytic(u, detail::derivs_pow(u.constant_term(), gamma, K), K);
}
template <class J>
J jet_sin(const J& u, int K) {
  return apply_analytic(u, detail::derivs_sin(u.constant_term(), K), K);
}
template <class J>
J jet_cos(const J& u, int K) {
  return apply_analytic(u, detail::derivs_cos(u.constant_term(), K), K);
}
template <class J>
J jet_log(const J& u, int K) {
  return apply_analytic(u, detail::derivs_log(u.constant_term(), K), K);
}

// double overloads so field expressions can be evaluated on plain numbers
inline double jet_exp(double u, int) { return std::exp(u); }
inline double jet_recip(double u, int) { return 1.0 / u; }
inline double jet_sqrt(double u, int) { return std::sqrt(u); }
inline double jet_pow(double u, double g, int) { return std::pow(u, g); }
inline double jet_sin(double u, int) { return std::sin(u); }
inline double jet_cos(double u, int) { return std::cos(u); }
inline double jet_log(double u, int) { return std::log(u); }

}  // namespace convext
