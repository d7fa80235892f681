#pragma once

// Scalar functions with derivative oracles.
//
// Every field exposes truncated Taylor expansions along a line
// f(x + s*u) and in a plane f(x + s*w + r*v) (second order in r). All
// derivative information in the project flows through these two calls, so
// analytic entries give exact derivatives of any order.

#include <memory>
#include <stdexcept>
#include <vector>

#include "convext/jet.hpp"
#include "convext/linalg.hpp"

namespace convext {

class ScalarField {
 public:
  virtual ~ScalarField() = default;

  virtual int dim() const = 0;
  // highest derivative order the oracle is declared for
  virtual int max_order() const { return 64; }

  virtual double value(const Vec& x) const = 0;
  // jet of s -> f(x + s u)
  virtual Jet1 line_jet(const Vec& x, const Vec& u, int order) const = 0;
  // jet of (s, r) -> f(x + s w + r v), truncated at degree 2 in r
  virtual Jet2 plane_jet(const Vec& x, const Vec& w, const Vec& v, int order) const = 0;
  // full Taylor coefficients at x (only analytic catalog entries support it)
  virtual JetN full_jet(const Vec& /*x*/, int /*order*/) const {
    throw std::logic_error("full jet not available for this field");
  }

  Vec gradient(const Vec& x) const {
    const int n = dim();
    Vec g(static_cast<size_t>(n));
    Vec e(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      e[static_cast<size_t>(i)] = 1.0;
      g[static_cast<size_t>(i)] = line_jet(x, e, 1).coeff(1);
      e[static_cast<size_t>(i)] = 0.0;
    }
    return g;
  }

  Mat hessian(const Vec& x) const {
    const int n = dim();
    Mat H(n);
    Vec ei(static_cast<size_t>(n), 0.0), ej(static_cast<size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      ei[static_cast<size_t>(i)] = 1.0;
      H(i, i) = 2.0 * line_jet(x, ei, 2).coeff(2);
      for (int j = i + 1; j < n; ++j) {
        ej[static_cast<size_t>(j)] = 1.0;
        // coefficient of s*r in f(x + s e_i + r e_j)
        H(i, j) = H(j, i) = plane_jet(x, ei, ej, 2).at(1, 1);
        ej[static_cast<size_t>(j)] = 0.0;
      }
      ei[static_cast<size_t>(i)] = 0.0;
    }
    return H;
  }

  // D^2 f(x)(v^2)
  double dir2(const Vec& x, const Vec& v) const { return 2.0 * line_jet(x, v, 2).coeff(2); }
};

using FieldPtr = std::shared_ptr<const ScalarField>;

// Adapter for expression functors: Expr must provide
//   template <class T> T operator()(const std::vector<T>& x, int order) const;
template <class Expr>
class AnalyticField final : public ScalarField {
 public:
  AnalyticField(Expr e, int n, int declared_order = 64) : expr_(std::move(e)), n_(n), order_(declared_order) {}

  int dim() const override { return n_; }
  int max_order() const override { return order_; }

  double value(const Vec& x) const override { return expr_(x, 0); }

  Jet1 line_jet(const Vec& x, const Vec& u, int order) const override {
    std::vector<Jet1> c;
    c.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
      Jet1 j(order);
      j.coeff(0) = x[i];
      if (order >= 1) j.coeff(1) = u[i];
      c.push_back(j);
    }
    return expr_(c, order);
  }

  Jet2 plane_jet(const Vec& x, const Vec& w, const Vec& v, int order) const override {
    std::vector<Jet2> c;
    c.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) c.push_back(Jet2::variable(x[i], w[i], v[i], order));
    return expr_(c, order);
  }

  JetN full_jet(const Vec& x, int order) const override {
    std::vector<JetN> c;
    c.reserve(x.size());
    for (size_t i = 0; i < x.size(); ++i) c.push_back(JetN::variable(x[i], static_cast<int>(i), n_, order));
    return expr_(c, order);
  }

 private:
  Expr expr_;
  int n_;
  int order_;
};

template <class Expr>
FieldPtr make_analytic_field(Expr e, int n, int declared_order = 64) {
  return std::make_shared<AnalyticField<Expr>>(std::move(e), n, declared_order);
}

// w1*f1 + w2*f2 (+ ...)
class SumField final : public ScalarField {
 public:
  SumField(std::vector<FieldPtr> parts, std::vector<double> weights)
      : parts_(std::move(parts)), w_(std::move(weights)) {
    if (parts_.empty() || parts_.size() != w_.size()) throw std::invalid_argument("sum field: bad parts");
  }
  int dim() const override { return parts_[0]->dim(); }
  int max_order() const override {
    int m = parts_[0]->max_order();
    for (const auto& p : parts_) m = std::min(m, p->max_order());
    return m;
  }
  double value(const Vec& x) const override {
    double s = 0.0;
    for (size_t i = 0; i < parts_.size(); ++i) s += w_[i] * parts_[i]->value(x);
    return s;
  }
  Jet1 line_jet(const Vec& x, const Vec& u, int order) const override {
    Jet1 acc = parts_[0]->line_jet(x, u, order) * w_[0];
    for (size_t i = 1; i < parts_.size(); ++i) acc += parts_[i]->line_jet(x, u, order) * w_[i];
    return acc;
  }
  Jet2 plane_jet(const Vec& x, const Vec& w, const Vec& v, int order) const override {
    Jet2 acc = parts_[0]->plane_jet(x, w, v, order) * w_[0];
    for (size_t i = 1; i < parts_.size(); ++i) acc += parts_[i]->plane_jet(x, w, v, order) * w_[i];
    return acc;
  }

 private:
  std::vector<FieldPtr> parts_;
  std::vector<double> w_;
};

class ProductField final : public ScalarField {
 public:
  ProductField(FieldPtr a, FieldPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  int dim() const override { return a_->dim(); }
  int max_order() const override { return std::min(a_->max_order(), b_->max_order()); }
  double value(const Vec& x) const override { return a_->value(x) * b_->value(x); }
  Jet1 line_jet(const Vec& x, const Vec& u, int order) const override {
    return a_->line_jet(x, u, order) * b_->line_jet(x, u, order);
  }
  Jet2 plane_jet(const Vec& x, const Vec& w, const Vec& v, int order) const override {
    return a_->plane_jet(x, w, v, order) * b_->plane_jet(x, w, v, order);
  }

 private:
  FieldPtr a_, b_;
};

}  // namespace convext
