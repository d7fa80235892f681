#include "convext/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

namespace convext {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_unit(const Vec& w) {
  if (std::fabs(norm(w) - 1.0) > 1e-9) throw std::invalid_argument("direction must be a unit vector");
}

double psi_value(const OvaloidSpec& o, const Vec& x) { return o.psi->value(x); }

Vec psi_gradient(const OvaloidSpec& o, const Vec& x) { return o.psi->gradient(x); }

Mat psi_hessian(const OvaloidSpec& o, const Vec& x) { return o.psi->hessian(x); }

// unconstrained minimizer of a strongly convex field, damped Newton
Vec minimize_strongly_convex(const std::vector<OvaloidSpec>& parts, const Vec& start) {
  const int n = static_cast<int>(start.size());
  Vec z = start;
  for (int it = 0; it < 200; ++it) {
    Vec g(static_cast<size_t>(n), 0.0);
    Mat H(n);
    for (const auto& o : parts) {
      const Vec gi = psi_gradient(o, z);
      const Mat Hi = psi_hessian(o, z);
      for (int i = 0; i < n; ++i) {
        g[static_cast<size_t>(i)] += gi[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) H(i, j) += Hi(i, j);
      }
    }
    if (norm(g) < 1e-12) break;
    Vec step = solve_dense(H.a, g);
    double lam = 1.0;
    auto total = [&](const Vec& p) {
      double s = 0.0;
      for (const auto& o : parts) s += psi_value(o, p);
      return s;
    };
    const double f0 = total(z);
    for (int ls = 0; ls < 40; ++ls) {
      Vec trial = z;
      axpy(-lam, step, trial);
      if (total(trial) < f0 - 1e-16) {
        z = trial;
        break;
      }
      lam *= 0.5;
      if (ls == 39) return z;
    }
  }
  return z;
}

// boundary point of {psi<=1} on the segment [inside, outside], psi(inside)<1<psi(outside)
Vec bisect_boundary(const OvaloidSpec& o, Vec inside, Vec outside) {
  for (int it = 0; it < 200; ++it) {
    Vec mid = 0.5 * (inside + outside);
    if (psi_value(o, mid) <= 1.0)
      inside = mid;
    else
      outside = mid;
    if (dist(inside, outside) < 1e-15 * (1.0 + norm(inside))) break;
  }
  return 0.5 * (inside + outside);
}

// Projection onto a single ovaloid: damped Newton on the stationarity system
//   z - x + lam * grad(psi)(z) = 0,  psi(z) = 1,
// started from the boundary point toward the interior minimizer.
Vec project_single_ovaloid(const OvaloidSpec& o, const Vec& x, const Vec& inner) {
  const int n = static_cast<int>(x.size());
  Vec z = bisect_boundary(o, inner, x);
  Vec g = psi_gradient(o, z);
  double gn = norm(g);
  double lam = gn > 1e-12 ? dist(x, z) / gn : 1.0;

  const double scale = 1.0 + norm(x);
  auto residual = [&](const Vec& zz, double ll, Vec& out) {
    const Vec gg = psi_gradient(o, zz);
    out.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i)
      out[static_cast<size_t>(i)] = zz[static_cast<size_t>(i)] - x[static_cast<size_t>(i)] + ll * gg[static_cast<size_t>(i)];
    out[static_cast<size_t>(n)] = psi_value(o, zz) - 1.0;
    double s = 0.0;
    for (double v : out) s += v * v;
    return std::sqrt(s);
  };

  Vec F;
  double res = residual(z, lam, F);
  for (int it = 0; it < 200 && res > 1e-12 * scale; ++it) {
    const Vec gg = psi_gradient(o, z);
    const Mat H = psi_hessian(o, z);
    // assemble (n+1) x (n+1) KKT Jacobian
    std::vector<double> J(static_cast<size_t>((n + 1) * (n + 1)), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) J[static_cast<size_t>(i * (n + 1) + j)] = lam * H(i, j) + (i == j ? 1.0 : 0.0);
      J[static_cast<size_t>(i * (n + 1) + n)] = gg[static_cast<size_t>(i)];
      J[static_cast<size_t>(n * (n + 1) + i)] = gg[static_cast<size_t>(i)];
    }
    Vec rhs = F;
    Vec step;
    try {
      step = solve_dense(J, rhs);
    } catch (const std::runtime_error&) {
      break;
    }
    double damp = 1.0;
    bool ok = false;
    for (int ls = 0; ls < 30; ++ls) {
      Vec zt = z;
      for (int i = 0; i < n; ++i) zt[static_cast<size_t>(i)] -= damp * step[static_cast<size_t>(i)];
      const double lt = lam - damp * step[static_cast<size_t>(n)];
      Vec Ft;
      const double rt = residual(zt, lt, Ft);
      if (rt < res * (1.0 - 1e-4 * damp)) {
        z = zt;
        lam = lt;
        F = Ft;
        res = rt;
        ok = true;
        break;
      }
      damp *= 0.5;
    }
    if (!ok) break;
  }

  if (res > 1e-8 * scale) {
    // fallback: slow feasible descent with radial retraction
    Vec zc = z;
    for (int it = 0; it < 800; ++it) {
      Vec trial = zc;
      axpy(-0.5, zc - x, trial);  // gradient step on |z-x|^2/2
      if (psi_value(o, trial) > 1.0) trial = bisect_boundary(o, inner, trial);
      if (dist(trial, zc) < 1e-13 * scale) break;
      zc = trial;
    }
    Vec Fc;
    const double rc = residual(zc, lam, Fc);
    if (rc < res) z = zc;
    res = std::min(res, rc);
    if (res > 1e-6 * scale) throw NumericFailure("ovaloid projection did not converge", res);
  }
  return z;
}

// support point on a single ovaloid: Newton on grad(psi)(z) = s*w, psi(z) = 1
Vec support_single_ovaloid(const OvaloidSpec& o, const Vec& w, const Vec& inner) {
  const int n = static_cast<int>(w.size());
  // initial boundary point along w
  Vec far = inner;
  double step = 1.0;
  while (psi_value(o, far) <= 1.0) {
    axpy(step, w, far);
    step *= 2.0;
    if (step > 1e12) throw NumericFailure("ovaloid appears unbounded along direction", step);
  }
  Vec z = bisect_boundary(o, inner, far);
  double s = std::max(1e-8, dot(psi_gradient(o, z), w));

  const double scale = 1.0 + norm(z);
  auto residual = [&](const Vec& zz, double ss, Vec& out) {
    const Vec gg = psi_gradient(o, zz);
    out.assign(static_cast<size_t>(n) + 1, 0.0);
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = gg[static_cast<size_t>(i)] - ss * w[static_cast<size_t>(i)];
    out[static_cast<size_t>(n)] = psi_value(o, zz) - 1.0;
    double r2 = 0.0;
    for (double v : out) r2 += v * v;
    return std::sqrt(r2);
  };

  Vec F;
  double res = residual(z, s, F);
  for (int it = 0; it < 200 && res > 1e-12 * scale; ++it) {
    const Mat H = psi_hessian(o, z);
    const Vec gg = psi_gradient(o, z);
    std::vector<double> J(static_cast<size_t>((n + 1) * (n + 1)), 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) J[static_cast<size_t>(i * (n + 1) + j)] = H(i, j);
      J[static_cast<size_t>(i * (n + 1) + n)] = -w[static_cast<size_t>(i)];
      J[static_cast<size_t>(n * (n + 1) + i)] = gg[static_cast<size_t>(i)];
    }
    Vec stepv;
    try {
      stepv = solve_dense(J, F);
    } catch (const std::runtime_error&) {
      break;
    }
    double damp = 1.0;
    bool ok = false;
    for (int ls = 0; ls < 30; ++ls) {
      Vec zt = z;
      for (int i = 0; i < n; ++i) zt[static_cast<size_t>(i)] -= damp * stepv[static_cast<size_t>(i)];
      const double st = s - damp * stepv[static_cast<size_t>(n)];
      Vec Ft;
      const double rt = residual(zt, st, Ft);
      if (rt < res * (1.0 - 1e-4 * damp)) {
        z = zt;
        s = st;
        F = Ft;
        res = rt;
        ok = true;
        break;
      }
      damp *= 0.5;
    }
    if (!ok) break;
  }
  if (res > 1e-7 * scale) throw NumericFailure("ovaloid support solve did not converge", res);
  return z;
}

// Dykstra's alternating projections onto an intersection of ovaloids.
Vec project_intersection(const std::vector<OvaloidSpec>& parts, const Vec& x, const Vec& inner) {
  const size_t N = parts.size();
  Vec z = x;
  std::vector<Vec> corr(N, Vec(x.size(), 0.0));
  const double scale = 1.0 + norm(x);
  for (int cycle = 0; cycle < 600; ++cycle) {
    double moved = 0.0;
    for (size_t j = 0; j < N; ++j) {
      Vec y = z + corr[j];
      Vec pj = psi_value(parts[j], y) <= 1.0 ? y : project_single_ovaloid(parts[j], y, inner);
      corr[j] = y - pj;
      moved += dist(z, pj);
      z = pj;
    }
    if (moved < 1e-13 * scale * static_cast<double>(N)) break;
  }
  return z;
}

}  // namespace

struct ConvexBody::LazyCache {
  std::mutex mu;
  bool has_inner = false;
  Vec inner;
};

ConvexBody ConvexBody::polytope(std::vector<Vec> vertices) {
  if (vertices.empty()) throw std::invalid_argument("polytope needs at least one vertex");
  ConvexBody b;
  b.cache_ = std::make_shared<LazyCache>();
  b.kind_ = Kind::polytope;
  b.n_ = static_cast<int>(vertices[0].size());
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != b.n_) throw std::invalid_argument("polytope vertex dimension mismatch");
  b.vertices_ = std::move(vertices);
  return b;
}

ConvexBody ConvexBody::ball(Vec center, double radius) {
  if (radius <= 0.0) throw std::invalid_argument("ball radius must be positive");
  ConvexBody b;
  b.cache_ = std::make_shared<LazyCache>();
  b.kind_ = Kind::ball;
  b.n_ = static_cast<int>(center.size());
  b.center_ = std::move(center);
  b.radius_ = radius;
  return b;
}

ConvexBody ConvexBody::ovaloid(OvaloidSpec o) {
  if (!o.psi || o.strong_convexity <= 0.0) throw std::invalid_argument("ovaloid needs psi and a positive modulus");
  ConvexBody b;
  b.cache_ = std::make_shared<LazyCache>();
  b.kind_ = Kind::ovaloid;
  b.n_ = o.psi->dim();
  b.ovaloids_.push_back(std::move(o));
  // probe boundedness: the sublevel set of a strongly convex function is
  // bounded iff nonempty; check nonempty at the minimizer
  const Vec z = minimize_strongly_convex(b.ovaloids_, Vec(static_cast<size_t>(b.n_), 0.0));
  if (b.ovaloids_[0].psi->value(z) > 1.0) throw std::invalid_argument("ovaloid sublevel set is empty");
  return b;
}

ConvexBody ConvexBody::intersection(std::vector<OvaloidSpec> parts) {
  if (parts.empty()) throw std::invalid_argument("intersection needs at least one ovaloid");
  ConvexBody b;
  b.cache_ = std::make_shared<LazyCache>();
  b.kind_ = Kind::intersection;
  b.n_ = parts[0].psi->dim();
  for (const auto& o : parts) {
    if (!o.psi || o.strong_convexity <= 0.0) throw std::invalid_argument("intersection: bad ovaloid");
    if (o.psi->dim() != b.n_) throw std::invalid_argument("intersection: dimension mismatch");
  }
  b.ovaloids_ = std::move(parts);
  interior_point(b);  // validates nonempty interior (or singleton)
  return b;
}

Vec interior_point(const ConvexBody& body) {
  {
    std::lock_guard<std::mutex> lock(body.cache_->mu);
    if (body.cache_->has_inner) return body.cache_->inner;
  }
  Vec p;
  switch (body.kind()) {
    case ConvexBody::Kind::polytope: {
      p.assign(static_cast<size_t>(body.dim()), 0.0);
      for (const auto& v : body.vertices()) axpy(1.0 / static_cast<double>(body.vertices().size()), v, p);
      break;
    }
    case ConvexBody::Kind::ball:
      p = body.ball_center();
      break;
    case ConvexBody::Kind::ovaloid:
    case ConvexBody::Kind::intersection: {
      p = minimize_strongly_convex(body.ovaloids(), Vec(static_cast<size_t>(body.dim()), 0.0));
      double worst = -std::numeric_limits<double>::infinity();
      for (const auto& o : body.ovaloids()) worst = std::max(worst, psi_value(o, p));
      // push toward feasibility of the worst constraint if needed
      for (int it = 0; it < 400 && worst > 1.0 - 1e-9; ++it) {
        size_t jw = 0;
        for (size_t j = 0; j < body.ovaloids().size(); ++j)
          if (psi_value(body.ovaloids()[j], p) >= worst - 1e-15) jw = j;
        Vec g = psi_gradient(body.ovaloids()[jw], p);
        const double gn = norm(g);
        if (gn < 1e-14) break;
        axpy(-std::min(0.25, (worst - 1.0 + 0.5) / gn) / gn, g, p);
        worst = -std::numeric_limits<double>::infinity();
        for (const auto& o : body.ovaloids()) worst = std::max(worst, psi_value(o, p));
      }
      if (worst > 1.0 + 1e-9) throw DegenerateBody("intersection of ovaloids has empty interior");
      break;
    }
  }
  std::lock_guard<std::mutex> lock(body.cache_->mu);
  body.cache_->inner = p;
  body.cache_->has_inner = true;
  return p;
}

Vec support_point(const ConvexBody& body, const Vec& w) {
  check_unit(w);
  switch (body.kind()) {
    case ConvexBody::Kind::polytope: {
      double best = -std::numeric_limits<double>::infinity();
      const Vec* arg = nullptr;
      for (const auto& v : body.vertices()) {
        const double s = dot(v, w);
        if (s > best) {
          best = s;
          arg = &v;
        }
      }
      return *arg;
    }
    case ConvexBody::Kind::ball: {
      Vec p = body.ball_center();
      axpy(body.ball_radius(), w, p);
      return p;
    }
    case ConvexBody::Kind::ovaloid:
      return support_single_ovaloid(body.ovaloids()[0], w, interior_point(body));
    case ConvexBody::Kind::intersection: {
      // projected ascent for a linear objective; intersections of ovaloids
      // are strongly convex sets, so the iteration contracts
      const Vec inner = interior_point(body);
      Vec z = inner;
      double sigma = 1.0 + norm(inner);
      double best = dot(z, w);
      for (int it = 0; it < 300; ++it) {
        Vec trial = z;
        axpy(sigma, w, trial);
        bool inside = true;
        for (const auto& o : body.ovaloids())
          if (psi_value(o, trial) > 1.0) inside = false;
        Vec p = inside ? trial : project_intersection(body.ovaloids(), trial, inner);
        const double val = dot(p, w);
        if (val > best + 1e-14 * (1.0 + std::fabs(best))) {
          best = val;
          z = p;
        } else {
          sigma *= 0.5;
          if (sigma < 1e-12) break;
        }
      }
      return z;
    }
  }
  throw std::logic_error("unreachable");
}

double support_function(const ConvexBody& body, const Vec& w) {
  return dot(support_point(body, w), w);
}

bool body_contains(const ConvexBody& body, const Vec& x, double tol) {
  switch (body.kind()) {
    case ConvexBody::Kind::ball:
      return dist(x, body.ball_center()) <= body.ball_radius() + tol;
    case ConvexBody::Kind::ovaloid:
    case ConvexBody::Kind::intersection: {
      for (const auto& o : body.ovaloids())
        if (psi_value(o, x) > 1.0 + tol) return false;
      return true;
    }
    case ConvexBody::Kind::polytope:
      return metric_projection(body, x).distance <= tol;
  }
  return false;
}

namespace {

// Wolfe-style active set for the nearest point in conv(vertices).
ProjectionResult project_polytope(const ConvexBody& body, const Vec& x) {
  const auto& V = body.vertices();
  const int n = body.dim();
  const size_t m = V.size();

  // start from the nearest vertex
  size_t start = 0;
  double bestd = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < m; ++i) {
    const double d = dist(x, V[i]);
    if (d < bestd) {
      bestd = d;
      start = i;
    }
  }
  std::vector<size_t> S{start};
  std::vector<double> lam{1.0};
  Vec p = V[start];

  const double opt_tol = 1e-12 * (1.0 + dot(x, x));
  for (int it = 0; it < 400; ++it) {
    // optimality over all vertices: max <x - p, v - p>
    double worst = 0.0;
    size_t add = m;
    for (size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (int d = 0; d < n; ++d)
        s += (x[static_cast<size_t>(d)] - p[static_cast<size_t>(d)]) * (V[i][static_cast<size_t>(d)] - p[static_cast<size_t>(d)]);
      if (s > worst) {
        worst = s;
        add = i;
      }
    }
    if (worst <= opt_tol) break;
    if (std::find(S.begin(), S.end(), add) == S.end()) {
      S.push_back(add);
      lam.push_back(0.0);
    }

    // inner loop: affine minimization, trimming negative weights
    for (int inner = 0; inner < 200; ++inner) {
      const size_t k = S.size();
      // solve [G 1; 1' 0] [mu; nu] = [V_S' x; 1]
      std::vector<double> A((k + 1) * (k + 1), 0.0);
      Vec rhs(k + 1, 0.0);
      for (size_t a = 0; a < k; ++a) {
        for (size_t b = 0; b < k; ++b) A[a * (k + 1) + b] = dot(V[S[a]], V[S[b]]);
        A[a * (k + 1) + a] += 1e-13;  // regularize affinely dependent sets
        A[a * (k + 1) + k] = 1.0;
        A[k * (k + 1) + a] = 1.0;
        rhs[a] = dot(V[S[a]], x);
      }
      rhs[k] = 1.0;
      Vec sol;
      try {
        sol = solve_dense(A, rhs);
      } catch (const std::runtime_error&) {
        break;
      }
      std::vector<double> mu(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(k));

      bool feasible = true;
      for (double v : mu)
        if (v < -1e-13) feasible = false;
      if (feasible) {
        lam = mu;
        break;
      }
      // step from lam toward mu until the first weight hits zero
      double theta = 1.0;
      for (size_t a = 0; a < k; ++a)
        if (mu[a] < lam[a]) theta = std::min(theta, lam[a] / (lam[a] - mu[a]));
      for (size_t a = 0; a < k; ++a) lam[a] = (1.0 - theta) * lam[a] + theta * mu[a];
      // drop zero weights
      for (size_t a = k; a-- > 0;)
        if (lam[a] <= 1e-13) {
          S.erase(S.begin() + static_cast<std::ptrdiff_t>(a));
          lam.erase(lam.begin() + static_cast<std::ptrdiff_t>(a));
        }
      if (S.empty()) {
        S = {start};
        lam = {1.0};
        break;
      }
    }

    p.assign(static_cast<size_t>(n), 0.0);
    for (size_t a = 0; a < S.size(); ++a) axpy(lam[a], V[S[a]], p);
  }

  ProjectionResult out;
  out.point = p;
  out.distance = dist(x, p);
  if (out.distance > 1e-14) {
    out.direction = x - p;
    for (double& v : out.direction) v /= out.distance;
  } else {
    out.distance = 0.0;
    out.point = x;
    out.direction.assign(static_cast<size_t>(n), 0.0);
  }
  return out;
}

}  // namespace

ProjectionResult metric_projection(const ConvexBody& body, const Vec& x) {
  ProjectionResult out;
  switch (body.kind()) {
    case ConvexBody::Kind::ball: {
      const double d = dist(x, body.ball_center());
      if (d <= body.ball_radius()) {
        out.point = x;
        out.distance = 0.0;
        out.direction.assign(x.size(), 0.0);
      } else {
        out.direction = x - body.ball_center();
        for (double& v : out.direction) v /= d;
        out.point = body.ball_center();
        axpy(body.ball_radius(), out.direction, out.point);
        out.distance = d - body.ball_radius();
      }
      return out;
    }
    case ConvexBody::Kind::polytope:
      return project_polytope(body, x);
    case ConvexBody::Kind::ovaloid:
    case ConvexBody::Kind::intersection: {
      bool inside = true;
      for (const auto& o : body.ovaloids())
        if (psi_value(o, x) > 1.0) inside = false;
      if (inside) {
        out.point = x;
        out.distance = 0.0;
        out.direction.assign(x.size(), 0.0);
        return out;
      }
      const Vec inner = interior_point(body);
      Vec p = body.kind() == ConvexBody::Kind::ovaloid ? project_single_ovaloid(body.ovaloids()[0], x, inner)
                                                       : project_intersection(body.ovaloids(), x, inner);
      out.point = p;
      out.distance = dist(x, p);
      out.direction = x - p;
      if (out.distance > 1e-300)
        for (double& v : out.direction) v /= out.distance;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

double minkowski_functional(const ConvexBody& body, const Vec& x, const Vec& center) {
  if (!body_contains(body, center, -1e-10)) {
    // probe interiority: the gauge needs center strictly inside
    if (!body_contains(body, center, 1e-12)) throw std::invalid_argument("gauge center must lie in the body");
  }
  Vec d = x - center;
  const double dn = norm(d);
  if (dn == 0.0) return 0.0;

  auto member = [&](double t) {
    Vec p = center;
    axpy(1.0 / t, d, p);
    return body_contains(body, p, 1e-12);
  };

  double hi = 1.0;
  int guard = 0;
  while (!member(hi)) {
    hi *= 2.0;
    if (++guard > 200) throw std::invalid_argument("gauge center must lie in the interior of the body");
  }
  double lo = hi;
  guard = 0;
  while (member(lo)) {
    lo *= 0.5;
    if (lo < 1e-300) return 0.0;  // ray stays inside arbitrarily far: compactness says x == center
    if (++guard > 2000) break;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (member(mid))
      hi = mid;
    else
      lo = mid;
    if (hi - lo < 1e-14 * hi) break;
  }
  return 0.5 * (lo + hi);
}

double ray_extent(const ConvexBody& body, const Vec& origin, const Vec& dir) {
  double lo = 0.0, hi = 1.0;
  int guard = 0;
  auto inside = [&](double s) {
    Vec p = origin;
    axpy(s, dir, p);
    return body_contains(body, p, 1e-12);
  };
  if (!inside(0.0)) throw std::invalid_argument("ray origin must lie in the body");
  while (inside(hi)) {
    hi *= 2.0;
    if (++guard > 200) throw NumericFailure("ray extent: body appears unbounded", hi);
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inside(mid))
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-14 * (1.0 + hi)) break;
  }
  return 0.5 * (lo + hi);
}

GaugeConstants gauge_constants(const ConvexBody& body, const Vec& center, int grid) {
  const int n = body.dim();
  if (grid <= 0) grid = n == 2 ? 512 : (n >= 3 ? 1024 : 2);
  std::vector<Vec> dirs = direction_grid(n, grid);
  if (body.kind() == ConvexBody::Kind::polytope) {
    for (const auto& v : body.vertices()) {
      Vec d = v - center;
      const double dn = norm(d);
      if (dn > 1e-12) {
        for (double& c : d) c /= dn;
        dirs.push_back(d);
      }
    }
  }
  double r = std::numeric_limits<double>::infinity();
  double R = 0.0;
  for (const auto& d : dirs) {
    const double s = ray_extent(body, center, d);
    r = std::min(r, s);
    R = std::max(R, s);
  }
  if (body.kind() == ConvexBody::Kind::polytope)
    for (const auto& v : body.vertices()) R = std::max(R, dist(v, center));
  if (!(r > 1e-8)) throw DegenerateBody("inscribed radius below tolerance");
  return {r, R, R / r};
}

double diameter(const ConvexBody& body) {
  switch (body.kind()) {
    case ConvexBody::Kind::polytope: {
      double best = 0.0;
      const auto& V = body.vertices();
      for (size_t i = 0; i < V.size(); ++i)
        for (size_t j = i + 1; j < V.size(); ++j) best = std::max(best, dist(V[i], V[j]));
      return best;
    }
    case ConvexBody::Kind::ball:
      return 2.0 * body.ball_radius();
    case ConvexBody::Kind::ovaloid:
    case ConvexBody::Kind::intersection: {
      // upper bound 2R; a larger diameter only strengthens the convexifier
      const Vec c = interior_point(body);
      return 2.0 * gauge_constants(body, c).R;
    }
  }
  throw std::logic_error("unreachable");
}

double alpha_angle(double t, double diam) {
  if (!(t > 0.0)) throw std::invalid_argument("alpha angle needs positive distance");
  return t / (t + diam);
}

Cap select_cap(const Vec& x, const Vec& v_in, const ConvexBody& body) {
  const int n = body.dim();
  if (n < 2) throw std::invalid_argument("cap selection needs ambient dimension >= 2");
  const ProjectionResult pr = metric_projection(body, x);
  if (pr.distance <= 0.0) throw std::invalid_argument("cap selection needs a point outside the body");
  const Vec& u = pr.direction;
  Vec v = v_in;
  if (dot(u, v) < 0.0)
    for (double& c : v) c = -c;  // second slots enter squared

  const double alpha = alpha_angle(pr.distance, diameter(body));
  const double rot = 5.0 * alpha / 12.0;

  Vec e2;
  Vec vp = v;
  axpy(-dot(v, u), u, vp);
  const double vpn = norm(vp);
  if (vpn > 1e-12) {
    e2 = vp;
    for (double& c : e2) c /= vpn;
  } else {
    // aligned case: rotate toward the lowest-index axis not parallel to u
    int j = 0;
    while (j < n && std::fabs(u[static_cast<size_t>(j)]) > 1.0 - 1e-12) ++j;
    if (j >= n) j = 0;
    Vec ej(static_cast<size_t>(n), 0.0);
    ej[static_cast<size_t>(j)] = 1.0;
    axpy(-dot(ej, u), u, ej);
    e2 = normalized(ej);
  }

  Cap cap;
  cap.w0 = std::cos(rot) * u;
  axpy(std::sin(rot), e2, cap.w0);
  cap.half_angle = alpha / 12.0;
  return cap;
}

double sphere_surface(int n) {
  // vol(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2)
  if (n < 1) throw std::invalid_argument("sphere_surface needs n >= 1");
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

double cap_volume_bound(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("cap bound needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("cap bound needs alpha in (0,1]");
  const double volm2 = n == 2 ? 1.0 : sphere_surface(n - 1);
  const double vn = volm2 / (12.0 * (n - 1) * std::pow(24.0, n - 2));
  return vn * std::pow(alpha, n - 1);
}

double cap_exact_measure(int n, double half_angle) {
  if (n < 2) throw std::invalid_argument("cap measure needs n >= 2");
  if (n == 2) return 2.0 * half_angle;  // two-sided arc
  if (n == 3) return 2.0 * kPi * (1.0 - std::cos(half_angle));
  // generic: vol(S^{n-2}) * int_0^beta sin^{n-2}, composite Simpson
  const int M = 512;
  double s = 0.0;
  const double h = half_angle / M;
  for (int i = 0; i <= M; ++i) {
    const double b = i * h;
    const double wgt = (i == 0 || i == M) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += wgt * std::pow(std::sin(b), n - 2);
  }
  return sphere_surface(n - 1) * s * h / 3.0;
}

Vec sample_cap(const Cap& cap, Rng& rng) {
  const int n = static_cast<int>(cap.w0.size());
  if (n == 2) {
    const double th = rng.uniform(-cap.half_angle, cap.half_angle);
    // rotate w0 by th
    const double c = std::cos(th), s = std::sin(th);
    return {c * cap.w0[0] - s * cap.w0[1], s * cap.w0[0] + c * cap.w0[1]};
  }
  // rotate w0 by a random angle within the cap, in a random tangent plane
  Vec t = rng.unit_vector(n);
  axpy(-dot(t, cap.w0), cap.w0, t);
  double tn = norm(t);
  while (tn < 1e-9) {
    t = rng.unit_vector(n);
    axpy(-dot(t, cap.w0), cap.w0, t);
    tn = norm(t);
  }
  for (double& c : t) c /= tn;
  const double th = cap.half_angle * std::sqrt(rng.uniform01());  // area-ish weighting
  Vec w = std::cos(th) * cap.w0;
  axpy(std::sin(th), t, w);
  return w;
}

namespace {

bool polytope_is_segmentish(const std::vector<Vec>& V) {
  if (V.size() <= 2) return true;
  // affinely 1-dimensional?
  Vec d = V[1] - V[0];
  const double dn = norm(d);
  if (dn < 1e-14) return true;
  for (double& c : d) c /= dn;
  for (size_t i = 2; i < V.size(); ++i) {
    Vec e = V[i] - V[0];
    axpy(-dot(e, d), d, e);
    if (norm(e) > 1e-12) return false;
  }
  return true;
}

}  // namespace

std::vector<Vec> sample_boundary(const ConvexBody& body, int count) {
  std::vector<Vec> pts;
  const int n = body.dim();
  switch (body.kind()) {
    case ConvexBody::Kind::polytope: {
      const auto& V = body.vertices();
      pts.insert(pts.end(), V.begin(), V.end());
      if (V.size() >= 2) {
        const int per_edge = std::max(3, count / static_cast<int>(V.size() * (V.size() - 1) / 2 + 1)) | 1;
        for (size_t i = 0; i < V.size(); ++i)
          for (size_t j = i + 1; j < V.size(); ++j)
            for (int k = 1; k < per_edge; ++k) {
              const double t = static_cast<double>(k) / per_edge;
              Vec p = (1.0 - t) * V[i];
              axpy(t, V[j], p);
              pts.push_back(p);
            }
      }
      return pts;
    }
    case ConvexBody::Kind::ball: {
      for (const auto& d : direction_grid(n, count)) {
        Vec p = body.ball_center();
        axpy(body.ball_radius(), d, p);
        pts.push_back(p);
      }
      return pts;
    }
    case ConvexBody::Kind::ovaloid:
    case ConvexBody::Kind::intersection: {
      const Vec c = interior_point(body);
      for (const auto& d : direction_grid(n, count)) {
        const double s = ray_extent(body, c, d);
        Vec p = c;
        axpy(s, d, p);
        pts.push_back(p);
      }
      return pts;
    }
  }
  return pts;
}

std::vector<Vec> sample_body(const ConvexBody& body, int count) {
  std::vector<Vec> pts = sample_boundary(body, (2 * count) / 3 + 1);
  // add interior points by shrinking boundary samples toward an anchor
  Vec anchor;
  if (body.kind() == ConvexBody::Kind::polytope && polytope_is_segmentish(body.vertices()))
    return pts;  // flat body: boundary cover is the whole set
  anchor = interior_point(body);
  const std::vector<double> shells{0.25, 0.5, 0.75};
  std::vector<Vec> extra;
  for (double s : shells)
    for (size_t i = 0; i < pts.size(); i += 3) {
      Vec p = (1.0 - s) * pts[i];
      axpy(s, anchor, p);
      extra.push_back(p);
    }
  extra.push_back(anchor);
  pts.insert(pts.end(), extra.begin(), extra.end());
  return pts;
}

}  // namespace convext
