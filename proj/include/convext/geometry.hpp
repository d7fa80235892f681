#pragma once

// Compact convex bodies: support functions, metric projections, Minkowski
// gauges, inscribed/circumscribed radii, and the outward cap selection used
// by the convexifier bounds.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "convext/linalg.hpp"
#include "convext/rng.hpp"
#include "convext/scalar_field.hpp"

namespace convext {

struct NumericFailure : std::runtime_error {
  double residual;
  NumericFailure(const std::string& what, double res) : std::runtime_error(what), residual(res) {}
};

struct DegenerateBody : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConstructionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// sublevel set {psi <= 1} of a uniformly convex function
struct OvaloidSpec {
  FieldPtr psi;
  double strong_convexity = 0.0;  // D^2 psi >= strong_convexity * I everywhere
};

class ConvexBody {
 public:
  enum class Kind { polytope, ball, ovaloid, intersection };

  static ConvexBody polytope(std::vector<Vec> vertices);
  static ConvexBody ball(Vec center, double radius);
  static ConvexBody ovaloid(OvaloidSpec o);
  static ConvexBody intersection(std::vector<OvaloidSpec> parts);

  Kind kind() const { return kind_; }
  int dim() const { return n_; }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const Vec& ball_center() const { return center_; }
  double ball_radius() const { return radius_; }
  const std::vector<OvaloidSpec>& ovaloids() const { return ovaloids_; }

 private:
  friend Vec interior_point(const ConvexBody& body);

  struct LazyCache;

  Kind kind_ = Kind::ball;
  int n_ = 0;
  std::vector<Vec> vertices_;
  Vec center_;
  double radius_ = 0.0;
  std::vector<OvaloidSpec> ovaloids_;
  std::shared_ptr<LazyCache> cache_;
};

struct ProjectionResult {
  Vec point;        // nearest point of the body
  double distance;  // d(x, C)
  Vec direction;    // (x - point)/distance, valid only when distance > 0
};

struct Cap {
  Vec w0;
  double half_angle;  // alpha_x / 12
};

struct GaugeConstants {
  double r;  // probed inscribed radius
  double R;  // probed circumscribed radius
  double L;  // R / r
};

double support_function(const ConvexBody& body, const Vec& w);
Vec support_point(const ConvexBody& body, const Vec& w);
ProjectionResult metric_projection(const ConvexBody& body, const Vec& x);
bool body_contains(const ConvexBody& body, const Vec& x, double tol = 1e-10);
double minkowski_functional(const ConvexBody& body, const Vec& x, const Vec& center);
GaugeConstants gauge_constants(const ConvexBody& body, const Vec& center, int grid = 0);
double diameter(const ConvexBody& body);
Vec interior_point(const ConvexBody& body);

// alpha = t / (t + diam), in (0, 1]
double alpha_angle(double t, double diam);

Cap select_cap(const Vec& x, const Vec& v, const ConvexBody& body);
double cap_volume_bound(int n, double alpha);

// true surface measure of an angular cap of the given half-angle
double cap_exact_measure(int n, double half_angle);
// true measure of the unit sphere S^{n-1}
double sphere_surface(int n);

// deterministic point covers of the body (boundary-heavy) for sampling sweeps
std::vector<Vec> sample_body(const ConvexBody& body, int count);
std::vector<Vec> sample_boundary(const ConvexBody& body, int count);

// uniform-ish random unit vector within the cap
Vec sample_cap(const Cap& cap, Rng& rng);
// largest s >= 0 with origin+s*dir inside the body (ray from an interior point)
double ray_extent(const ConvexBody& body, const Vec& origin, const Vec& dir);

}  // namespace convext
