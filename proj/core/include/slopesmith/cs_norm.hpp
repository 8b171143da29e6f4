#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopesmith/newton_polygon.hpp"
#include "slopesmith/rational.hpp"

namespace slopesmith::norm {

// Integer homology class a*mu + b*beta of the boundary torus.
struct PeripheralClass {
  std::int64_t a = 0;
  std::int64_t b = 0;

  ExtendedRational slope() const;
  friend bool operator==(const PeripheralClass&, const PeripheralClass&) = default;
};

// Value on (a, b) is weight * |q*a + p*b|.
struct Functional {
  std::int64_t q = 0;
  std::int64_t p = 0;
  std::int64_t weight = 1;
  friend bool operator==(const Functional&, const Functional&) = default;
};

class Seminorm {
 public:
  explicit Seminorm(std::vector<Functional> functionals);

  const std::vector<Functional>& functionals() const { return functionals_; }
  Rational eval(const Rational& a, const Rational& b) const;
  // True when the functionals span the dual plane.
  bool is_norm() const;

 private:
  std::vector<Functional> functionals_;
};

struct RationalPoint {
  Rational a;
  Rational b;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

// Closed ball of radius r; vertices counterclockwise, starting at the first
// vertex at or after angle 0.
struct NormBall {
  std::vector<RationalPoint> vertices;
  Rational radius;
};

// One functional per class of parallel edges, weighted by lattice length
// (the larger one when opposite sides differ).
Seminorm seminorm_from_polygon(const newton::NewtonPolygon& n);
Rational eval_norm(const Seminorm& s, const PeripheralClass& c);
// Minimal norm over nonzero lattice classes. Throws DomainError for degenerate seminorms.
Rational minimal_lattice_norm(const Seminorm& s);
NormBall ball_polygon(const Seminorm& s);
Rational shoelace_area(const std::vector<RationalPoint>& polygon);

// max - min, or infinity when infinity belongs to the set. Throws on an empty set.
ExtendedRational slope_set_diameter(const newton::SlopeSet& slopes);
// |s_gamma| = pole order of f_beta / pole order of f_mu.
Rational ideal_point_slope(std::int64_t pole_beta, std::int64_t pole_mu);
// 1 / (2 t (1 - t)) for 0 < t < 1.
Rational cs_bound(const Rational& t);

struct FundamentalPolygonReport {
  Rational area;
  bool area_is_four = false;
  bool mu_at_edge_midpoint = false;
  std::vector<ExtendedRational> vertex_slopes;  // distinct, increasing (infinity last)
  bool slopes_have_form = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> pq;
  bool passed = false;
  std::vector<std::string> notes;
};

// Checks a parallelogram ball against the diameter-2 picture: area 4, mu at
// the midpoint of a side, vertex slopes -p/q and 2 - p/q with 0 <= p <= q.
// Throws DomainError when the ball is not a parallelogram.
FundamentalPolygonReport fundamental_polygon_check(const NormBall& ball, const PeripheralClass& mu);

}  // namespace slopesmith::norm
