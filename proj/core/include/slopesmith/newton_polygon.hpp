#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "slopesmith/laurent.hpp"
#include "slopesmith/upoly.hpp"

namespace slopesmith::newton {

struct LatticePoint {
  std::int64_t x = 0;  // first-variable exponent
  std::int64_t y = 0;  // second-variable exponent

  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticePoint operator*(std::int64_t k, LatticePoint a) { return {k * a.x, k * a.y}; }
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

std::int64_t cross(LatticePoint a, LatticePoint b);

struct Edge {
  LatticePoint start;
  LatticePoint direction;  // primitive
  std::int64_t lattice_length = 1;

  LatticePoint end() const { return start + lattice_length * direction; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

enum class Degeneracy { none, point, segment };

enum class Axis { first, second };

// Convex hull of a support set. Vertices are counterclockwise starting from
// the lexicographically smallest point, with no three collinear. A segment
// has two vertices and the two opposite edges; a point has no edges.
class NewtonPolygon {
 public:
  NewtonPolygon(std::vector<LatticePoint> vertices, std::vector<Edge> edges, Degeneracy degeneracy);

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  Degeneracy degeneracy() const { return degeneracy_; }
  bool is_degenerate() const { return degeneracy_ != Degeneracy::none; }
  bool contains(LatticePoint p) const;
  // Twice the Euclidean area.
  std::int64_t twice_area() const;

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<Edge> edges_;
  Degeneracy degeneracy_;
};

// Unoriented edge slope d(first exponent) / d(second exponent), reduced,
// with the second entry >= 0; infinity is stored as (1, 0).
class EdgeSlope {
 public:
  EdgeSlope(std::int64_t d_first, std::int64_t d_second);
  static EdgeSlope infinity() { return {1, 0}; }

  std::int64_t d_first() const { return d_first_; }
  std::int64_t d_second() const { return d_second_; }
  bool is_infinite() const { return d_second_ == 0; }
  ExtendedRational value() const;
  std::string to_string() const;

  friend bool operator==(const EdgeSlope&, const EdgeSlope&) = default;
  // Orders as extended rationals with infinity last.
  friend bool operator<(const EdgeSlope& a, const EdgeSlope& b);

 private:
  std::int64_t d_first_;
  std::int64_t d_second_;
};

using SlopeSet = std::set<EdgeSlope>;

NewtonPolygon compute_polygon(const LaurentPoly2& p);
NewtonPolygon hull_of(std::vector<LatticePoint> points);
// One slope per class of parallel edges. Throws DomainError on degenerate polygons.
SlopeSet boundary_slopes(const NewtonPolygon& n);
std::int64_t axis_diameter(const NewtonPolygon& n, Axis axis);

// Coefficients of p along an edge of its polygon, position k = start + k*direction.
UPoly edge_polynomial(const LaurentPoly2& p, const Edge& edge);

// Orders n <= bound of roots of unity among the roots of p, minimal per
// cyclotomic factor, increasing. Empty means none detected.
std::vector<int> unity_order(const UPoly& p, int bound = 120);

enum class Minimality { minimal, possibly_factorable };

struct MinimalityCertificate {
  Minimality verdict = Minimality::possibly_factorable;
  // Per slope class: lattice lower bounds contributed to each axis diameter.
  struct SlopeBound {
    EdgeSlope slope;
    std::int64_t first_axis_bound;
    std::int64_t second_axis_bound;
  };
  std::vector<SlopeBound> slope_bounds;
  std::int64_t first_axis_lower_bound = 0;
  std::int64_t second_axis_lower_bound = 0;
  std::int64_t first_axis_diameter = 0;
  std::int64_t second_axis_diameter = 0;
  // A factor supported on a single slope direction, when one exists.
  std::optional<LaurentPoly2> segment_factor;
  std::vector<std::string> notes;
};

// Decides whether every factor of p whose polygon has exactly the expected
// slopes must equal p. Throws DomainError when the slopes do not match p's polygon.
MinimalityCertificate minimality_check(const LaurentPoly2& p, const SlopeSet& expected_slopes);

}  // namespace slopesmith::newton
