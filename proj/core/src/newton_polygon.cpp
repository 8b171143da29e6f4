#include "slopesmith/newton_polygon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace slopesmith::newton {

std::int64_t cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

__extension__ typedef __int128 wide;

std::vector<Edge> edges_of(const std::vector<LatticePoint>& vertices) {
  std::vector<Edge> edges;
  if (vertices.size() < 2) return edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const LatticePoint a = vertices[i];
    const LatticePoint b = vertices[(i + 1) % vertices.size()];
    const LatticePoint d = b - a;
    const std::int64_t g = std::gcd(iabs(d.x), iabs(d.y));
    edges.push_back(Edge{a, LatticePoint{d.x / g, d.y / g}, g});
  }
  return edges;
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<LatticePoint> vertices, std::vector<Edge> edges, Degeneracy degeneracy)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), degeneracy_(degeneracy) {}

bool NewtonPolygon::contains(LatticePoint p) const {
  switch (degeneracy_) {
    case Degeneracy::point:
      return p == vertices_.front();
    case Degeneracy::segment: {
      const LatticePoint a = vertices_[0];
      const LatticePoint b = vertices_[1];
      if (cross(b - a, p - a) != 0) return false;
      return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
             p.y <= std::max(a.y, b.y);
    }
    case Degeneracy::none:
      break;
  }
  return std::all_of(edges_.begin(), edges_.end(),
                     [&](const Edge& e) { return cross(e.direction, p - e.start) >= 0; });
}

std::int64_t NewtonPolygon::twice_area() const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    acc += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  }
  return acc;
}

EdgeSlope::EdgeSlope(std::int64_t d_first, std::int64_t d_second) {
  if (d_first == 0 && d_second == 0) throw DomainError("slope of a zero vector");
  const std::int64_t g = std::gcd(iabs(d_first), iabs(d_second));
  d_first /= g;
  d_second /= g;
  if (d_second < 0) {
    d_first = -d_first;
    d_second = -d_second;
  }
  if (d_second == 0) d_first = 1;
  d_first_ = d_first;
  d_second_ = d_second;
}

ExtendedRational EdgeSlope::value() const {
  if (is_infinite()) return ExtendedRational::infinity();
  return ExtendedRational::finite(Rational(d_first_, d_second_));
}

std::string EdgeSlope::to_string() const { return value().to_string(); }

bool operator<(const EdgeSlope& a, const EdgeSlope& b) {
  if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
  // Denominators are positive.
  return static_cast<wide>(a.d_first_) * b.d_second_ < static_cast<wide>(b.d_first_) * a.d_second_;
}

NewtonPolygon hull_of(std::vector<LatticePoint> points) {
  if (points.empty()) throw DomainError("hull of an empty support");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() == 1) return NewtonPolygon(points, {}, Degeneracy::point);

  std::vector<LatticePoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
    const auto& p = points[i];
    while (k >= t && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  hull.resize(k - 1);
  if (hull.size() == 2) return NewtonPolygon(hull, edges_of(hull), Degeneracy::segment);
  auto edges = edges_of(hull);
  return NewtonPolygon(std::move(hull), std::move(edges), Degeneracy::none);
}

NewtonPolygon compute_polygon(const LaurentPoly2& p) {
  if (p.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  std::vector<LatticePoint> pts;
  pts.reserve(p.size());
  for (const auto& e : p.support()) pts.push_back({e[0], e[1]});
  return hull_of(std::move(pts));
}

SlopeSet boundary_slopes(const NewtonPolygon& n) {
  if (n.is_degenerate()) throw DomainError("boundary slopes of a degenerate polygon");
  SlopeSet out;
  for (const auto& e : n.edges()) out.insert(EdgeSlope(e.direction.x, e.direction.y));
  return out;
}

std::int64_t axis_diameter(const NewtonPolygon& n, Axis axis) {
  const auto& v = n.vertices();
  const auto coord = [axis](const LatticePoint& p) { return axis == Axis::first ? p.x : p.y; };
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return coord(a) < coord(b);
  });
  return coord(*hi) - coord(*lo);
}

UPoly edge_polynomial(const LaurentPoly2& p, const Edge& edge) {
  const NewtonPolygon n = compute_polygon(p);
  const Edge reversed{edge.end(), LatticePoint{-edge.direction.x, -edge.direction.y}, edge.lattice_length};
  const bool on_hull = std::any_of(n.edges().begin(), n.edges().end(),
                                   [&](const Edge& e) { return e == edge || e == reversed; });
  if (!on_hull) throw DomainError("edge not on hull");
  std::vector<Rational> coeffs;
  for (std::int64_t k = 0; k <= edge.lattice_length; ++k) {
    const LatticePoint q = edge.start + k * edge.direction;
    coeffs.push_back(p.coeff(static_cast<int>(q.x), static_cast<int>(q.y)));
  }
  return UPoly(std::move(coeffs));
}

std::vector<int> unity_order(const UPoly& p, int bound) {
  if (p.is_zero()) throw DomainError("unity_order of the zero polynomial");
  if (bound < 1) throw DomainError("unity_order bound must be >= 1");
  std::vector<int> orders;
  UPoly rest = p.monic();
  for (int n = 1; n <= bound && rest.degree() >= 1; ++n) {
    UPoly g = gcd(rest, UPoly::x_n_minus_one(n));
    if (g.degree() < 1) continue;
    orders.push_back(n);
    while (g.degree() >= 1) {
      rest = divmod(rest, g).first;
      g = gcd(rest, g);
    }
  }
  return orders;
}

namespace {

// Largest factor of p depending only on the monomial x^dx y^dy, as a Laurent polynomial.
LaurentPoly2 segment_gcd(const LaurentPoly2& p, LatticePoint d) {
  const std::int64_t norm2 = d.x * d.x + d.y * d.y;
  std::map<std::int64_t, std::vector<std::pair<std::int64_t, Rational>>> lines;
  for (const auto& [e, c] : p.terms()) {
    const LatticePoint q{e[0], e[1]};
    lines[cross(d, q)].emplace_back(q.x * d.x + q.y * d.y, c);
  }
  UPoly g;
  for (const auto& [key, pts] : lines) {
    std::int64_t min_dot = pts.front().first;
    for (const auto& pt : pts) min_dot = std::min(min_dot, pt.first);
    std::vector<Rational> coeffs;
    for (const auto& [dot, c] : pts) {
      const auto k = static_cast<std::size_t>((dot - min_dot) / norm2);
      if (coeffs.size() <= k) coeffs.resize(k + 1);
      coeffs[k] = c;
    }
    UPoly line(std::move(coeffs));
    line = line.shifted_down(line.lowest_degree());
    g = gcd(g, line);
    if (g.degree() == 0) break;
  }
  LaurentPoly2 out(p.vars());
  for (int k = 0; k <= g.degree(); ++k) {
    out += LaurentPoly2::monomial(g.coeff(k), static_cast<int>(k * d.x), static_cast<int>(k * d.y), p.vars());
  }
  return out.normalized();
}

}  // namespace

MinimalityCertificate minimality_check(const LaurentPoly2& p, const SlopeSet& expected_slopes) {
  const NewtonPolygon n = compute_polygon(p);
  if (n.is_degenerate()) throw DomainError("minimality_check needs a nondegenerate polygon");
  if (boundary_slopes(n) != expected_slopes) throw DomainError("expected slopes do not match the polygon");

  MinimalityCertificate cert;
  cert.first_axis_diameter = axis_diameter(n, Axis::first);
  cert.second_axis_diameter = axis_diameter(n, Axis::second);

  // A polygon whose sides realize only two directions is a parallelogram, so
  // every direction occurs on two opposite sides. With more directions each
  // occurs at least once and the projection width is half the boundary total.
  const bool parallelogram = expected_slopes.size() == 2;
  std::int64_t sum_first = 0;
  std::int64_t sum_second = 0;
  for (const auto& s : expected_slopes) {
    const std::int64_t f = iabs(s.d_first());
    const std::int64_t g = s.d_second();
    cert.slope_bounds.push_back({s, f, g});
    sum_first += f;
    sum_second += g;
    std::ostringstream note;
    note << "side of slope " << s.to_string() << ": diam_" << p.vars().first << " >= " << f << ", diam_"
         << p.vars().second << " >= " << g;
    cert.notes.push_back(note.str());
  }
  if (parallelogram) {
    cert.first_axis_lower_bound = sum_first;
    cert.second_axis_lower_bound = sum_second;
  } else {
    cert.first_axis_lower_bound = (sum_first + 1) / 2;
    cert.second_axis_lower_bound = (sum_second + 1) / 2;
  }
  const bool bounds_tight = cert.first_axis_lower_bound == cert.first_axis_diameter &&
                            cert.second_axis_lower_bound == cert.second_axis_diameter;
  {
    std::ostringstream note;
    note << "lower bounds (" << cert.first_axis_lower_bound << ", " << cert.second_axis_lower_bound
         << ") vs diameters (" << cert.first_axis_diameter << ", " << cert.second_axis_diameter << ")";
    cert.notes.push_back(note.str());
  }

  for (const auto& s : expected_slopes) {
    const LatticePoint d{s.d_first(), s.d_second()};
    LaurentPoly2 f = segment_gcd(p, d);
    if (!f.is_constant()) {
      cert.notes.push_back("factor supported on slope " + s.to_string() + " direction divides the polynomial");
      cert.segment_factor = std::move(f);
      break;
    }
  }
  if (!cert.segment_factor) cert.notes.push_back("no factor supported on a single slope direction");

  cert.verdict = bounds_tight && !cert.segment_factor ? Minimality::minimal : Minimality::possibly_factorable;
  return cert;
}

}  // namespace slopesmith::newton
