#include "slopesmith/cs_norm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "slopesmith/errors.hpp"

namespace slopesmith::norm {

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

int half_plane(const RationalPoint& v) {
  return (v.b.sign() < 0 || (v.b.is_zero() && v.a.sign() < 0)) ? 1 : 0;
}

bool angle_less(const RationalPoint& u, const RationalPoint& v) {
  const int hu = half_plane(u);
  const int hv = half_plane(v);
  if (hu != hv) return hu < hv;
  return (u.a * v.b - u.b * v.a).sign() > 0;
}

std::vector<RationalPoint> ball_vertices(const Seminorm& s, const Rational& r) {
  std::vector<RationalPoint> pts;
  for (const auto& f : s.functionals()) {
    const Rational ka(-f.p);
    const Rational kb(f.q);
    const Rational t = r / s.eval(ka, kb);
    pts.push_back({ka * t, kb * t});
    pts.push_back({-ka * t, -kb * t});
  }
  std::sort(pts.begin(), pts.end(), angle_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

ExtendedRational PeripheralClass::slope() const {
  if (a == 0 && b == 0) throw DomainError("slope of the zero class");
  if (b == 0) return ExtendedRational::infinity();
  return ExtendedRational::finite(Rational(a, b));
}

Seminorm::Seminorm(std::vector<Functional> functionals) : functionals_(std::move(functionals)) {
  if (functionals_.empty()) throw DomainError("seminorm needs at least one functional");
  for (const auto& f : functionals_) {
    if (f.weight < 1) throw DomainError("functional weights must be positive");
    if (std::gcd(iabs(f.q), iabs(f.p)) != 1) throw DomainError("functional coefficients must be primitive");
  }
}

Rational Seminorm::eval(const Rational& a, const Rational& b) const {
  Rational acc(0);
  for (const auto& f : functionals_) acc += Rational(f.weight) * abs(Rational(f.q) * a + Rational(f.p) * b);
  return acc;
}

bool Seminorm::is_norm() const {
  for (std::size_t i = 0; i < functionals_.size(); ++i) {
    for (std::size_t j = i + 1; j < functionals_.size(); ++j) {
      if (functionals_[i].q * functionals_[j].p - functionals_[i].p * functionals_[j].q != 0) return true;
    }
  }
  return false;
}

Seminorm seminorm_from_polygon(const newton::NewtonPolygon& n) {
  if (n.is_degenerate()) throw DomainError("seminorm of a degenerate polygon");
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> classes;
  for (const auto& e : n.edges()) {
    std::int64_t q = e.direction.y;
    std::int64_t p = -e.direction.x;
    if (q < 0 || (q == 0 && p < 0)) {
      q = -q;
      p = -p;
    }
    auto& w = classes[{q, p}];
    w = std::max(w, e.lattice_length);
  }
  std::vector<Functional> fs;
  for (const auto& [qp, w] : classes) fs.push_back({qp.first, qp.second, w});
  return Seminorm(std::move(fs));
}

Rational eval_norm(const Seminorm& s, const PeripheralClass& c) {
  return s.eval(Rational(static_cast<long>(c.a)), Rational(static_cast<long>(c.b)));
}

Rational minimal_lattice_norm(const Seminorm& s) {
  if (!s.is_norm()) throw DomainError("degenerate seminorm: functionals are all parallel");
  Rational best = std::min(eval_norm(s, {1, 0}), eval_norm(s, {0, 1}));
  // Every lattice class of norm <= best lies in the ball of radius best.
  Rational max_a(0), max_b(0);
  for (const auto& v : ball_vertices(s, best)) {
    max_a = std::max(max_a, abs(v.a));
    max_b = std::max(max_b, abs(v.b));
  }
  const long ra = floor(max_a).get_si();
  const long rb = floor(max_b).get_si();
  for (long a = -ra; a <= ra; ++a) {
    for (long b = -rb; b <= rb; ++b) {
      if (a == 0 && b == 0) continue;
      best = std::min(best, eval_norm(s, {a, b}));
    }
  }
  return best;
}

NormBall ball_polygon(const Seminorm& s) {
  const Rational r = minimal_lattice_norm(s);
  return NormBall{ball_vertices(s, r), r};
}

Rational shoelace_area(const std::vector<RationalPoint>& polygon) {
  Rational acc(0);
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    const auto& u = polygon[i];
    const auto& v = polygon[(i + 1) % polygon.size()];
    acc += u.a * v.b - u.b * v.a;
  }
  return abs(acc) / Rational(2);
}

ExtendedRational slope_set_diameter(const newton::SlopeSet& slopes) {
  if (slopes.empty()) throw DomainError("diameter of an empty slope set");
  if (slopes.rbegin()->is_infinite()) return ExtendedRational::infinity();
  return ExtendedRational::finite(slopes.rbegin()->value().value - slopes.begin()->value().value);
}

Rational ideal_point_slope(std::int64_t pole_beta, std::int64_t pole_mu) {
  if (pole_mu <= 0) throw DomainError("slope undefined: f_mu has no pole at this ideal point");
  if (pole_beta < 0) throw DomainError("pole orders are nonnegative");
  return Rational(pole_beta, pole_mu);
}

Rational cs_bound(const Rational& t) {
  if (t <= Rational(0) || t >= Rational(1)) throw DomainError("cs_bound needs 0 < t < 1");
  return Rational(1) / (Rational(2) * t * (Rational(1) - t));
}

FundamentalPolygonReport fundamental_polygon_check(const NormBall& ball, const PeripheralClass& mu) {
  const auto& v = ball.vertices;
  if (v.size() != 4 || !(v[0].a + v[2].a == v[1].a + v[3].a && v[0].b + v[2].b == v[1].b + v[3].b)) {
    throw DomainError("norm ball is not a parallelogram");
  }
  FundamentalPolygonReport rep;
  rep.area = shoelace_area(v);
  rep.area_is_four = rep.area == Rational(4);
  rep.notes.push_back("area = " + rep.area.to_string());

  const RationalPoint mu_point{Rational(static_cast<long>(mu.a)), Rational(static_cast<long>(mu.b))};
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    if (RationalPoint{(p.a + q.a) / Rational(2), (p.b + q.b) / Rational(2)} == mu_point) {
      rep.mu_at_edge_midpoint = true;
    }
  }
  rep.notes.push_back(rep.mu_at_edge_midpoint ? "mu is the midpoint of a side" : "mu is not the midpoint of a side");

  std::vector<ExtendedRational> slopes;
  bool has_infinity = false;
  for (const auto& p : v) {
    if (p.b.is_zero()) {
      has_infinity = true;
      continue;
    }
    const Rational s = p.a / p.b;
    if (std::find(slopes.begin(), slopes.end(), ExtendedRational::finite(s)) == slopes.end()) {
      slopes.push_back(ExtendedRational::finite(s));
    }
  }
  std::sort(slopes.begin(), slopes.end(), [](const auto& x, const auto& y) { return x.value < y.value; });
  if (has_infinity) slopes.push_back(ExtendedRational::infinity());
  rep.vertex_slopes = slopes;

  std::optional<std::pair<std::int64_t, std::int64_t>> pq;
  if (!has_infinity && slopes.size() == 2) {
    const Rational lo = slopes[0].value;
    const Rational hi = slopes[1].value;
    if (hi - lo == Rational(2) && lo <= Rational(0) && lo >= Rational(-1)) {
      const Rational ratio = -lo;
      pq = std::make_pair(ratio.numerator().get_si(), ratio.denominator().get_si());
    }
  }
  rep.slopes_have_form = pq.has_value();
  rep.notes.push_back(rep.slopes_have_form ? "vertex slopes are -p/q and 2 - p/q"
                                           : "vertex slopes are not of the form -p/q, 2 - p/q");
  rep.passed = rep.area_is_four && rep.mu_at_edge_midpoint && rep.slopes_have_form;
  if (rep.passed) rep.pq = pq;
  return rep;
}

}  // namespace slopesmith::norm
