#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "slopesmith/errors.hpp"
#include "slopesmith/newton_polygon.hpp"
#include "slopesmith/obstruction.hpp"
#include "slopesmith/poly_text.hpp"

using namespace slopesmith;
using namespace slopesmith::newton;

namespace {

std::set<std::pair<int, int>> vertex_set(const NewtonPolygon& n) {
  std::set<std::pair<int, int>> out;
  for (const auto& v : n.vertices()) out.insert({static_cast<int>(v.x), static_cast<int>(v.y)});
  return out;
}

std::vector<std::pair<int, int>> support_points(const LaurentPoly2& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : p.support()) out.push_back({e[0], e[1]});
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> slope_pairs(const SlopeSet& s) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& e : s) out.insert({e.d_first(), e.d_second()});
  return out;
}

}  // namespace

TEST_CASE("hull of the cyclic curve is a lattice diamond") {
  const auto p = obstruction::build_P(Rational(2));
  const auto n = compute_polygon(p);
  const std::set<std::pair<int, int>> expected{{1, 0}, {2, 1}, {1, 2}, {0, 1}};
  CHECK(vertex_set(n) == expected);
  CHECK(vertex_set(n) == oracle::hull_vertices(support_points(p)));
  CHECK(n.twice_area() == 4);
}

TEST_CASE("hull of the sister curve") {
  const auto p = obstruction::build_newP(1, 2, Rational(1));
  const std::set<std::pair<int, int>> expected{{1, 0}, {4, 2}, {3, 4}, {0, 2}};
  CHECK(vertex_set(compute_polygon(p)) == expected);
  CHECK(oracle::hull_vertices(support_points(p)) == expected);
}

TEST_CASE("degenerate polygons") {
  const auto pt = compute_polygon(parse_poly("m^3*l^5", VarNames::ml()));
  CHECK(pt.degeneracy() == Degeneracy::point);
  CHECK(pt.vertices() == std::vector<LatticePoint>{{3, 5}});
  CHECK(axis_diameter(pt, Axis::first) == 0);
  CHECK_THROWS_AS(boundary_slopes(pt), DomainError);
  const auto seg = compute_polygon(parse_poly("m + m^3*b^2", VarNames::mb()));
  CHECK(seg.degeneracy() == Degeneracy::segment);
  CHECK_THROWS_AS(compute_polygon(LaurentPoly2(VarNames::mb())), DomainError);
}

TEST_CASE("boundary slopes") {
  const auto sister = compute_polygon(obstruction::build_newP(1, 2, Rational(1)));
  CHECK(boundary_slopes(sister) == SlopeSet{EdgeSlope(-1, 2), EdgeSlope(3, 2)});
  const auto diamond = compute_polygon(obstruction::build_P(Rational(2)));
  CHECK(boundary_slopes(diamond) == SlopeSet{EdgeSlope(1, 1), EdgeSlope(-1, 1)});
  const auto rect = compute_polygon(parse_poly("1 + m^2 + b^3 + m^2*b^3", VarNames::mb()));
  CHECK(boundary_slopes(rect) == SlopeSet{EdgeSlope(0, 1), EdgeSlope::infinity()});
  CHECK(EdgeSlope(2, -4) == EdgeSlope(-1, 2));
  CHECK(EdgeSlope(-1, 2).to_string() == "-1/2");
  CHECK(EdgeSlope::infinity().to_string() == "inf");
}

TEST_CASE("slopes agree with the brute-force hull on random supports") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 60; ++k) {
    const auto p = oracle::random_laurent(rng, VarNames::mb(), 6, -3, 3, 5);
    const auto n = compute_polygon(p);
    if (n.is_degenerate()) continue;
    CHECK(slope_pairs(boundary_slopes(n)) == oracle::hull_slopes(support_points(p)));
    CHECK(vertex_set(n) == oracle::hull_vertices(support_points(p)));
  }
}

TEST_CASE("axis diameters") {
  const auto a = compute_polygon(obstruction::build_newP(1, 2, Rational(1)));
  CHECK(axis_diameter(a, Axis::first) == 4);
  CHECK(axis_diameter(a, Axis::second) == 4);
  const auto b = compute_polygon(obstruction::build_newP(2, 3, Rational(1)));
  CHECK(axis_diameter(b, Axis::first) == 6);
  CHECK(axis_diameter(b, Axis::second) == 6);
}

TEST_CASE("edge polynomials") {
  const auto p = obstruction::build_P(Rational(2));
  const Edge e{{1, 0}, {1, 1}, 1};
  CHECK(edge_polynomial(p, e) == UPoly({Rational(2), Rational(1)}));
  const Edge off{{0, 0}, {1, 0}, 1};
  CHECK_THROWS_AS(edge_polynomial(p, off), DomainError);
}

TEST_CASE("edge polynomials are multiplicative") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int k = 0; k < 80; ++k) {
    const auto f = oracle::random_laurent(rng, VarNames::mb(), 4, 0, 2, 4);
    const auto g = oracle::random_laurent(rng, VarNames::mb(), 4, 0, 2, 4);
    const auto nf = compute_polygon(f), ng = compute_polygon(g), nfg = compute_polygon(f * g);
    if (nf.is_degenerate() || ng.is_degenerate() || nfg.is_degenerate()) continue;
    for (const auto& e : nfg.edges()) {
      const Edge* ef = nullptr;
      const Edge* eg = nullptr;
      for (const auto& x : nf.edges()) {
        if (x.direction == e.direction) ef = &x;
      }
      for (const auto& x : ng.edges()) {
        if (x.direction == e.direction) eg = &x;
      }
      if (!ef || !eg) continue;
      CHECK(edge_polynomial(f * g, e) == edge_polynomial(f, *ef) * edge_polynomial(g, *eg));
      ++checked;
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("roots of unity") {
  CHECK(unity_order(UPoly({Rational(1), Rational(1)})) == std::vector<int>{2});
  CHECK(unity_order(UPoly({Rational(1), Rational(1), Rational(1)})) == std::vector<int>{3});
  CHECK(unity_order(UPoly({Rational(2), Rational(1)})).empty());
  // Orders found agree with gcd against x^n - 1.
  const UPoly p = UPoly({Rational(1), Rational(0), Rational(1)}) * UPoly({Rational(-3), Rational(1)});
  const auto orders = unity_order(p);
  CHECK(orders == std::vector<int>{4});
  for (int n = 1; n <= 12; ++n) {
    const bool shares = gcd(p, UPoly::x_n_minus_one(n)).degree() > 0;
    CHECK(shares == (n % 4 == 0));
  }
}

TEST_CASE("minimality") {
  const auto sister = obstruction::build_newP(1, 2, Rational(1));
  CHECK(minimality_check(sister, {EdgeSlope(-1, 2), EdgeSlope(3, 2)}).verdict == Minimality::minimal);
  const auto p235 = obstruction::build_newP(2, 3, Rational(5));
  CHECK(minimality_check(p235, boundary_slopes(compute_polygon(p235))).verdict == Minimality::minimal);
  const auto prod = parse_poly("(m - 1)*(l - 1)", VarNames::ml());
  const auto cert = minimality_check(prod, {EdgeSlope(0, 1), EdgeSlope::infinity()});
  CHECK(cert.verdict == Minimality::possibly_factorable);
  CHECK(cert.segment_factor.has_value());
  CHECK_THROWS_AS(minimality_check(sister, {EdgeSlope(0, 1)}), DomainError);
}
