#include "doctest.h"

#include <algorithm>
#include <tuple>

#include "slopesmith/cs_norm.hpp"
#include "slopesmith/errors.hpp"
#include "slopesmith/obstruction.hpp"
#include "slopesmith/poly_text.hpp"

using namespace slopesmith;
using namespace slopesmith::norm;
using newton::EdgeSlope;

namespace {

// Functionals up to an overall sign, as a sorted list.
std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> canon(const Seminorm& s) {
  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> out;
  for (auto f : s.functionals()) {
    if (f.q < 0 || (f.q == 0 && f.p < 0)) {
      f.q = -f.q;
      f.p = -f.p;
    }
    out.emplace_back(f.q, f.p, f.weight);
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormBall sister_ball() {
  const auto n = newton::compute_polygon(obstruction::build_newP(1, 2, Rational(1)));
  return ball_polygon(seminorm_from_polygon(n));
}

}  // namespace

TEST_CASE("functionals from polygons") {
  const auto sister = seminorm_from_polygon(newton::compute_polygon(obstruction::build_newP(1, 2, Rational(1))));
  CHECK(canon(sister) == decltype(canon(sister)){{2, -3, 1}, {2, 1, 1}});
  const auto diamond = seminorm_from_polygon(newton::compute_polygon(obstruction::build_P(Rational(2))));
  CHECK(canon(diamond) == decltype(canon(diamond)){{1, -1, 1}, {1, 1, 1}});
  const auto square = seminorm_from_polygon(newton::compute_polygon(parse_poly("1 + m + b + m*b")));
  CHECK(canon(square) == decltype(canon(square)){{0, 1, 1}, {1, 0, 1}});
}

TEST_CASE("evaluation on classes") {
  const auto s = seminorm_from_polygon(newton::compute_polygon(obstruction::build_newP(1, 2, Rational(1))));
  CHECK(eval_norm(s, {1, 0}) == Rational(4));
  CHECK(eval_norm(s, {0, 1}) == Rational(4));
  CHECK(eval_norm(s, {1, 2}) == Rational(8));
  CHECK(s.is_norm());
  CHECK_FALSE(Seminorm({{1, 0, 1}}).is_norm());
}

TEST_CASE("ball of the sister norm") {
  const auto ball = sister_ball();
  CHECK(ball.radius == Rational(4));
  const std::vector<RationalPoint> expected{
      {Rational(3, 2), Rational(1)}, {Rational(-1, 2), Rational(1)}, {Rational(-3, 2), Rational(-1)},
      {Rational(1, 2), Rational(-1)}};
  CHECK(ball.vertices == expected);
  CHECK(shoelace_area(ball.vertices) == Rational(4));
}

TEST_CASE("ball of the axis norm is a diamond") {
  const auto ball = ball_polygon(Seminorm({{1, 0, 1}, {0, 1, 1}}));
  CHECK(ball.radius == Rational(1));
  CHECK(ball.vertices.size() == 4);
  CHECK(shoelace_area(ball.vertices) == Rational(2));
  CHECK_THROWS_AS(minimal_lattice_norm(Seminorm({{1, 2, 1}, {2, 4, 3}})), DomainError);
}

TEST_CASE("slope set diameter") {
  CHECK(slope_set_diameter({EdgeSlope(-1, 2), EdgeSlope(3, 2)}) == ExtendedRational::finite(Rational(2)));
  CHECK(slope_set_diameter({EdgeSlope(4, 1), EdgeSlope(-4, 1)}) == ExtendedRational::finite(Rational(8)));
  CHECK(slope_set_diameter({EdgeSlope(0, 1), EdgeSlope::infinity()}).infinite);
  CHECK_THROWS_AS(slope_set_diameter({}), DomainError);
}

TEST_CASE("ideal point slopes") {
  CHECK(ideal_point_slope(1, 1) == Rational(1));
  CHECK(ideal_point_slope(3 * 1, 3 * 2) == Rational(1, 2));
  CHECK(ideal_point_slope(0, 3) == Rational(0));
  CHECK_THROWS_AS(ideal_point_slope(2, 0), DomainError);
}

TEST_CASE("cs bound") {
  CHECK(cs_bound(Rational(1, 2)) == Rational(2));
  CHECK(cs_bound(Rational(1, 4)) == Rational(8, 3));
  CHECK(cs_bound(Rational(2, 5)) > Rational(2));
  CHECK(cs_bound(Rational(3, 5)) > Rational(2));
  CHECK_THROWS_AS(cs_bound(Rational(0)), DomainError);
  CHECK_THROWS_AS(cs_bound(Rational(1)), DomainError);
}

TEST_CASE("parallelogram check") {
  const auto report = fundamental_polygon_check(sister_ball(), {1, 0});
  CHECK(report.passed);
  CHECK(report.area_is_four);
  CHECK(report.mu_at_edge_midpoint);
  REQUIRE(report.pq.has_value());
  CHECK(*report.pq == std::pair<std::int64_t, std::int64_t>{1, 2});

  // Rhombus of area 4 with mu at a vertex.
  const NormBall sq{{{Rational(1), Rational(0)}, {Rational(0), Rational(2)}, {Rational(-1), Rational(0)},
                     {Rational(0), Rational(-2)}},
                    Rational(1)};
  CHECK(shoelace_area(sq.vertices) == Rational(4));
  const auto bad = fundamental_polygon_check(sq, {1, 0});
  CHECK_FALSE(bad.mu_at_edge_midpoint);
  CHECK_FALSE(bad.passed);

  // Slopes {1, -1}: vertices on the lines b = a and b = -a.
  NormBall diag{{{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}, {Rational(-1), Rational(-1)},
                 {Rational(1), Rational(-1)}},
                Rational(1)};
  const auto r = fundamental_polygon_check(diag, {1, 0});
  REQUIRE(r.pq.has_value());
  CHECK(*r.pq == std::pair<std::int64_t, std::int64_t>{1, 1});

  NormBall tri{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}, {Rational(-1), Rational(-1)}}, Rational(1)};
  CHECK_THROWS_AS(fundamental_polygon_check(tri, {1, 0}), DomainError);
}
