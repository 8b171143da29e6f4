#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "oracles.hpp"
#include "slopesmith/curve_path.hpp"
#include "slopesmith/errors.hpp"
#include "slopesmith/poly_text.hpp"
#include "slopesmith/roots.hpp"

using namespace slopesmith;
using namespace slopesmith::hyp;

namespace {

LaurentPoly2 ml(const char* t) { return parse_poly(t, VarNames::ml()); }

const char* kFig8 = "m^4 + l*(-1 + m^2 + 2*m^4 + m^6 - m^8) + l^2*m^4";

}  // namespace

TEST_CASE("root finder") {
  // (x - 1)(x + 2)(x - i)
  const std::vector<Complex> c{Complex(0, 2), Complex(-2, -1), Complex(1, -1), Complex(1, 0)};
  auto roots = polynomial_roots(c);
  REQUIRE(roots.size() == 3);
  for (const Complex z : {Complex(1, 0), Complex(-2, 0), Complex(0, 1)}) {
    double best = 1e9;
    for (const auto r : roots) best = std::min(best, std::abs(r - z));
    CHECK(best < 1e-12);
  }
}

TEST_CASE("linear curve tracks the identity") {
  const auto a = ml("m - l");
  const auto path = track_curve(a, {1.0, 1.0}, {Complex(1, 0), Complex(2, 0), Complex(1, 1)});
  for (const auto& s : path.samples) CHECK(std::abs(s.a - s.b) < 1e-12);
  CHECK(std::abs(path.samples.back().a - Complex(1, 1)) < 1e-15);
}

TEST_CASE("eta matches the Bloch-Wigner dilogarithm on a + b = 1") {
  const auto a = ml("m + l - 1");
  const Complex a0(0.5, 0.5), a1(2.0, 1.0);
  const auto path = track_curve(a, {a0, 1.0 - a0}, {a0, Complex(1.2, 1.5), a1}, {1e-4, 1e-9, 20});
  const double expected = oracle::bloch_wigner(a1) - oracle::bloch_wigner(a0);
  CHECK(std::abs(integrate_eta(path) - expected) < 1e-6);
  CHECK(std::abs(volume_change(path) + 0.5 * expected) < 1e-6);
}

TEST_CASE("constant and reversed paths") {
  const auto a = ml(kFig8);
  const auto start = Complex(1.5, 0.5);
  auto roots = polynomial_roots(specialize_complex(a, 0, start));
  const auto path = track_curve(a, {start, roots[0]}, {start, start});
  CHECK(std::abs(integrate_eta(path)) < 1e-14);
  const auto open = track_curve(a, {start, roots[0]}, {start, Complex(1.7, 0.6)}, {1e-3, 1e-9, 20});
  CHECK(std::abs(integrate_eta(reversed(open)) + integrate_eta(open)) < 1e-14);
}

TEST_CASE("monodromy of the square root") {
  const auto a = ml("l^2 - m");
  const auto path = track_curve(a, {1.0, 1.0}, circle_waypoints(0.0, 1.0, 64), {1e-3, 1e-9, 20});
  CHECK(std::abs(path.samples.back().a - Complex(1, 0)) < 1e-12);
  CHECK(std::abs(path.samples.back().b - Complex(-1, 0)) < 1e-9);
}

TEST_CASE("path through a discriminant point") {
  const auto a = ml("l^2 - m + 2");
  try {
    track_curve(a, {3.0, 1.0}, {Complex(3, 0), Complex(1, 0)}, {1e-2, 1e-9, 20});
    FAIL("expected a collision");
  } catch (const NumericalError& e) {
    CHECK(std::string(e.what()).find("discriminant collision") != std::string::npos);
  }
}

TEST_CASE("invalid inputs") {
  const auto a = ml("m - l");
  CHECK_THROWS_AS(track_curve(a, {1.0, 2.0}, {Complex(1, 0), Complex(2, 0)}), DomainError);
  CHECK_THROWS_AS(track_curve(a, {1.0, 1.0}, {Complex(2, 0), Complex(3, 0)}), DomainError);
  CHECK_THROWS_AS(track_curve(a, {1.0, 1.0}, {}), DomainError);
  CHECK_THROWS_AS(track_curve(a, {1.0, 1.0}, {Complex(1, 0), Complex(-1, 0)}), DomainError);
  CHECK_THROWS_AS(track_curve(a, {1.0, 1.0}, {Complex(1, 0)}, {0.0, 1e-9, 20}), DomainError);
  CHECK_THROWS_AS(circle_waypoints(0.0, 1.0, 2), DomainError);
}

TEST_CASE("small loop on the figure-eight curve") {
  const auto a = ml(kFig8);
  const auto way = circle_waypoints(Complex(1.5, 0.5), 0.1, 128);
  auto roots = polynomial_roots(specialize_complex(a, 0, way.front()));
  for (const auto b0 : roots) {
    const auto path = track_curve(a, {way.front(), b0}, way, {1e-3, 1e-9, 20});
    CHECK(std::abs(path.samples.back().b - b0) < 1e-9);
    CHECK(std::abs(integrate_eta(path)) < 1e-6);
  }
}

TEST_CASE("path text") {
  const auto path = track_curve(ml("m - l"), {1.0, 1.0}, {Complex(1, 0), Complex(2, 0)}, {0.25, 1e-9, 20});
  const auto text = path_text(path);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}
