#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "slopesmith/laurent.hpp"

namespace slopesmith::hyp {

using Complex = std::complex<double>;

struct CurveSample {
  Complex a;  // first coordinate
  Complex b;  // second coordinate
  double residual = 0;  // |A(a, b)| relative to the sum of term magnitudes
};

struct CurvePath {
  LaurentPoly2 poly;
  std::vector<CurveSample> samples;
  double step = 0;
  int max_halvings_used = 0;
};

struct TrackOptions {
  double step = 1e-3;
  double residual_tol = 1e-9;
  int max_halvings = 20;
};

// |A(a, b)| divided by the sum of absolute term values.
double relative_residual(const LaurentPoly2& poly, Complex a, Complex b);

// Follows the branch through `start` while the first coordinate runs along the
// polyline `waypoints` (which must begin at start.first). Throws DomainError
// when the start is off the curve and NumericalError on a discriminant
// collision or a root-finder failure.
CurvePath track_curve(const LaurentPoly2& poly, std::pair<Complex, Complex> start,
                      const std::vector<Complex>& waypoints, const TrackOptions& options = {});

// Closed polygonal approximation of the circle |a - center| = radius starting
// at center + radius * e^(i phase); the last waypoint repeats the first.
std::vector<Complex> circle_waypoints(Complex center, double radius, int n, double phase = 0.0);

// Trapezoidal integral of log|a| d arg b - log|b| d arg a along the samples.
// Throws NumericalError when consecutive arguments jump by more than pi/2.
double integrate_eta(const CurvePath& path);
// Volume change -1/2 * integral of eta.
double volume_change(const CurvePath& path);

CurvePath reversed(const CurvePath& path);

// One line per sample: re(a) im(a) re(b) im(b) residual.
std::string path_text(const CurvePath& path);

}  // namespace slopesmith::hyp
