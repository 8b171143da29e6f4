#include "slopesmith/curve_path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "slopesmith/errors.hpp"
#include "slopesmith/roots.hpp"

namespace slopesmith::hyp {

namespace {

struct Tracker {
  const LaurentPoly2& poly;
  const TrackOptions& opt;
  CurvePath& path;

  // Root at `a` continuing from `b_prev`, or nothing when the choice is ambiguous.
  bool next_root(Complex a, Complex b_prev, Complex& out, double& gap) const {
    const auto roots = polynomial_roots(specialize_complex(poly, 0, a));
    gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) gap = std::min(gap, std::abs(roots[i] - roots[j]));
    }
    std::size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      const double d = std::abs(roots[i] - b_prev);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    if (roots.empty() || !(best_dist < 0.5 * gap)) return false;
    out = roots[best];
    return true;
  }

  void advance(Complex a0, Complex b0, Complex a1, int depth) {
    Complex b1;
    double gap = 0;
    if (!next_root(a1, b0, b1, gap)) {
      if (depth >= opt.max_halvings) {
        throw NumericalError("discriminant collision near a = (" + std::to_string(a1.real()) + ", " +
                                 std::to_string(a1.imag()) + ")",
                             gap);
      }
      const Complex mid = 0.5 * (a0 + a1);
      advance(a0, b0, mid, depth + 1);
      const Complex bm = path.samples.back().b;
      advance(mid, bm, a1, depth + 1);
      return;
    }
    path.max_halvings_used = std::max(path.max_halvings_used, depth);
    const double res = relative_residual(poly, a1, b1);
    if (res > opt.residual_tol) throw NumericalError("root finder residual above tolerance", res);
    path.samples.push_back({a1, b1, res});
  }
};

}  // namespace

double relative_residual(const LaurentPoly2& poly, Complex a, Complex b) {
  double scale = 0.0;
  const double la = std::log(std::abs(a));
  const double lb = std::log(std::abs(b));
  for (const auto& [e, c] : poly.terms()) scale += std::abs(c.to_double()) * std::exp(e[0] * la + e[1] * lb);
  if (scale == 0.0) return 0.0;
  return std::abs(evaluate(poly, a, b)) / scale;
}

CurvePath track_curve(const LaurentPoly2& poly, std::pair<Complex, Complex> start, const std::vector<Complex>& waypoints,
                      const TrackOptions& options) {
  if (!(options.step > 0)) throw DomainError("step must be positive");
  if (waypoints.empty()) throw DomainError("empty path");
  if (start.first == 0.0 || start.second == 0.0) throw DomainError("start must lie in the torus");
  if (std::abs(waypoints.front() - start.first) > 1e-12 * (1.0 + std::abs(start.first))) {
    throw DomainError("path must begin at the start point");
  }
  const double r0 = relative_residual(poly, start.first, start.second);
  if (r0 > options.residual_tol) throw DomainError("start point is not on the curve");

  CurvePath path{poly, {{start.first, start.second, r0}}, options.step, 0};
  Tracker tr{poly, options, path};
  for (std::size_t k = 1; k < waypoints.size(); ++k) {
    const Complex a0 = waypoints[k - 1];
    const Complex a1 = waypoints[k];
    const int n = std::max(1, static_cast<int>(std::ceil(std::abs(a1 - a0) / options.step)));
    for (int j = 1; j <= n; ++j) {
      const Complex from = a0 + (a1 - a0) * (static_cast<double>(j - 1) / n);
      const Complex to = j == n ? a1 : a0 + (a1 - a0) * (static_cast<double>(j) / n);
      if (to == 0.0) throw DomainError("path passes through a = 0");
      tr.advance(from, path.samples.back().b, to, 0);
    }
  }
  return path;
}

std::vector<Complex> circle_waypoints(Complex center, double radius, int n, double phase) {
  if (n < 3) throw DomainError("a circle needs at least 3 waypoints");
  std::vector<Complex> out;
  for (int k = 0; k < n; ++k) {
    out.push_back(center + std::polar(radius, phase + 2.0 * std::numbers::pi * k / n));
  }
  out.push_back(out.front());
  return out;
}

double integrate_eta(const CurvePath& path) {
  const auto& s = path.samples;
  double acc = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    const double da = std::arg(s[k].a / s[k - 1].a);
    const double db = std::arg(s[k].b / s[k - 1].b);
    if (std::abs(da) > std::numbers::pi / 2 || std::abs(db) > std::numbers::pi / 2) {
      throw NumericalError("argument jump above pi/2: refine the path", std::max(std::abs(da), std::abs(db)));
    }
    const double la = 0.5 * (std::log(std::abs(s[k].a)) + std::log(std::abs(s[k - 1].a)));
    const double lb = 0.5 * (std::log(std::abs(s[k].b)) + std::log(std::abs(s[k - 1].b)));
    acc += la * db - lb * da;
  }
  return acc;
}

double volume_change(const CurvePath& path) { return -0.5 * integrate_eta(path); }

CurvePath reversed(const CurvePath& path) {
  CurvePath r = path;
  std::reverse(r.samples.begin(), r.samples.end());
  return r;
}

std::string path_text(const CurvePath& path) {
  std::ostringstream os;
  os.precision(17);
  for (const auto& s : path.samples) {
    os << s.a.real() << ' ' << s.a.imag() << ' ' << s.b.real() << ' ' << s.b.imag() << ' ' << s.residual << '\n';
  }
  return os.str();
}

}  // namespace slopesmith::hyp
