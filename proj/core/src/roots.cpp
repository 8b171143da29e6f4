#include "slopesmith/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slopesmith/errors.hpp"

namespace slopesmith {

namespace {

using cd = std::complex<double>;

// Value and derivative by Horner.
std::pair<cd, cd> horner(const std::vector<cd>& c, cd z) {
  cd p = c.back();
  cd dp = 0.0;
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
  }
  return {p, dp};
}

}  // namespace

std::vector<cd> polynomial_roots(const std::vector<cd>& coeffs, double tol, int max_iter) {
  std::vector<cd> c = coeffs;
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  if (c.size() < 2) throw DomainError("roots of a constant polynomial");
  std::vector<cd> roots;
  std::size_t low = 0;
  while (c[low] == 0.0) ++low;
  roots.assign(low, cd(0.0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(low));
  const std::size_t n = c.size() - 1;
  if (n == 0) return roots;
  if (n == 1) {
    roots.push_back(-c[0] / c[1]);
    return roots;
  }

  // Fujiwara-style radius for the starting circle.
  double radius = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    radius = std::max(radius, std::pow(std::abs(c[k] / c[n]), 1.0 / static_cast<double>(n - k)));
  }
  radius = std::max(radius, 1e-3);
  std::vector<cd> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  bool converged = false;
  double worst = 0.0;
  for (int it = 0; it < max_iter && !converged; ++it) {
    converged = true;
    worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto [p, dp] = horner(c, z[k]);
      if (p == 0.0) continue;
      const cd ratio = p / dp;
      cd sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      }
      const cd step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[k] -= step;
      const double rel = std::abs(step) / (1.0 + std::abs(z[k]));
      worst = std::max(worst, rel);
      if (rel > tol) converged = false;
    }
  }
  if (!converged && worst > 1e-8) throw NumericalError("root finder did not converge", worst);

  for (auto& r : z) {
    for (int it = 0; it < 2; ++it) {
      const auto [p, dp] = horner(c, r);
      if (dp == 0.0) break;
      const cd next = r - p / dp;
      if (std::abs(horner(c, next).first) < std::abs(p)) r = next;
    }
  }
  roots.insert(roots.end(), z.begin(), z.end());
  return roots;
}

}  // namespace slopesmith
