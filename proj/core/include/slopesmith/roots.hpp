#pragma once

#include <complex>
#include <vector>

namespace slopesmith {

// All complex roots of sum coeffs[k] x^k (with multiplicity) by Aberth-Ehrlich
// simultaneous iteration followed by Newton polishing. Throws DomainError for
// constant input and NumericalError when the iteration stalls.
std::vector<std::complex<double>> polynomial_roots(const std::vector<std::complex<double>>& coeffs,
                                                   double tol = 1e-14, int max_iter = 500);

}  // namespace slopesmith
