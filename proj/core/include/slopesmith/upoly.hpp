#pragma once

#include <string>
#include <utility>
#include <vector>

#include "slopesmith/rational.hpp"

namespace slopesmith {

// Dense univariate polynomial over Q. coeffs()[k] is the coefficient of x^k;
// the leading coefficient is never zero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x_power(int k, const Rational& c = Rational(1));
  // x^n - 1
  static UPoly x_n_minus_one(int n);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }
  bool is_constant() const { return degree() <= 0; }

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  // Largest power of x dividing the polynomial; 0 for the zero polynomial.
  int lowest_degree() const;
  UPoly shifted_down(int k) const;

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Euclidean division; throws DomainError when the divisor is zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd (zero when both inputs are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
// Rational roots, each listed once, in increasing order.
std::vector<Rational> rational_roots(const UPoly& p);
// Exact square root in Q[x] when p = s^2, s with positive leading coefficient.
bool poly_sqrt(const UPoly& p, UPoly& root);
// Decides irreducibility over Q for degree <= 3; returns false for reducible,
// true for irreducible. Throws DomainError for degree > 3 or constants.
bool small_degree_irreducible(const UPoly& p);

}  // namespace slopesmith
