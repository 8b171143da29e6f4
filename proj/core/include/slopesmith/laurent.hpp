#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopesmith/errors.hpp"
#include "slopesmith/rational.hpp"
#include "slopesmith/upoly.hpp"

namespace slopesmith {

// Exponent pair (first-variable exponent, second-variable exponent).
using Exponent = std::array<int, 2>;

struct VarNames {
  std::string first = "m";
  std::string second = "b";

  static VarNames mb() { return {"m", "b"}; }
  static VarNames ml() { return {"m", "l"}; }
  const std::string& operator[](int i) const { return i == 0 ? first : second; }
  friend bool operator==(const VarNames&, const VarNames&) = default;
};

enum class MonomialAction {
  negate_first,
  negate_second,
  negate_both,
  invert_first,
  invert_second,
  invert_both,
  scale_first,  // first variable replaced by c * first
};

// Bivariate Laurent polynomial with rational coefficients. Immutable in
// spirit: every operation returns a new value. Zero coefficients are never
// stored, so equality of values is equality of term maps.
class LaurentPoly2 {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly2() = default;
  explicit LaurentPoly2(VarNames vars) : vars_(std::move(vars)) {}
  LaurentPoly2(TermMap terms, VarNames vars);

  static LaurentPoly2 constant(const Rational& c, VarNames vars = {});
  static LaurentPoly2 monomial(const Rational& c, int i, int j, VarNames vars = {});
  static LaurentPoly2 first_var(VarNames vars = {}) { return monomial(Rational(1), 1, 0, std::move(vars)); }
  static LaurentPoly2 second_var(VarNames vars = {}) { return monomial(Rational(1), 0, 1, std::move(vars)); }

  const TermMap& terms() const { return terms_; }
  const VarNames& vars() const { return vars_; }
  LaurentPoly2 with_vars(VarNames vars) const { return LaurentPoly2(terms_, std::move(vars)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  Rational coeff(int i, int j) const;
  std::vector<Exponent> support() const;

  // Smallest and largest exponent of variable `var` (0 or 1). Zero polynomial -> {0,0}.
  std::pair<int, int> exponent_range(int var) const;
  // Width of the exponent range of `var`.
  int degree_in(int var) const;

  // Shift by the minimal monomial so both minimal exponents are 0.
  LaurentPoly2 normalized() const;
  bool is_normalized() const;
  Exponent min_exponents() const;

  LaurentPoly2 operator-() const;
  LaurentPoly2& operator+=(const LaurentPoly2& o);
  LaurentPoly2& operator-=(const LaurentPoly2& o);
  LaurentPoly2& operator*=(const LaurentPoly2& o);
  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const LaurentPoly2& b) { return a *= b; }
  friend LaurentPoly2 operator*(LaurentPoly2 a, const Rational& c) { return a.scaled(c); }
  friend LaurentPoly2 operator*(const Rational& c, LaurentPoly2 a) { return a.scaled(c); }

  LaurentPoly2 scaled(const Rational& c) const;
  LaurentPoly2 shifted(int di, int dj) const;
  // Negative exponents allowed only when the polynomial is a single monomial.
  LaurentPoly2 pow(int exponent) const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) {
    return a.terms_ == b.terms_ && a.vars_ == b.vars_;
  }

 private:
  void check_vars(const LaurentPoly2& o) const;
  TermMap terms_;
  VarNames vars_;
};

LaurentPoly2 monomial_substitute(const LaurentPoly2& p, MonomialAction action,
                                 const Rational& scale = Rational(1));

// Exact evaluation. Throws DomainError when a zero coordinate meets a negative exponent.
Rational evaluate(const LaurentPoly2& p, const Rational& x, const Rational& y);
std::complex<double> evaluate(const LaurentPoly2& p, std::complex<double> x, std::complex<double> y);

// Substitute `value` for variable `var` (0 or 1); the result is a polynomial in
// the other variable, shifted so that it has no negative powers.
UPoly specialize(const LaurentPoly2& p, int var, const Rational& value);
// Complex-valued specialization used by root tracking; coefficient k is that of y^(k + min exponent).
std::vector<std::complex<double>> specialize_complex(const LaurentPoly2& p, int var, std::complex<double> value);

// Coefficients of p viewed as a polynomial in variable `var` over Q[other].
// p must have nonnegative exponents.
std::vector<UPoly> coefficients_in(const LaurentPoly2& p, int var);
// Inverse of coefficients_in.
LaurentPoly2 from_coefficients(const std::vector<UPoly>& coeffs, int var, const VarNames& vars);
LaurentPoly2 from_upoly(const UPoly& u, int var, const VarNames& vars);

// Partial derivative with respect to `var`.
LaurentPoly2 derivative(const LaurentPoly2& p, int var);

// Remainder of p modulo the principal ideal (divisor) in Q[x, y] under lex
// order with the first variable dominant. Both inputs must be polynomials.
LaurentPoly2 normal_form(const LaurentPoly2& p, const LaurentPoly2& divisor);
// Exact quotient in the Laurent ring (up to the monomial units), or nullopt.
std::optional<LaurentPoly2> divide_exact(const LaurentPoly2& p, const LaurentPoly2& divisor);

}  // namespace slopesmith
