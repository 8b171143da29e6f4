#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopesmith/laurent.hpp"
#include "slopesmith/rational.hpp"

namespace slopesmith::obstruction {

// --- Curve constructors ----------------------------------------------------

// b m^2 - b - C b^2 m + C m in variables (m, b).
LaurentPoly2 build_P(const Rational& c);
// m^p (l^2 - 1)^p (l^2 m^2 - 1)^(q-p) - C l^q (m^2 - 1)^q in variables (m, l).
LaurentPoly2 build_newP(std::int64_t p, std::int64_t q, const Rational& c);

// --- Irreducibility --------------------------------------------------------

enum class Irreducibility { irreducible, factors, inconclusive };

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::inconclusive;
  // factors.first * factors.second == P (up to a monomial) when status == factors.
  std::optional<std::pair<LaurentPoly2, LaurentPoly2>> witness;
  std::string method;
};

// Exact when P has degree <= 2 in some variable; otherwise a one-sided
// specialization test. Throws DomainError for constants.
IrreducibilityResult irreducibility_check(const LaurentPoly2& p);

// --- Local analysis at a curve point ----------------------------------------

// alpha * (x - x0) + beta * (y - y0), exact coefficients.
struct LinearForm {
  Rational alpha;
  Rational beta;
  // Integer multiple with coprime coefficients, first nonzero coefficient positive
  // unless that would flip the sign convention of alpha.
  std::pair<Integer, Integer> primitive() const;
  std::string to_string(const VarNames& vars) const;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

// Linear part of P at the origin. Throws DomainError when the origin is not on
// the curve or is singular.
LinearForm tangent_at_origin(const LaurentPoly2& p);

struct BranchData {
  Rational x0;
  Rational y0;
  LinearForm tangent;
  int ord_first = 0;   // order of vanishing of (x - x0) along the branch
  int ord_second = 0;  // order of vanishing of (y - y0)
  // Pole orders of x + 1/x and y + 1/y at the point (nonzero only at zero coordinates).
  int trace_pole_first = 0;
  int trace_pole_second = 0;
};

// Throws DomainError for points off the curve, singular points, and tangents
// equal to a coordinate line (those need Puiseux expansions).
BranchData branch_orders(const LaurentPoly2& p, const Rational& x0, const Rational& y0);

// Translation length of the meridian and the number of boundary components
// of the associated surface, both twice the trace pole order.
struct TreeLengths {
  std::int64_t translation_length;
  std::int64_t boundary_components;
};
TreeLengths tree_lengths(std::int64_t pole_order);

// --- Symmetries -------------------------------------------------------------

enum class Symmetry { negate_first, negate_second, negate_both };
std::string to_string(Symmetry s, const VarNames& vars);

// Substitutions fixing P up to a nonzero rational scalar.
std::vector<Symmetry> detect_symmetries(const LaurentPoly2& p);

// --- Ratio constancy ---------------------------------------------------------

enum class RatioKind { cyclic, diameter };

struct RatioResult {
  bool constant = false;
  std::optional<Rational> value;  // C' when constant
  std::string method;             // "sampled point" or "normal form"
  // Two curve points where the ratio differs, with the ratio values, when non-constant.
  struct WitnessPoint {
    std::complex<double> x;
    std::complex<double> y;
    std::complex<double> ratio;
  };
  std::vector<WitnessPoint> witnesses;
};

// cyclic: is (x - 1/x)^2 / (y - 1/y)^2 constant on {A = 0}?
// diameter: is f_l^p f_(m+l)^(q-p) / f_m^q constant, f_g = (e_g - 1/e_g)^2?
RatioResult ratio_constant_check(const LaurentPoly2& a, RatioKind kind, std::int64_t p = 0, std::int64_t q = 0);

// --- Reports -----------------------------------------------------------------

enum class Pipeline { cyclic, diameter };
enum class Verdict { contradiction_established, consistent, inconclusive };

struct EvidenceStep {
  std::string name;
  std::string anchor;
  std::string value;
};

struct ObstructionReport {
  Pipeline pipeline = Pipeline::cyclic;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<EvidenceStep> evidence;
  Verdict verdict = Verdict::inconclusive;
  std::string reason;
};

std::string to_string(Pipeline p);
std::string to_string(Verdict v);
// 0 consistent, 3 contradiction established, 2 inconclusive.
int exit_code(Verdict v);

ObstructionReport cyclic_verdict(const Rational& c, int unity_bound = 120);
ObstructionReport diameter_verdict(std::int64_t p, std::int64_t q);

std::string report_text(const ObstructionReport& r);
std::string report_json(const ObstructionReport& r);

}  // namespace slopesmith::obstruction
