#include "slopesmith/laurent.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace slopesmith {

namespace {

constexpr std::int64_t kMaxExponent = std::int64_t{1} << 24;

int checked_exponent(std::int64_t e) {
  if (e > kMaxExponent || e < -kMaxExponent) throw DomainError("exponent overflow");
  return static_cast<int>(e);
}

std::complex<double> ipow(std::complex<double> base, int e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  std::complex<double> result(1.0, 0.0);
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

void add_term(LaurentPoly2::TermMap& terms, const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

LaurentPoly2::LaurentPoly2(TermMap terms, VarNames vars) : vars_(std::move(vars)) {
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

LaurentPoly2 LaurentPoly2::constant(const Rational& c, VarNames vars) { return monomial(c, 0, 0, std::move(vars)); }

LaurentPoly2 LaurentPoly2::monomial(const Rational& c, int i, int j, VarNames vars) {
  LaurentPoly2 p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(Exponent{checked_exponent(i), checked_exponent(j)}, c);
  return p;
}

bool LaurentPoly2::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

Rational LaurentPoly2::coeff(int i, int j) const {
  const auto it = terms_.find(Exponent{i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> LaurentPoly2::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& kv : terms_) out.push_back(kv.first);
  return out;
}

std::pair<int, int> LaurentPoly2::exponent_range(int var) const {
  if (terms_.empty()) return {0, 0};
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& kv : terms_) {
    lo = std::min(lo, kv.first[var]);
    hi = std::max(hi, kv.first[var]);
  }
  return {lo, hi};
}

int LaurentPoly2::degree_in(int var) const {
  const auto [lo, hi] = exponent_range(var);
  return hi - lo;
}

Exponent LaurentPoly2::min_exponents() const { return {exponent_range(0).first, exponent_range(1).first}; }

LaurentPoly2 LaurentPoly2::normalized() const {
  const Exponent lo = min_exponents();
  return shifted(-lo[0], -lo[1]);
}

bool LaurentPoly2::is_normalized() const { return min_exponents() == Exponent{0, 0}; }

void LaurentPoly2::check_vars(const LaurentPoly2& o) const {
  if (!(vars_ == o.vars_)) {
    throw VariableMismatch("variable labels differ: (" + vars_.first + "," + vars_.second + ") vs (" + o.vars_.first +
                           "," + o.vars_.second + ")");
  }
}

LaurentPoly2 LaurentPoly2::operator-() const { return scaled(Rational(-1)); }

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& o) {
  check_vars(o);
  TermMap out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      const Exponent e{checked_exponent(std::int64_t{ea[0]} + eb[0]), checked_exponent(std::int64_t{ea[1]} + eb[1])};
      add_term(out, e, ca * cb);
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly2 LaurentPoly2::scaled(const Rational& c) const {
  LaurentPoly2 out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace(e, v * c);
  return out;
}

LaurentPoly2 LaurentPoly2::shifted(int di, int dj) const {
  LaurentPoly2 out(vars_);
  for (const auto& [e, v] : terms_) {
    out.terms_.emplace(Exponent{checked_exponent(std::int64_t{e[0]} + di), checked_exponent(std::int64_t{e[1]} + dj)}, v);
  }
  return out;
}

LaurentPoly2 LaurentPoly2::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) throw DomainError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(slopesmith::pow(c, exponent), checked_exponent(std::int64_t{e[0]} * exponent),
                    checked_exponent(std::int64_t{e[1]} * exponent), vars_);
  }
  if (terms_.size() == 1) {
    const auto& [e, c] = *terms_.begin();
    return monomial(slopesmith::pow(c, exponent), checked_exponent(std::int64_t{e[0]} * exponent),
                    checked_exponent(std::int64_t{e[1]} * exponent), vars_);
  }
  LaurentPoly2 result = constant(Rational(1), vars_);
  LaurentPoly2 base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

LaurentPoly2 monomial_substitute(const LaurentPoly2& p, MonomialAction action, const Rational& scale) {
  if (action == MonomialAction::scale_first && scale.is_zero()) throw DomainError("zero scaling constant");
  LaurentPoly2::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    Exponent ne = e;
    Rational nc = c;
    switch (action) {
      case MonomialAction::negate_first:
        if (e[0] % 2 != 0) nc = -nc;
        break;
      case MonomialAction::negate_second:
        if (e[1] % 2 != 0) nc = -nc;
        break;
      case MonomialAction::negate_both:
        if ((e[0] + e[1]) % 2 != 0) nc = -nc;
        break;
      case MonomialAction::invert_first:
        ne[0] = -e[0];
        break;
      case MonomialAction::invert_second:
        ne[1] = -e[1];
        break;
      case MonomialAction::invert_both:
        ne = {-e[0], -e[1]};
        break;
      case MonomialAction::scale_first:
        nc *= pow(scale, e[0]);
        break;
    }
    out.emplace(ne, nc);
  }
  return LaurentPoly2(std::move(out), p.vars());
}

Rational evaluate(const LaurentPoly2& p, const Rational& x, const Rational& y) {
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) {
    if ((x.is_zero() && e[0] < 0) || (y.is_zero() && e[1] < 0)) {
      throw DomainError("zero coordinate with negative exponent");
    }
    acc += c * pow(x, e[0]) * pow(y, e[1]);
  }
  return acc;
}

std::complex<double> evaluate(const LaurentPoly2& p, std::complex<double> x, std::complex<double> y) {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : p.terms()) {
    if ((x == 0.0 && e[0] < 0) || (y == 0.0 && e[1] < 0)) {
      throw DomainError("zero coordinate with negative exponent");
    }
    acc += c.to_double() * ipow(x, e[0]) * ipow(y, e[1]);
  }
  return acc;
}

UPoly specialize(const LaurentPoly2& p, int var, const Rational& value) {
  const int other = 1 - var;
  if (p.is_zero()) return {};
  const int lo = p.exponent_range(other).first;
  std::map<int, Rational> acc;
  for (const auto& [e, c] : p.terms()) {
    if (value.is_zero() && e[var] < 0) throw DomainError("zero coordinate with negative exponent");
    acc[e[other] - lo] += c * pow(value, e[var]);
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(p.degree_in(other)) + 1);
  for (const auto& [k, c] : acc) coeffs[static_cast<std::size_t>(k)] = c;
  const UPoly raw(std::move(coeffs));
  return raw.shifted_down(raw.lowest_degree());
}

std::vector<std::complex<double>> specialize_complex(const LaurentPoly2& p, int var, std::complex<double> value) {
  const int other = 1 - var;
  if (p.is_zero()) return {};
  const int lo = p.exponent_range(other).first;
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(p.degree_in(other)) + 1);
  for (const auto& [e, c] : p.terms()) {
    if (value == 0.0 && e[var] < 0) throw DomainError("zero coordinate with negative exponent");
    coeffs[static_cast<std::size_t>(e[other] - lo)] += c.to_double() * ipow(value, e[var]);
  }
  return coeffs;
}

std::vector<UPoly> coefficients_in(const LaurentPoly2& p, int var) {
  const int other = 1 - var;
  if (p.is_zero()) return {};
  if (p.exponent_range(0).first < 0 || p.exponent_range(1).first < 0) {
    throw DomainError("coefficients_in requires nonnegative exponents");
  }
  const int deg = p.exponent_range(var).second;
  const int deg_other = p.exponent_range(other).second;
  std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(deg) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(deg_other) + 1));
  for (const auto& [e, c] : p.terms()) raw[static_cast<std::size_t>(e[var])][static_cast<std::size_t>(e[other])] = c;
  std::vector<UPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

LaurentPoly2 from_coefficients(const std::vector<UPoly>& coeffs, int var, const VarNames& vars) {
  LaurentPoly2::TermMap terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& cs = coeffs[k].coeffs();
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (cs[j].is_zero()) continue;
      Exponent e{};
      e[var] = static_cast<int>(k);
      e[1 - var] = static_cast<int>(j);
      terms.emplace(e, cs[j]);
    }
  }
  return LaurentPoly2(std::move(terms), vars);
}

LaurentPoly2 from_upoly(const UPoly& u, int var, const VarNames& vars) {
  std::vector<UPoly> coeffs;
  for (const auto& c : u.coeffs()) coeffs.push_back(UPoly::constant(c));
  return from_coefficients(coeffs, var, vars);
}

LaurentPoly2 derivative(const LaurentPoly2& p, int var) {
  LaurentPoly2::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponent ne = e;
    ne[var] -= 1;
    out.emplace(ne, c * Rational(e[var]));
  }
  return LaurentPoly2(std::move(out), p.vars());
}

LaurentPoly2 normal_form(const LaurentPoly2& p, const LaurentPoly2& divisor) {
  if (divisor.is_zero()) throw DomainError("normal form modulo zero");
  if (p.min_exponents()[0] < 0 || p.min_exponents()[1] < 0 || divisor.min_exponents()[0] < 0 ||
      divisor.min_exponents()[1] < 0) {
    throw DomainError("normal_form requires ordinary polynomials");
  }
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  LaurentPoly2 work = p.with_vars(divisor.vars());
  LaurentPoly2::TermMap rem;
  while (!work.is_zero()) {
    const auto [e, c] = *work.terms().rbegin();
    if (e[0] >= lead_e[0] && e[1] >= lead_e[1]) {
      work -= divisor.shifted(e[0] - lead_e[0], e[1] - lead_e[1]).scaled(c / lead_c);
    } else {
      rem.emplace(e, c);
      work -= LaurentPoly2::monomial(c, e[0], e[1], divisor.vars());
    }
  }
  return LaurentPoly2(std::move(rem), p.vars());
}

std::optional<LaurentPoly2> divide_exact(const LaurentPoly2& p, const LaurentPoly2& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly2(p.vars());
  const Exponent sp = p.min_exponents();
  const Exponent sd = divisor.min_exponents();
  const LaurentPoly2 num = p.normalized().with_vars(divisor.vars());
  const LaurentPoly2 den = divisor.normalized();
  const auto& [lead_e, lead_c] = *den.terms().rbegin();
  LaurentPoly2 work = num;
  LaurentPoly2 quotient(den.vars());
  while (!work.is_zero()) {
    const auto [e, c] = *work.terms().rbegin();
    if (e[0] < lead_e[0] || e[1] < lead_e[1]) return std::nullopt;
    const LaurentPoly2 q = LaurentPoly2::monomial(c / lead_c, e[0] - lead_e[0], e[1] - lead_e[1], den.vars());
    quotient += q;
    work -= q * den;
  }
  return quotient.shifted(sp[0] - sd[0], sp[1] - sd[1]).with_vars(p.vars());
}

}  // namespace slopesmith
