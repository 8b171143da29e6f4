#include "slopesmith/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slopesmith/errors.hpp"
#include "slopesmith/newton_polygon.hpp"
#include "slopesmith/poly_text.hpp"
#include "slopesmith/roots.hpp"

namespace slopesmith::obstruction {

namespace {

void check_pq(std::int64_t p, std::int64_t q) {
  if (q < 1) throw DomainError("q must be >= 1");
  if (p < 0 || p > q) throw DomainError("p must satisfy 0 <= p <= q");
  if (std::gcd(p, q) != 1) throw DomainError("p and q must be coprime");
  if (q > 64) throw DomainError("q too large");
}

// Scale to coprime integer coefficients with a positive lex-leading coefficient.
LaurentPoly2 integer_primitive(const LaurentPoly2& f) {
  if (f.is_zero()) return f;
  Integer den = 1;
  for (const auto& [e, c] : f.terms()) den = lcm(den, c.denominator());
  Integer num = 0;
  for (const auto& [e, c] : f.terms()) num = gcd(num, (c * Rational(den)).numerator());
  Rational scale = Rational(den, num);
  if (f.terms().rbegin()->second.sign() < 0) scale = -scale;
  return f.scaled(scale);
}

UPoly content_of(const std::vector<UPoly>& coeffs) {
  UPoly g;
  for (const auto& c : coeffs) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

IrreducibilityResult factored(const LaurentPoly2& p, const LaurentPoly2& f, std::string method) {
  const LaurentPoly2 first = integer_primitive(f.normalized());
  auto second = divide_exact(p, first);
  if (!second) throw std::logic_error("factor does not divide");
  IrreducibilityResult r;
  r.status = Irreducibility::factors;
  r.witness = std::make_pair(first, second->normalized());
  r.method = std::move(method);
  return r;
}

IrreducibilityResult univariate_case(const LaurentPoly2& p, int var) {
  const UPoly f = specialize(p, 1 - var, Rational(1));
  const auto roots = rational_roots(f);
  if (!roots.empty()) {
    const UPoly lin({-roots.front(), Rational(1)});
    return factored(p, from_upoly(lin, var, p.vars()), "rational root");
  }
  IrreducibilityResult r;
  r.method = "univariate, no rational root";
  if (f.degree() <= 3) {
    r.status = Irreducibility::irreducible;
    r.method = "univariate of degree <= 3 without rational roots";
  }
  return r;
}

// Quadratic or linear in `var` with trivial content.
IrreducibilityResult low_degree_case(const LaurentPoly2& p, int var) {
  const auto a = coefficients_in(p, var);
  IrreducibilityResult r;
  if (a.size() == 2) {
    r.status = Irreducibility::irreducible;
    r.method = "primitive and linear in " + p.vars()[var];
    return r;
  }
  const UPoly disc = a[1] * a[1] - a[2] * a[0] * Rational(4);
  UPoly s;
  if (!poly_sqrt(disc, s)) {
    r.status = Irreducibility::irreducible;
    r.method = "discriminant in " + p.vars()[var] + " is not a square";
    return r;
  }
  UPoly c0 = a[1] - s;
  const UPoly c1 = a[2] * Rational(2);
  if (c0.is_zero()) c0 = a[1] + s;
  const UPoly g = gcd(c0, c1);
  const LaurentPoly2 f = from_coefficients({divmod(c0, g).first, divmod(c1, g).first}, var, p.vars());
  return factored(p, f, "discriminant in " + p.vars()[var] + " is a square");
}

std::vector<Rational> sample_values(std::size_t count) {
  std::vector<Rational> out;
  for (long h = 2; out.size() < count; ++h) {
    for (long d = 1; d < h && out.size() < count; ++d) {
      if (std::gcd(h, d) == 1) out.emplace_back(h, d);
    }
  }
  return out;
}

IrreducibilityResult specialization_case(const LaurentPoly2& p) {
  for (int var = 0; var < 2; ++var) {
    const int other = 1 - var;
    const int width = p.degree_in(other);
    if (width > 3) continue;
    for (const auto& s : sample_values(20)) {
      const UPoly f = specialize(p, var, s);
      if (f.degree() != width) continue;
      if (small_degree_irreducible(f)) {
        IrreducibilityResult r;
        r.status = Irreducibility::irreducible;
        r.method = "irreducible specialization " + p.vars()[var] + " = " + s.to_string();
        return r;
      }
    }
  }
  IrreducibilityResult r;
  r.method = "no irreducible specialization found";
  return r;
}

}  // namespace

LaurentPoly2 build_P(const Rational& c) {
  if (c.is_zero()) throw DomainError("C must be nonzero");
  const VarNames v = VarNames::mb();
  LaurentPoly2 p(v);
  p += LaurentPoly2::monomial(Rational(1), 2, 1, v);
  p += LaurentPoly2::monomial(Rational(-1), 0, 1, v);
  p += LaurentPoly2::monomial(-c, 1, 2, v);
  p += LaurentPoly2::monomial(c, 1, 0, v);
  return p;
}

LaurentPoly2 build_newP(std::int64_t p, std::int64_t q, const Rational& c) {
  check_pq(p, q);
  if (c.is_zero()) throw DomainError("C must be nonzero");
  const VarNames v = VarNames::ml();
  const auto m = LaurentPoly2::first_var(v);
  const auto l = LaurentPoly2::second_var(v);
  const auto one = LaurentPoly2::constant(Rational(1), v);
  const int pi = static_cast<int>(p);
  const int qi = static_cast<int>(q);
  return m.pow(pi) * (l * l - one).pow(pi) * (l * l * m * m - one).pow(qi - pi) -
         c * l.pow(qi) * (m * m - one).pow(qi);
}

IrreducibilityResult irreducibility_check(const LaurentPoly2& input) {
  const LaurentPoly2 p = input.normalized();
  if (p.is_constant()) throw DomainError("irreducibility of a constant polynomial");
  for (int var = 0; var < 2; ++var) {
    if (p.degree_in(var) == 0) return univariate_case(p, 1 - var);
  }
  for (int var : {1, 0}) {
    const UPoly content = content_of(coefficients_in(p, var));
    if (content.degree() >= 1) return factored(p, from_upoly(content, 1 - var, p.vars()), "content in " + p.vars()[var]);
  }
  for (int var : {1, 0}) {
    if (p.degree_in(var) <= 2) return low_degree_case(p, var);
  }
  return specialization_case(p);
}

std::pair<Integer, Integer> LinearForm::primitive() const {
  if (alpha.is_zero() && beta.is_zero()) throw DomainError("zero linear form");
  const Integer den = lcm(alpha.denominator(), beta.denominator());
  Integer a = (alpha * Rational(den)).numerator();
  Integer b = (beta * Rational(den)).numerator();
  const Integer g = gcd(a, b);
  a /= g;
  b /= g;
  return {a, b};
}

std::string LinearForm::to_string(const VarNames& vars) const {
  LaurentPoly2 f(vars);
  f += LaurentPoly2::monomial(alpha, 1, 0, vars);
  f += LaurentPoly2::monomial(beta, 0, 1, vars);
  return slopesmith::to_string(f);
}

LinearForm tangent_at_origin(const LaurentPoly2& p) {
  const Exponent lo = p.min_exponents();
  if (lo[0] < 0 || lo[1] < 0) throw DomainError("origin not on curve");
  if (!p.coeff(0, 0).is_zero()) throw DomainError("origin not on curve");
  LinearForm f{p.coeff(1, 0), p.coeff(0, 1)};
  if (f.alpha.is_zero() && f.beta.is_zero()) throw DomainError("origin singular");
  return f;
}

BranchData branch_orders(const LaurentPoly2& p, const Rational& x0, const Rational& y0) {
  if (!evaluate(p, x0, y0).is_zero()) throw DomainError("point not on curve");
  const Rational gx = evaluate(derivative(p, 0), x0, y0);
  const Rational gy = evaluate(derivative(p, 1), x0, y0);
  if (gx.is_zero() && gy.is_zero()) throw DomainError("singular point");
  if (gy.is_zero()) throw DomainError("tangent " + p.vars().first + " = " + x0.to_string() + " is a coordinate line");
  if (gx.is_zero()) throw DomainError("tangent " + p.vars().second + " = " + y0.to_string() + " is a coordinate line");
  BranchData d;
  d.x0 = x0;
  d.y0 = y0;
  d.tangent = LinearForm{gx, gy};
  d.ord_first = 1;
  d.ord_second = 1;
  d.trace_pole_first = x0.is_zero() ? d.ord_first : 0;
  d.trace_pole_second = y0.is_zero() ? d.ord_second : 0;
  return d;
}

TreeLengths tree_lengths(std::int64_t pole_order) {
  if (pole_order < 1) throw DomainError("pole order must be >= 1");
  return {2 * pole_order, 2 * pole_order};
}

std::string to_string(Symmetry s, const VarNames& vars) {
  const std::string x = vars.first;
  const std::string y = vars.second;
  switch (s) {
    case Symmetry::negate_first:
      return "(" + x + ", " + y + ") -> (-" + x + ", " + y + ")";
    case Symmetry::negate_second:
      return "(" + x + ", " + y + ") -> (" + x + ", -" + y + ")";
    case Symmetry::negate_both:
      return "(" + x + ", " + y + ") -> (-" + x + ", -" + y + ")";
  }
  return {};
}

std::vector<Symmetry> detect_symmetries(const LaurentPoly2& p) {
  if (p.is_zero()) throw DomainError("symmetries of the zero polynomial");
  const std::pair<Symmetry, MonomialAction> actions[] = {
      {Symmetry::negate_first, MonomialAction::negate_first},
      {Symmetry::negate_second, MonomialAction::negate_second},
      {Symmetry::negate_both, MonomialAction::negate_both},
  };
  const auto& [e0, c0] = *p.terms().begin();
  std::vector<Symmetry> out;
  for (const auto& [sym, action] : actions) {
    const LaurentPoly2 s = monomial_substitute(p, action);
    const Rational lambda = s.coeff(e0[0], e0[1]) / c0;
    if (!lambda.is_zero() && s == p.scaled(lambda)) out.push_back(sym);
  }
  return out;
}

namespace {

struct RatioPolys {
  LaurentPoly2 g;
  LaurentPoly2 h;
};

RatioPolys ratio_polys(const VarNames& v, RatioKind kind, std::int64_t p, std::int64_t q) {
  const auto x = LaurentPoly2::first_var(v);
  const auto y = LaurentPoly2::second_var(v);
  const auto one = LaurentPoly2::constant(Rational(1), v);
  if (kind == RatioKind::cyclic) {
    return {y * y * (x * x - one).pow(2), x * x * (y * y - one).pow(2)};
  }
  check_pq(p, q);
  const int pi = static_cast<int>(p);
  const int qi = static_cast<int>(q);
  return {x.pow(2 * pi) * (y * y - one).pow(2 * pi) * (x * x * y * y - one).pow(2 * (qi - pi)),
          y.pow(2 * qi) * (x * x - one).pow(2 * qi)};
}

std::vector<RatioResult::WitnessPoint> numeric_witnesses(const LaurentPoly2& a, const RatioPolys& r) {
  using cd = std::complex<double>;
  const cd xs[] = {{0.7, 0.3}, {1.3, -0.6}, {-0.4, 1.1}, {2.1, 0.5}, {0.2, -1.7}, {-1.6, -0.8}};
  std::vector<RatioResult::WitnessPoint> pts;
  for (const cd x : xs) {
    std::vector<cd> roots;
    try {
      roots = polynomial_roots(specialize_complex(a, 0, x));
    } catch (const std::exception&) {
      continue;
    }
    for (const cd y : roots) {
      if (std::abs(y) < 1e-8) continue;
      const cd h = evaluate(r.h, x, y);
      if (std::abs(h) < 1e-10) continue;
      pts.push_back({x, y, evaluate(r.g, x, y) / h});
      break;
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double scale = 1.0 + std::abs(pts[i].ratio) + std::abs(pts[j].ratio);
      if (std::abs(pts[i].ratio - pts[j].ratio) > 1e-6 * scale) return {pts[i], pts[j]};
    }
  }
  return {};
}

}  // namespace

RatioResult ratio_constant_check(const LaurentPoly2& input, RatioKind kind, std::int64_t p, std::int64_t q) {
  const LaurentPoly2 a = input.normalized();
  if (a.degree_in(0) == 0 || a.degree_in(1) == 0) throw DomainError("A must be nonconstant in each variable");
  const RatioPolys polys = ratio_polys(a.vars(), kind, p, q);
  const LaurentPoly2 dx = derivative(a, 0);
  const LaurentPoly2 dy = derivative(a, 1);

  RatioResult res;
  std::optional<Rational> c_prime;
  for (const auto& s : sample_values(50)) {
    for (const auto& y : rational_roots(specialize(a, 0, s))) {
      if (y.is_zero()) continue;
      if (evaluate(dx, s, y).is_zero() && evaluate(dy, s, y).is_zero()) continue;
      const Rational h = evaluate(polys.h, s, y);
      if (h.is_zero()) continue;
      c_prime = evaluate(polys.g, s, y) / h;
      res.method = "sampled point (" + s.to_string() + ", " + y.to_string() + ")";
      break;
    }
    if (c_prime) break;
  }

  if (c_prime) {
    res.constant = normal_form(polys.g - polys.h.scaled(*c_prime), a).is_zero();
  } else {
    res.method = "normal form";
    const LaurentPoly2 rg = normal_form(polys.g, a);
    const LaurentPoly2 rh = normal_form(polys.h, a);
    if (rh.is_zero()) {
      if (rg.is_zero()) throw DomainError("cannot determine C': numerator and denominator vanish on the curve");
      res.constant = false;
    } else {
      const auto& [e, c] = *rh.terms().rbegin();
      c_prime = rg.coeff(e[0], e[1]) / c;
      res.constant = rg == rh.scaled(*c_prime);
    }
  }
  if (res.constant) {
    res.value = c_prime;
  } else {
    res.witnesses = numeric_witnesses(a, polys);
  }
  return res;
}

std::string to_string(Pipeline p) { return p == Pipeline::cyclic ? "cyclic" : "diameter"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::contradiction_established:
      return "contradiction-established";
    case Verdict::consistent:
      return "consistent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return {};
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::consistent:
      return 0;
    case Verdict::contradiction_established:
      return 3;
    case Verdict::inconclusive:
      return 2;
  }
  return 2;
}

namespace {

std::string orders_text(const std::vector<int>& orders, int bound) {
  if (orders.empty()) return "not a root of unity (no order <= " + std::to_string(bound) + ")";
  return "root of unity of order " + std::to_string(orders.front());
}

}  // namespace

ObstructionReport cyclic_verdict(const Rational& c, int unity_bound) {
  ObstructionReport r;
  r.pipeline = Pipeline::cyclic;
  r.inputs = {{"C", c.to_string()}, {"unity_bound", std::to_string(unity_bound)}};
  const LaurentPoly2 p = build_P(c);
  const VarNames& v = p.vars();
  r.evidence.push_back({"defining polynomial", "eigenvalue curve", to_string(p)});

  const IrreducibilityResult irr = irreducibility_check(p);
  if (irr.status == Irreducibility::factors) {
    const std::string f = "(" + to_string(irr.witness->first) + ")*(" + to_string(irr.witness->second) + ")";
    r.evidence.push_back({"irreducibility", "factorization of the curve", "reducible: " + f});
    r.verdict = Verdict::consistent;
    r.reason = "P = " + f + " is reducible, so no contradiction pipeline applies";
    return r;
  }
  if (irr.status == Irreducibility::inconclusive) {
    r.evidence.push_back({"irreducibility", "factorization of the curve", "inconclusive: " + irr.method});
    r.verdict = Verdict::inconclusive;
    r.reason = "irreducibility of P could not be decided";
    return r;
  }
  r.evidence.push_back({"irreducibility", "factorization of the curve", "irreducible: " + irr.method});

  const LinearForm t = tangent_at_origin(p);
  r.evidence.push_back({"tangent at origin", "tangent cone at (0,0)", t.to_string(v)});

  const BranchData b = branch_orders(p, Rational(0), Rational(0));
  r.evidence.push_back({"coordinate orders", "smooth branch through (0,0)",
                        "ord_" + v.first + " = " + std::to_string(b.ord_first) + ", ord_" + v.second + " = " +
                            std::to_string(b.ord_second)});
  r.evidence.push_back({"trace pole orders", "poles of trace functions at (0,0)",
                        "ord(tr_mu) = " + std::to_string(b.trace_pole_first) +
                            ", ord(tr_beta) = " + std::to_string(b.trace_pole_second)});

  const TreeLengths tl = tree_lengths(b.trace_pole_second);
  r.evidence.push_back({"boundary components", "surface dual to the tree action",
                        "translation length " + std::to_string(tl.translation_length) + ", " +
                            std::to_string(tl.boundary_components) +
                            " boundary components (length read as max(0, -2 w(tr)), i.e. twice the pole order)"});

  const Rational inv = Rational(1) / c;
  r.evidence.push_back({"eigenvalue of mu - beta", "limit along the branch at (0,0)",
                        v.first + "/" + v.second + " -> 1/C = " + inv.to_string() + ", inverse C = " + c.to_string()});

  const auto orders_c = newton::unity_order(UPoly({-c, Rational(1)}), unity_bound);
  const auto orders_inv = newton::unity_order(UPoly({-inv, Rational(1)}), unity_bound);
  std::string value = "C = " + c.to_string() + ": " + orders_text(orders_c, unity_bound) + "; 1/C = " +
                      inv.to_string() + ": " + orders_text(orders_inv, unity_bound);
  if (orders_c.empty()) {
    value += " => order >= 3 required";
    r.evidence.push_back({"root-of-unity order", "eigenvalue order against boundary count", value});
    r.verdict = Verdict::contradiction_established;
    r.reason = "C = " + c.to_string() +
               " is not a root of unity, so any associated surface needs at least three boundary components, but "
               "the surface at (0,0) has " +
               std::to_string(tl.boundary_components);
    return r;
  }
  const int n = orders_c.front();
  r.evidence.push_back({"root-of-unity order", "eigenvalue order against boundary count", value});
  if (tl.boundary_components % n != 0) {
    r.verdict = Verdict::contradiction_established;
    r.reason = "order " + std::to_string(n) + " does not divide the boundary count " +
               std::to_string(tl.boundary_components);
  } else {
    r.verdict = Verdict::consistent;
    r.reason = "order " + std::to_string(n) + " divides the boundary count " +
               std::to_string(tl.boundary_components);
  }
  return r;
}

ObstructionReport diameter_verdict(std::int64_t p, std::int64_t q) {
  check_pq(p, q);
  ObstructionReport r;
  r.pipeline = Pipeline::diameter;
  r.inputs = {{"p", std::to_string(p)}, {"q", std::to_string(q)}};
  const auto parity = [](std::int64_t k) { return k % 2 == 0 ? std::string("even") : std::string("odd"); };
  r.evidence.push_back({"parameters", "slopes -p/q and 2 - p/q",
                        "p = " + std::to_string(p) + " (" + parity(p) + "), q = " + std::to_string(q) + " (" +
                            parity(q) + ")"});

  const LaurentPoly2 poly = build_newP(p, q, Rational(1));
  const VarNames& v = poly.vars();
  r.evidence.push_back({"defining polynomial", "model curve with C = 1", to_string(poly)});

  std::string slopes;
  for (const auto& s : newton::boundary_slopes(newton::compute_polygon(poly))) {
    slopes += (slopes.empty() ? "" : ", ") + s.to_string();
  }
  r.evidence.push_back({"boundary slopes", "Newton polygon of the curve", "{" + slopes + "}"});

  const auto syms = detect_symmetries(poly);
  std::string detected;
  for (const auto s : syms) detected += (detected.empty() ? "" : "; ") + to_string(s, v);
  r.evidence.push_back({"symmetries", "substitutions fixing the curve", detected.empty() ? "none" : detected});

  const auto has = [&](Symmetry s) { return std::find(syms.begin(), syms.end(), s) != syms.end(); };
  const bool q_even = q % 2 == 0;
  const bool both_odd = p % 2 == 1 && q % 2 == 1;
  const bool neg_second = has(Symmetry::negate_second);
  const bool neg_both = has(Symmetry::negate_both);

  r.evidence.push_back({"q even check", "only (m, l) -> (-m, l) may act",
                        std::string(q_even ? "q even, " : "q odd, ") + to_string(Symmetry::negate_second, v) +
                            (neg_second ? " present" : " absent")});
  r.evidence.push_back({"p, q odd check", "only (m, l) -> (-m, l) may act",
                        std::string(both_odd ? "p, q both odd, " : "p, q not both odd, ") +
                            to_string(Symmetry::negate_both, v) + (neg_both ? " present" : " absent")});
  r.evidence.push_back({"q = 1 check", "integral extreme slopes",
                        q == 1 ? std::string("q = 1") : "q = " + std::to_string(q) + " > 1"});

  if (neg_second != q_even || neg_both != both_odd) {
    r.verdict = Verdict::inconclusive;
    r.reason = "detected symmetries disagree with the parity prediction";
    return r;
  }
  std::vector<std::string> reasons;
  if (q_even) reasons.push_back("q even, symmetry " + to_string(Symmetry::negate_second, v) + " present");
  if (both_odd) reasons.push_back("p, q both odd, symmetry " + to_string(Symmetry::negate_both, v) + " present");
  if (q == 1) reasons.push_back("q = 1 excluded");
  if (reasons.empty()) {
    r.verdict = Verdict::consistent;
    r.reason = "p even, q odd, q > 1";
    return r;
  }
  r.verdict = Verdict::contradiction_established;
  for (const auto& s : reasons) r.reason += (r.reason.empty() ? "" : "; ") + s;
  return r;
}

std::string report_text(const ObstructionReport& r) {
  std::ostringstream os;
  os << "pipeline: " << to_string(r.pipeline) << "\n";
  for (const auto& [k, val] : r.inputs) os << "input " << k << " = " << val << "\n";
  for (std::size_t i = 0; i < r.evidence.size(); ++i) {
    const auto& e = r.evidence[i];
    os << "[" << i + 1 << "] " << e.name << " (" << e.anchor << "): " << e.value << "\n";
  }
  os << "verdict: " << to_string(r.verdict) << "\n";
  os << "reason: " << r.reason << "\n";
  return os.str();
}

std::string report_json(const ObstructionReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = "slopesmith.obstruction/1";
  j["pipeline"] = to_string(r.pipeline);
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [k, val] : r.inputs) inputs[k] = val;
  j["inputs"] = inputs;
  nlohmann::ordered_json ev = nlohmann::ordered_json::array();
  for (const auto& e : r.evidence) ev.push_back({{"name", e.name}, {"anchor", e.anchor}, {"value", e.value}});
  j["evidence"] = ev;
  j["verdict"] = to_string(r.verdict);
  j["reason"] = r.reason;
  j["exit_code"] = exit_code(r.verdict);
  return j.dump(2);
}

}  // namespace slopesmith::obstruction
