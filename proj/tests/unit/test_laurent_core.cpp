#include "doctest.h"

#include "oracles.hpp"
#include "slopesmith/errors.hpp"
#include "slopesmith/laurent.hpp"
#include "slopesmith/poly_text.hpp"
#include "slopesmith/rational.hpp"
#include "slopesmith/upoly.hpp"

using namespace slopesmith;

namespace {

LaurentPoly2 mb(const char* text) { return parse_poly(text, VarNames::mb()); }
LaurentPoly2 ml(const char* text) { return parse_poly(text, VarNames::ml()); }

// b m^2 - b - c b^2 m + c m, assembled term by term.
LaurentPoly2 curve_p(long c) {
  return mb("b*m^2 - b") + LaurentPoly2::monomial(Rational(-c), 1, 2, VarNames::mb()) +
         LaurentPoly2::monomial(Rational(c), 1, 0, VarNames::mb());
}

}  // namespace

TEST_CASE("rational arithmetic stays in lowest terms") {
  const Rational a(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational::parse("-3/4") == Rational(-3, 4));
  CHECK(Rational::parse("+2") == Rational(2));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  Rational root;
  CHECK(rational_sqrt(Rational(9, 4), root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2), root));
  CHECK(floor(Rational(-1, 2)) == -1);
}

TEST_CASE("parse reads the term list of the cyclic curve") {
  const auto p = mb("b*m^2 - b - 3*b^2*m + 3*m");
  CHECK(p.size() == 4);
  const std::vector<Exponent> expected{{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  CHECK(p.support() == expected);
  CHECK(p.coeff(1, 2) == Rational(-3));
}

TEST_CASE("zero and Laurent supports") {
  const auto z = mb("0");
  CHECK(z.is_zero());
  CHECK(z.support().empty());
  const auto p = ml("m^-1 + l");
  const std::vector<Exponent> expected{{-1, 0}, {0, 1}};
  CHECK(p.support() == expected);
}

TEST_CASE("parse errors carry positions") {
  try {
    mb("m + + ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  try {
    mb("m + x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  CHECK_THROWS_AS(mb("m^99999999999"), ParseError);
  CHECK_THROWS_AS(mb(""), ParseError);
  CHECK_THROWS_AS(mb("(m + b"), ParseError);
  CHECK_THROWS_AS(mb("m/0"), ParseError);
}

TEST_CASE("ring operations") {
  const auto lhs = mb("b*m + 1") * mb("m - b");
  CHECK(lhs == mb("b*m^2 - b^2*m + m - b"));
  const auto p = curve_p(3);
  CHECK((p + (-p)).is_zero());
  CHECK(p * LaurentPoly2::constant(Rational(1), VarNames::mb()) == p);
  CHECK_THROWS_AS(p + ml("m"), VariableMismatch);
  CHECK(mb("m").pow(-2) == mb("m^-2"));
  CHECK_THROWS_AS(mb("m + b").pow(-1), DomainError);
}

TEST_CASE("ring operations agree with the dense oracle") {
  const auto a = mb("2*m^2*b - 1/3*b + m^-1");
  const auto b = mb("b^2 - 5*m + 7/2");
  const auto prod = oracle::mul(oracle::from_laurent(a), oracle::from_laurent(b));
  CHECK(oracle::equal(oracle::from_laurent(a * b), prod));
  CHECK(oracle::equal(oracle::from_laurent(a + b), oracle::add(oracle::from_laurent(a), oracle::from_laurent(b))));
}

TEST_CASE("monomial substitutions") {
  const auto p = curve_p(2);
  const auto inv = monomial_substitute(p, MonomialAction::invert_both);
  CHECK(inv * mb("b^2*m^2") == -p);
  for (const auto action : {MonomialAction::negate_first, MonomialAction::negate_second, MonomialAction::negate_both,
                            MonomialAction::invert_first, MonomialAction::invert_second, MonomialAction::invert_both}) {
    CHECK(monomial_substitute(monomial_substitute(p, action), action) == p);
  }
  const auto q = ml("m*l^2 - m - 2*m^3*l^2 + l^4*m^3");
  CHECK(monomial_substitute(q, MonomialAction::negate_second) == q);
  CHECK(monomial_substitute(mb("m^2 + m*b"), MonomialAction::scale_first, Rational(3)) == mb("9*m^2 + 3*m*b"));
  CHECK_THROWS_AS(monomial_substitute(p, MonomialAction::scale_first, Rational(0)), DomainError);
}

TEST_CASE("evaluation") {
  for (long c : {-3L, 1L, 2L, 7L}) CHECK(evaluate(curve_p(c), Rational(1), Rational(1)).is_zero());
  CHECK(evaluate(ml("m^-1 + l"), Rational(2), Rational(3)) == Rational(7, 2));
  CHECK_THROWS_AS(evaluate(ml("m^-1 + l"), Rational(0), Rational(3)), DomainError);
}

TEST_CASE("specialization") {
  const UPoly u = specialize(curve_p(3), 0, Rational(2));
  CHECK(u == UPoly({Rational(6), Rational(3), Rational(-6)}));
  CHECK(specialize(mb("m*b - b"), 0, Rational(1)).is_zero());
  CHECK_THROWS_AS(specialize(mb("m^-1*b"), 0, Rational(0)), DomainError);
}

TEST_CASE("normal form and exact division") {
  const auto f = mb("b*m + 1");
  const auto g = mb("m - b");
  CHECK(normal_form(f * g * mb("m^2 + 3"), g).is_zero());
  CHECK_FALSE(normal_form(mb("m + 1"), g).is_zero());
  const auto q = divide_exact(f * g, g);
  REQUIRE(q.has_value());
  CHECK(*q == f);
  CHECK_FALSE(divide_exact(f, g).has_value());
}

TEST_CASE("printing is canonical") {
  CHECK(to_string(mb("-b + 3*m - 3*m*b^2 + m^2*b")) == "m^2*b - 3*m*b^2 + 3*m - b");
  CHECK(to_string(mb("0")) == "0");
  CHECK(to_string(ml("1/2*m^-1")) == "1/2*m^-1");
}

TEST_CASE("polynomial files") {
  const auto f = parse_poly_file("# name: test\n# note: x\nvars: m l\nm*l\n  - 1\n");
  CHECK(f.vars_declared);
  CHECK(f.vars == VarNames::ml());
  CHECK(f.metadata.at("name") == "test");
  CHECK(f.poly == ml("m*l - 1"));
  CHECK_THROWS_AS(parse_poly_file("# only comments\n"), ParseError);
}

TEST_CASE("univariate helpers") {
  const UPoly p({Rational(-2), Rational(1)});
  const UPoly q({Rational(1), Rational(1)});
  const auto [quo, rem] = divmod(p * q, q);
  CHECK(quo == p);
  CHECK(rem.is_zero());
  CHECK(gcd(p * q, q * q) == q);
  CHECK(rational_roots(p * q) == std::vector<Rational>{Rational(-1), Rational(2)});
  UPoly s;
  CHECK(poly_sqrt(p * p, s));
  CHECK(s == p);
  CHECK_FALSE(poly_sqrt(p * q, s));
  CHECK(small_degree_irreducible(UPoly({Rational(-2), Rational(0), Rational(1)})));
  CHECK_FALSE(small_degree_irreducible(p * q));
}
