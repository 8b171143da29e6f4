#include "slopesmith/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace slopesmith {

namespace {

constexpr long long kMaxLiteralExponent = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, const VarNames& vars) : text_(text), vars_(vars) {}

  LaurentPoly2 parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    LaurentPoly2 result = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  LaurentPoly2 expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    LaurentPoly2 acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      const char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      LaurentPoly2 t = term();
      if (c == '+') {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  LaurentPoly2 term() {
    LaurentPoly2 acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc *= factor();
    }
    return acc;
  }

  LaurentPoly2 factor() {
    LaurentPoly2 base = primary();
    skip_ws();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer exponent", pos_);
    long long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + (text_[pos_] - '0');
      if (e > kMaxLiteralExponent) throw ParseError("exponent overflow", start);
      ++pos_;
    }
    if (negative) e = -e;
    try {
      return base.pow(static_cast<int>(e));
    } catch (const DomainError& err) {
      throw ParseError(err.what(), start);
    }
  }

  LaurentPoly2 primary() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly2 inner = expr();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t den_pos = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected positive denominator", pos_);
        Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", den_pos);
        return LaurentPoly2::constant(Rational(num, den), vars_);
      }
      return LaurentPoly2::constant(Rational(num), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name.push_back(text_[pos_++]);
      if (name == vars_.first) return LaurentPoly2::first_var(vars_);
      if (name == vars_.second) return LaurentPoly2::second_var(vars_);
      throw ParseError("unknown variable '" + name + "'", start);
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  Integer digits() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(text_[pos_++]);
    return Integer(s, 10);
  }

  std::string_view text_;
  const VarNames& vars_;
  std::size_t pos_ = 0;
};

void print_monomial(std::ostream& os, const std::string& var, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  need_star = true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

LaurentPoly2 parse_poly(std::string_view text, const VarNames& vars) {
  if (vars.first == vars.second) throw DomainError("variable labels must differ");
  return Parser(text, vars).parse();
}

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const long da = static_cast<long>(a.first[0]) + a.first[1];
    const long db = static_cast<long>(b.first[0]) + b.first[1];
    if (da != db) return da > db;
    return a.first[0] > b.first[0];
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(c);
    bool need_star = false;
    if (mag != Rational(1) || e == Exponent{0, 0}) {
      os << mag;
      need_star = true;
    }
    print_monomial(os, p.vars().first, e[0], need_star);
    print_monomial(os, p.vars().second, e[1], need_star);
  }
  return os.str();
}

PolyFile parse_poly_file(std::string_view text, const VarNames& fallback_vars) {
  PolyFile file;
  file.vars = fallback_vars;
  std::size_t offset = 0;
  std::size_t body_start = std::string_view::npos;
  while (offset < text.size()) {
    std::size_t eol = text.find('\n', offset);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = trim(text.substr(offset, eol - offset));
    if (line.empty()) {
      offset = eol + 1;
      continue;
    }
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon != std::string_view::npos) {
        file.metadata.emplace(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 1))));
      }
      offset = eol + 1;
      continue;
    }
    if (line.rfind("vars:", 0) == 0) {
      std::istringstream names{std::string(line.substr(5))};
      std::string a, b, extra;
      if (!(names >> a >> b) || (names >> extra)) {
        throw ParseError("header must declare exactly two variables", offset);
      }
      file.vars = VarNames{a, b};
      file.vars_declared = true;
      offset = eol + 1;
      continue;
    }
    body_start = offset;
    break;
  }
  if (body_start == std::string_view::npos) throw ParseError("empty polynomial", text.size());
  // Comment lines after the body are not allowed; the body runs to the end.
  try {
    file.poly = parse_poly(text.substr(body_start), file.vars);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), body_start + e.position());
  }
  return file;
}

}  // namespace slopesmith
