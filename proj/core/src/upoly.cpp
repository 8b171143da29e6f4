#include "slopesmith/upoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "slopesmith/errors.hpp"

namespace slopesmith {

UPoly::UPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_power(int k, const Rational& c) {
  if (k < 0) throw DomainError("negative power in UPoly::x_power");
  std::vector<Rational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

UPoly UPoly::x_n_minus_one(int n) { return x_power(n) - constant(Rational(1)); }

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lc = leading();
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c /= lc;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (degree() <= 0) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UPoly(std::move(v));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int UPoly::lowest_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return 0;
}

UPoly UPoly::shifted_down(int k) const {
  if (k <= 0) return *this;
  if (k > degree()) return {};
  return UPoly(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

UPoly UPoly::operator-() const {
  std::vector<Rational> v = coeffs_;
  for (auto& c : v) c = -c;
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) { return *this += -o; }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.coeffs_) x *= c;
  a.trim();
  return a;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rational c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == Rational(1);
    if (k == 0) {
      os << c;
    } else {
      if (!unit) os << c << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Rational& lb = b.leading();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lb;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Scale to integer coefficients.
std::vector<Integer> integer_coefficients(const UPoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) {
    Integer d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<Integer> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.numerator() * (l / c.denominator()));
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.degree() <= 0) return {};
  std::set<Rational> roots;
  const int low = p.lowest_degree();
  if (low > 0) roots.insert(Rational(0));
  const UPoly q = p.shifted_down(low);
  if (q.degree() >= 1) {
    const auto ints = integer_coefficients(q);
    const auto nums = positive_divisors(ints.front());
    const auto dens = positive_divisors(ints.back());
    for (const auto& n : nums) {
      for (const auto& d : dens) {
        for (int s : {1, -1}) {
          Rational r(Integer(n * s), d);
          if (q.evaluate(r).is_zero()) roots.insert(r);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

bool poly_sqrt(const UPoly& p, UPoly& root) {
  if (p.is_zero()) {
    root = UPoly();
    return true;
  }
  if (p.degree() % 2 != 0) return false;
  Rational lead;
  if (!rational_sqrt(p.leading(), lead)) return false;
  const int d = p.degree() / 2;
  std::vector<Rational> s(static_cast<std::size_t>(d) + 1);
  s[static_cast<std::size_t>(d)] = lead;
  for (int k = d - 1; k >= 0; --k) {
    Rational acc = p.coeff(d + k);
    for (int i = k + 1; i < d; ++i) {
      const int j = d + k - i;
      if (j > k && j <= d - 1) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
    }
    s[static_cast<std::size_t>(k)] = acc / (Rational(2) * lead);
  }
  UPoly candidate(std::move(s));
  if (candidate * candidate != p) return false;
  root = candidate;
  return true;
}

bool small_degree_irreducible(const UPoly& p) {
  if (p.degree() < 1) throw DomainError("irreducibility is undefined for constants");
  if (p.degree() > 3) throw DomainError("small_degree_irreducible requires degree <= 3");
  if (p.degree() == 1) return true;
  return rational_roots(p).empty();
}

}  // namespace slopesmith
