#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace oracle {

using slopesmith::LaurentPoly2;
using slopesmith::Rational;

Dense from_laurent(const LaurentPoly2& p) {
  Dense d;
  for (const auto& [e, c] : p.terms()) d[{e[0], e[1]}] = c.raw();
  return d;
}

LaurentPoly2 to_laurent(const Dense& d, const slopesmith::VarNames& vars) {
  LaurentPoly2 out(vars);
  for (const auto& [e, c] : d) {
    if (c != 0) out += LaurentPoly2::monomial(Rational(c), e.first, e.second, vars);
  }
  return out;
}

Dense mul(const Dense& a, const Dense& b) {
  Dense out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[{ea.first + eb.first, ea.second + eb.second}] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Dense add(const Dense& a, const Dense& b) {
  Dense out = a;
  for (const auto& [e, c] : b) out[e] += c;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

bool equal(const Dense& a, const Dense& b) {
  auto strip = [](Dense d) {
    std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
    return d;
  };
  return strip(a) == strip(b);
}

namespace {

mpz_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

int sgn_pow(int e) { return e % 2 == 0 ? 1 : -1; }

std::int64_t cross(std::pair<int, int> o, std::pair<int, int> a, std::pair<int, int> b) {
  return static_cast<std::int64_t>(a.first - o.first) * (b.second - o.second) -
         static_cast<std::int64_t>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

Dense new_p_binomial(int p, int q, const mpq_class& c) {
  Dense out;
  const int r = q - p;
  for (int i = 0; i <= p; ++i) {
    for (int j = 0; j <= r; ++j) {
      const mpq_class coef = binom(p, i) * binom(r, j) * sgn_pow(p - i) * sgn_pow(r - j);
      out[{p + 2 * j, 2 * i + 2 * j}] += coef;
    }
  }
  for (int k = 0; k <= q; ++k) out[{2 * k, q}] -= c * binom(q, k) * sgn_pow(q - k);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::set<std::pair<std::int64_t, std::int64_t>> hull_slopes(const std::vector<std::pair<int, int>>& pts) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      bool left = true;
      for (const auto& c : pts) {
        if (cross(a, b, c) < 0) left = false;
      }
      if (!left) continue;
      std::int64_t dx = b.first - a.first;
      std::int64_t dy = b.second - a.second;
      const std::int64_t g = std::gcd(std::abs(dx), std::abs(dy));
      dx /= g;
      dy /= g;
      if (dy < 0 || (dy == 0 && dx < 0)) {
        dx = -dx;
        dy = -dy;
      }
      out.insert({dx, dy});
    }
  }
  return out;
}

std::set<std::pair<int, int>> hull_vertices(const std::vector<std::pair<int, int>>& raw) {
  std::vector<std::pair<int, int>> pts = raw;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::set<std::pair<int, int>> out;
  for (const auto& v : pts) {
    bool inside = false;
    // In the closed hull of the others iff inside some triangle or segment of them.
    for (std::size_t i = 0; i < pts.size() && !inside; ++i) {
      for (std::size_t j = i; j < pts.size() && !inside; ++j) {
        for (std::size_t k = j; k < pts.size() && !inside; ++k) {
          const auto &a = pts[i], &b = pts[j], &c = pts[k];
          if (a == v || b == v || c == v) continue;
          const auto d1 = cross(a, b, v), d2 = cross(b, c, v), d3 = cross(c, a, v);
          const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
          const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
          if (neg && pos) continue;
          // Degenerate triangles need v between the extreme points.
          const int lo_x = std::min({a.first, b.first, c.first}), hi_x = std::max({a.first, b.first, c.first});
          const int lo_y = std::min({a.second, b.second, c.second}), hi_y = std::max({a.second, b.second, c.second});
          if (v.first < lo_x || v.first > hi_x || v.second < lo_y || v.second > hi_y) continue;
          inside = true;
        }
      }
    }
    if (!inside) out.insert(v);
  }
  return out;
}

FactorVerdict factor_support_enumeration(const LaurentPoly2& poly) {
  const Dense d = from_laurent(poly.normalized());
  int mx = 0, my = 0;
  std::vector<std::pair<int, int>> support;
  for (const auto& [e, c] : d) {
    mx = std::max(mx, e.first);
    my = std::max(my, e.second);
    support.push_back(e);
  }
  std::vector<std::pair<int, int>> box;
  for (int x = 0; x <= mx; ++x) {
    for (int y = 0; y <= my; ++y) box.push_back({x, y});
  }
  if (box.size() > 9) throw std::invalid_argument("support box too large for enumeration");
  const auto target = hull_vertices(support);
  const std::vector<std::pair<int, int>> target_list(target.begin(), target.end());
  const auto in_target = [&](std::pair<int, int> pt) {
    auto pts = target_list;
    pts.push_back(pt);
    return target.count(pt) || hull_vertices(pts) == target;
  };

  struct Subset {
    std::vector<std::pair<int, int>> pts;
    int max_x, max_y;
  };
  std::vector<Subset> subsets;
  const unsigned n = static_cast<unsigned>(box.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Subset s{{}, 0, 0};
    int min_x = mx + 1, min_y = my + 1;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.pts.push_back(box[i]);
    }
    if (s.pts.size() < 2) continue;
    for (const auto& pt : s.pts) {
      min_x = std::min(min_x, pt.first);
      min_y = std::min(min_y, pt.second);
      s.max_x = std::max(s.max_x, pt.first);
      s.max_y = std::max(s.max_y, pt.second);
    }
    if (min_x == 0 && min_y == 0) subsets.push_back(std::move(s));
  }

  const auto coeff = [&](std::pair<int, int> e) {
    auto it = d.find(e);
    return it == d.end() ? mpq_class(0) : it->second;
  };
  bool undecided = false;
  for (const auto& s : subsets) {
    for (const auto& t : subsets) {
      if (s.max_x + t.max_x != mx || s.max_y + t.max_y != my) continue;
      std::vector<std::pair<int, int>> sums;
      bool inside = true;
      for (const auto& a : s.pts) {
        for (const auto& b : t.pts) {
          const std::pair<int, int> e{a.first + b.first, a.second + b.second};
          if (!in_target(e)) inside = false;
          sums.push_back(e);
        }
      }
      if (!inside || hull_vertices(sums) != target) continue;
      if (s.pts.size() != 2 || t.pts.size() != 2) {
        undecided = true;
        continue;
      }
      const auto& u0 = s.pts[0];
      const auto& u1 = s.pts[1];
      const auto& w0 = t.pts[0];
      const auto& w1 = t.pts[1];
      const std::pair<int, int> s00{u0.first + w0.first, u0.second + w0.second};
      const std::pair<int, int> s01{u0.first + w1.first, u0.second + w1.second};
      const std::pair<int, int> s10{u1.first + w0.first, u1.second + w0.second};
      const std::pair<int, int> s11{u1.first + w1.first, u1.second + w1.second};
      const std::set<std::pair<int, int>> four{s00, s01, s10, s11};
      if (four.size() != 4) {
        undecided = true;
        continue;
      }
      bool fits = true;
      for (const auto& e : support) {
        if (!four.count(e)) fits = false;
      }
      for (const auto& e : four) {
        if (coeff(e) == 0) fits = false;
      }
      if (fits && coeff(s00) * coeff(s11) == coeff(s01) * coeff(s10)) return FactorVerdict::factorable;
    }
  }
  return undecided ? FactorVerdict::undecided : FactorVerdict::irreducible;
}

bool values_are_squares(const slopesmith::UPoly& p, int n) {
  for (int k = 0; k <= n; ++k) {
    const mpq_class v = p.evaluate(Rational(k)).raw();
    if (v < 0) return false;
    if (mpz_perfect_square_p(v.get_num().get_mpz_t()) == 0 || mpz_perfect_square_p(v.get_den().get_mpz_t()) == 0) {
      return false;
    }
  }
  return true;
}

double lobachevsky_series(double theta, long terms) {
  // Kahan-compensated sum of the Fourier series.
  double sum = 0.0, comp = 0.0;
  for (long n = terms; n >= 1; --n) {
    const double term = std::sin(2.0 * n * theta) / (static_cast<double>(n) * n);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return 0.5 * sum;
}

namespace {

// 20-point Gauss-Legendre on [a, b].
template <typename F>
double gl20(F f, double a, double b) {
  static const double x[10] = {0.0765265211334973, 0.2277858511416451, 0.3737060887154195, 0.5108670019508271,
                               0.6360536807265150, 0.7463319064601508, 0.8391169718222188, 0.9122344282513259,
                               0.9639719272779138, 0.9931285991850949};
  static const double w[10] = {0.1527533871307258, 0.1491729864726037, 0.1420961093183820, 0.1316886384491766,
                               0.1181945319615184, 0.1019301198172404, 0.0832767415767048, 0.0626720483341091,
                               0.0406014298003869, 0.0176140071391521};
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  double acc = 0.0;
  for (int i = 0; i < 10; ++i) acc += w[i] * (f(m - h * x[i]) + f(m + h * x[i]));
  return acc * h;
}

template <typename F>
double composite(F f, double a, double b, int pieces) {
  double acc = 0.0;
  for (int k = 0; k < pieces; ++k) acc += gl20(f, a + (b - a) * k / pieces, a + (b - a) * (k + 1) / pieces);
  return acc;
}

}  // namespace

double lobachevsky_integral(double theta) {
  // log(2 sin t) = log(2 sin t / t) + log t; the second part integrates in closed form.
  const auto smooth = [](double t) { return t == 0.0 ? std::log(2.0) : std::log(2.0 * std::sin(t) / t); };
  return -composite(smooth, 0.0, theta, 64) - (theta * std::log(theta) - theta);
}

double regular_tet_volume_schlafli(double side) {
  const auto alpha = [](double s) {
    const double ct = std::cosh(s) / (1.0 + std::cosh(s));
    return std::acos(ct / (1.0 + ct));
  };
  const double third = std::numbers::pi / 3.0;
  const auto deficit = [&](double s) { return alpha(s) - third; };
  // The deficit decays like e^-s; truncating at 80 leaves < 1e-30.
  double tail = 0.0;
  for (double a = side; a < 80.0; a += 1.0) tail += composite(deficit, a, std::min(a + 1.0, 80.0), 4);
  return 1.01494160640965362502 - 3.0 * side * deficit(side) - 3.0 * tail;
}

double bloch_wigner(std::complex<double> z) {
  // Li2(z) = -integral_0^1 log(1 - t z) / t dt.
  const auto im_integrand = [z](double t) {
    if (t == 0.0) return -z.imag();
    return std::log(1.0 - t * z).imag() / t;
  };
  const double im_li2 = -composite(im_integrand, 0.0, 1.0, 400);
  return im_li2 + std::arg(1.0 - z) * std::log(std::abs(z));
}

Rational random_rational(std::mt19937_64& rng, int height) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  return Rational(num(rng), den(rng));
}

LaurentPoly2 random_laurent(std::mt19937_64& rng, const slopesmith::VarNames& vars, int terms, int exp_lo, int exp_hi,
                            int height) {
  std::uniform_int_distribution<int> e(exp_lo, exp_hi);
  LaurentPoly2 out(vars);
  for (int k = 0; k < terms; ++k) {
    out += LaurentPoly2::monomial(random_rational(rng, height), e(rng), e(rng), vars);
  }
  return out;
}

}  // namespace oracle
