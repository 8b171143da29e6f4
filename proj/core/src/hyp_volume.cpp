#include "slopesmith/hyp_volume.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <random>
#include <sstream>

#include "slopesmith/errors.hpp"

namespace slopesmith::hyp {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 mul(double s, const Vec3& a) { return {s * a[0], s * a[1], s * a[2]}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double det3(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross3(b, c)); }

constexpr double kIdealSlack = 1e-14;

double one_minus_norm2(const Vec3& v) {
  const double a = 1.0 - dot(v, v);
  return std::abs(a) <= kIdealSlack ? 0.0 : a;
}

// Clausen function Cl2 on [-pi, pi].
double clausen2(double x) {
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  double acc = x - x * std::log(ax);
  const double r = (x / (2.0 * kPi)) * (x / (2.0 * kPi));
  static const std::vector<double> coeff = [] {
    std::vector<double> c(200, 0.0);
    for (unsigned k = 1; k < c.size(); ++k) c[k] = std::riemann_zeta(2.0 * k) / (k * (2.0 * k + 1.0));
    return c;
  }();
  double pw = x;
  for (unsigned k = 1; k < coeff.size(); ++k) {
    pw *= r;
    const double term = coeff[k] * pw;
    acc += term;
    if (std::abs(term) < 1e-18) break;
  }
  return acc;
}

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
constexpr double kXgk[8] = {0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
                            0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
                            0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
                            0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
                            0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
                            0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
                            0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                           0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

// Gauss-Legendre rule of order n on [0, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

GaussRule gauss_legendre(int n) {
  GaussRule g;
  for (int i = 1; i <= n; ++i) {
    double z = std::cos(kPi * (i - 0.25) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = z;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      const double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    g.x.push_back(0.5 * (1.0 - z));
    g.w.push_back(1.0 / ((1.0 - z * z) * dp * dp));
  }
  return g;
}

const GaussRule& rule_low() {
  static const GaussRule r = gauss_legendre(8);
  return r;
}
const GaussRule& rule_high() {
  static const GaussRule r = gauss_legendre(12);
  return r;
}

// Sub-tetrahedron (v, A, B, C) of the barycentric subdivision with v an
// original vertex. Points are v + s * w(u, t), w(u, t) = A + u(B - A) + ut(C - B) - v.
struct Cone {
  Vec3 v;
  Vec3 a, ba, cb;  // A - v, B - A, C - B
  double vv = 0;   // 1 - |v|^2, exactly 0 for ideal vertices
  double jac = 0;  // 6 * Euclidean volume

  double integrand(double s, double u, double t) const {
    const Vec3 w = add(a, mul(u, add(ba, mul(t, cb))));
    const double vw = dot(v, w);
    const double ww = dot(w, w);
    if (vv == 0.0) {
      const double d = 2.0 * vw + s * ww;
      return jac * u / (d * d);
    }
    const double d = vv - s * (2.0 * vw + s * ww);
    return jac * u * s * s / (d * d);
  }
};

struct InnerResult {
  double value;
  double error;
};

InnerResult tensor_rule(const Cone& c, double s, double u0, double u1, double t0, double t1, const GaussRule& g) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i) {
    const double u = u0 + (u1 - u0) * g.x[i];
    for (std::size_t j = 0; j < g.x.size(); ++j) {
      const double t = t0 + (t1 - t0) * g.x[j];
      acc += g.w[i] * g.w[j] * c.integrand(s, u, t);
    }
  }
  return {acc * (u1 - u0) * (t1 - t0), 0.0};
}

InnerResult inner_adaptive(const Cone& c, double s, double u0, double u1, double t0, double t1, double tol,
                           int depth) {
  const double lo = tensor_rule(c, s, u0, u1, t0, t1, rule_low()).value;
  const double hi = tensor_rule(c, s, u0, u1, t0, t1, rule_high()).value;
  const double err = std::abs(hi - lo);
  if (err <= tol || err <= 1e-14 * std::abs(hi) || depth >= 6) return {hi, err};
  const double um = 0.5 * (u0 + u1);
  const double tm = 0.5 * (t0 + t1);
  InnerResult total{0.0, 0.0};
  for (const auto& [a0, a1, b0, b1] : {std::array<double, 4>{u0, um, t0, tm}, std::array<double, 4>{um, u1, t0, tm},
                                       std::array<double, 4>{u0, um, tm, t1}, std::array<double, 4>{um, u1, tm, t1}}) {
    const InnerResult part = inner_adaptive(c, s, a0, a1, b0, b1, tol / 4.0, depth + 1);
    total.value += part.value;
    total.error += part.error;
  }
  return total;
}

struct Interval {
  double a, b, value, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

// Error includes the accumulated inner-rule estimates.
Interval gk_interval(const Cone& c, double a, double b, double inner_tol) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double kron = 0.0;
  double gauss = 0.0;
  double inner_err = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double xs[2] = {mid - half * kXgk[k], mid + half * kXgk[k]};
    const int count = k == 7 ? 1 : 2;
    for (int side = 0; side < count; ++side) {
      const InnerResult f = inner_adaptive(c, xs[side], 0.0, 1.0, 0.0, 1.0, inner_tol, 0);
      inner_err += f.error * half * kWgk[k];
      kron += kWgk[k] * f.value;
      if (k % 2 == 1) gauss += kWg[k / 2] * f.value;
    }
  }
  return {a, b, kron * half, std::abs(kron - gauss) * half + inner_err};
}

double cone_volume(const Cone& c, double tol) {
  constexpr int kMaxIntervals = 4000;
  const double inner_tol = tol * 1e-2;
  std::priority_queue<Interval> heap;
  // Geometric initial split so near-ideal peaks are resolved early.
  std::vector<double> cuts{0.0};
  for (double x = 1e-8; x < 1.0; x *= 10.0) cuts.push_back(x);
  cuts.push_back(1.0);
  double value = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Interval iv = gk_interval(c, cuts[i], cuts[i + 1], inner_tol);
    value += iv.value;
    error += iv.error;
    heap.push(iv);
  }
  int count = static_cast<int>(heap.size());
  while (error > tol) {
    if (count >= kMaxIntervals) throw NumericalError("klein_volume: subdivision budget exhausted", error);
    const Interval worst = heap.top();
    heap.pop();
    const double m = 0.5 * (worst.a + worst.b);
    const Interval l = gk_interval(c, worst.a, m, inner_tol);
    const Interval r = gk_interval(c, m, worst.b, inner_tol);
    value += l.value + r.value - worst.value;
    error += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    count += 2;
  }
  return value;
}

std::array<Vec3, 4> ideal_frame() {
  const double s = 1.0 / std::sqrt(3.0);
  return {Vec3{s, s, s}, Vec3{s, -s, -s}, Vec3{-s, s, -s}, Vec3{-s, -s, s}};
}

}  // namespace

double lobachevsky(double theta) {
  double x = std::remainder(theta, kPi);  // in [-pi/2, pi/2]
  return 0.5 * clausen2(2.0 * x);
}

double ideal_tet_volume(double alpha, double beta, double gamma) {
  if (alpha < 0 || beta < 0 || gamma < 0) throw DomainError("ideal tetrahedron angles must be nonnegative");
  if (std::abs(alpha + beta + gamma - kPi) > 1e-12) throw DomainError("ideal tetrahedron angles must sum to pi");
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

KleinTetrahedron::KleinTetrahedron(const std::array<Vec3, 4>& vertices) : vertices_(vertices) {
  double scale = 0.0;
  for (const auto& v : vertices_) {
    if (!(dot(v, v) <= 1.0 + kIdealSlack)) throw DomainError("vertex outside the closed unit ball");
    for (const auto& w : vertices_) scale = std::max(scale, std::sqrt(dot(sub(v, w), sub(v, w))));
  }
  if (!(euclidean_volume() > 1e-15 * scale * scale * scale)) throw DomainError("degenerate tetrahedron");
}

bool KleinTetrahedron::is_ideal(int k) const { return one_minus_norm2(vertices_[static_cast<std::size_t>(k)]) == 0.0; }

double KleinTetrahedron::euclidean_volume() const {
  const auto& v = vertices_;
  return std::abs(det3(sub(v[1], v[0]), sub(v[2], v[0]), sub(v[3], v[0]))) / 6.0;
}

double klein_volume(const KleinTetrahedron& t, double tol) {
  if (!(tol > 0)) throw DomainError("tolerance must be positive");
  const auto& p = t.vertices();
  Vec3 centroid{0, 0, 0};
  for (const auto& v : p) centroid = add(centroid, mul(0.25, v));
  std::vector<Cone> cones;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      for (int k = 0; k < 4; ++k) {
        if (k == i || k == j) continue;
        const Vec3 edge_mid = mul(0.5, add(p[i], p[j]));
        const Vec3 face_c = mul(1.0 / 3.0, add(add(p[i], p[j]), p[k]));
        Cone c;
        c.v = p[i];
        c.a = sub(edge_mid, p[i]);
        c.ba = sub(face_c, edge_mid);
        c.cb = sub(centroid, face_c);
        c.vv = one_minus_norm2(p[i]);
        c.jac = std::abs(det3(c.a, c.ba, c.cb));
        cones.push_back(c);
      }
    }
  }
  double total = 0.0;
  for (const auto& c : cones) total += cone_volume(c, tol / static_cast<double>(cones.size()));
  return total;
}

double klein_distance(const Vec3& x, const Vec3& y) {
  const double ax = one_minus_norm2(x);
  const double ay = one_minus_norm2(y);
  if (ax == 0.0 || ay == 0.0) return std::numeric_limits<double>::infinity();
  const double c = (1.0 - dot(x, y)) / std::sqrt(ax * ay);
  return std::acosh(std::max(1.0, c));
}

double regular_tet_radius(double side) {
  if (!(side > 0)) throw DomainError("side must be positive");
  return std::acosh(std::sqrt((3.0 * std::cosh(side) + 1.0) / 4.0));
}

KleinTetrahedron regular_tet(double side) {
  const double r = std::tanh(regular_tet_radius(side));
  auto frame = ideal_frame();
  for (auto& v : frame) v = mul(r, v);
  return KleinTetrahedron(frame);
}

KleinTetrahedron regular_ideal_tet() { return KleinTetrahedron(ideal_frame()); }

double face_angle(const Vec3& at, const Vec3& a, const Vec3& b) {
  const double xx = -one_minus_norm2(at);
  if (xx == 0.0) return 0.0;
  // Minkowski form on (1, x); tangent directions at `at` on the hyperboloid.
  const auto mink = [](const Vec3& p, const Vec3& q) { return -1.0 + dot(p, q); };
  const auto tangent = [&](const Vec3& p) {
    const double k = mink(p, at) / xx;
    return std::array<double, 4>{1.0 - k, p[0] - k * at[0], p[1] - k * at[1], p[2] - k * at[2]};
  };
  const auto m4 = [](const std::array<double, 4>& p, const std::array<double, 4>& q) {
    return -p[0] * q[0] + p[1] * q[1] + p[2] * q[2] + p[3] * q[3];
  };
  const auto ta = tangent(a);
  const auto tb = tangent(b);
  const double c = m4(ta, tb) / std::sqrt(m4(ta, ta) * m4(tb, tb));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::vector<double> face_angles(const KleinTetrahedron& t) {
  const auto& v = t.vertices();
  std::vector<double> out;
  for (int skip = 0; skip < 4; ++skip) {
    std::vector<int> f;
    for (int k = 0; k < 4; ++k) {
      if (k != skip) f.push_back(k);
    }
    for (int k = 0; k < 3; ++k) {
      out.push_back(face_angle(v[f[k]], v[f[(k + 1) % 3]], v[f[(k + 2) % 3]]));
    }
  }
  return out;
}

DecayTable epsilon_decay_report(const std::vector<double>& sides, double tol) {
  if (sides.empty()) throw DomainError("no side lengths");
  for (std::size_t k = 0; k < sides.size(); ++k) {
    if (!(sides[k] > 0) || (k > 0 && !(sides[k] > sides[k - 1]))) {
      throw DomainError("side lengths must be positive and increasing");
    }
  }
  const double d_inf = std::atanh(1.0 / 3.0);
  DecayTable table;
  for (const double i : sides) {
    DecayRow row;
    row.side = i;
    row.radius = regular_tet_radius(i);
    row.volume = klein_volume(regular_tet(i), tol);
    row.epsilon = kV3 - row.volume;
    row.i2_epsilon = i * i * row.epsilon;
    row.tail_bound = 4.0 * kPi * std::sinh(d_inf) * std::log(1.0 / std::tanh(row.radius / 2.0));
    table.rows.push_back(row);
  }
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    table.rows[k].ratio = k + 1 < table.rows.size() ? table.rows[k + 1].epsilon / table.rows[k].epsilon
                                                    : std::numeric_limits<double>::quiet_NaN();
  }
  if (table.rows.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(table.rows.size());
    for (const auto& r : table.rows) {
      const double y = std::log(r.epsilon);
      sx += r.side;
      sy += y;
      sxx += r.side * r.side;
      sxy += r.side * y;
    }
    table.fitted_rate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else {
    table.fitted_rate = std::numeric_limits<double>::quiet_NaN();
  }
  return table;
}

std::string decay_table_text(const DecayTable& table) {
  std::ostringstream os;
  os.precision(12);
  os << "i\tt\tvol\teps\ti2eps\tratio\tbound\n";
  for (const auto& r : table.rows) {
    os << r.side << '\t' << r.radius << '\t' << r.volume << '\t' << r.epsilon << '\t' << r.i2_epsilon << '\t';
    if (std::isnan(r.ratio)) {
      os << '-';
    } else {
      os << r.ratio;
    }
    os << '\t' << r.tail_bound << '\n';
  }
  os << "fitted_rate\t" << table.fitted_rate << '\n';
  return os.str();
}

FaceAngleResult face_angle_check(std::size_t n_samples, double vol_threshold, std::uint64_t seed, double tol) {
  if (n_samples == 0) throw DomainError("n_samples must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> side_dist(5.0, 12.0);
  std::normal_distribution<double> jitter(0.0, 1.0);
  std::uniform_real_distribution<double> spread(0.0, 1.0);

  FaceAngleResult res;
  std::vector<double> deficits;
  std::vector<double> betas;
  const std::size_t max_attempts = 20 * n_samples;
  while (res.samples < n_samples && res.attempts < max_attempts) {
    ++res.attempts;
    const double side = side_dist(rng);
    const double t0 = regular_tet_radius(side);
    const double angle_scale = 0.12 * spread(rng);
    std::array<Vec3, 4> verts = ideal_frame();
    for (auto& v : verts) {
      Vec3 d = add(v, Vec3{angle_scale * jitter(rng), angle_scale * jitter(rng), angle_scale * jitter(rng)});
      d = mul(1.0 / std::sqrt(dot(d, d)), d);
      const double t = std::max(1.0, t0 + 0.5 * jitter(rng));
      v = mul(std::tanh(t), d);
    }
    double vol = 0;
    try {
      vol = klein_volume(KleinTetrahedron(verts), tol);
    } catch (const DomainError&) {
      continue;
    }
    if (vol < vol_threshold) continue;
    const auto angles = face_angles(KleinTetrahedron(verts));
    deficits.push_back(kV3 - vol);
    betas.push_back(*std::max_element(angles.begin(), angles.end()));
    ++res.samples;
  }
  if (res.samples == 0) throw DomainError("sampler produced no qualifying tetrahedra");

  res.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < deficits.size(); ++k) {
    res.max_beta = std::max(res.max_beta, betas[k]);
    res.max_deficit = std::max(res.max_deficit, deficits[k]);
    if (betas[k] > 0) res.min_ratio = std::min(res.min_ratio, deficits[k] / (betas[k] * betas[k]));
  }
  res.fitted_c = std::isfinite(res.min_ratio) && res.min_ratio > 0 ? res.min_ratio * (1.0 - 1e-6) : 0.0;
  for (std::size_t k = 0; k < deficits.size(); ++k) {
    if (!(deficits[k] > res.fitted_c * betas[k] * betas[k])) res.violations.push_back(k);
  }
  return res;
}

LawOfSinesSample law_of_sines(double foot_distance, double leg) {
  const double x = std::tanh(foot_distance);
  const double ymax = std::sqrt(1.0 - x * x);
  if (!(foot_distance > 0) || !(leg > 0)) throw DomainError("triangle sides must be positive");
  // Vertical segment through the foot: y = ymax * tanh(leg) has distance `leg`.
  const Vec3 q{x, 0.0, 0.0};
  const Vec3 w{x, ymax * std::tanh(leg), 0.0};
  LawOfSinesSample s;
  s.theta = std::atan2(w[1], w[0]);
  s.d = klein_distance(q, w);
  s.t = klein_distance(Vec3{0, 0, 0}, w);
  s.residual = std::abs(std::sin(s.theta) - std::sinh(s.d) / std::sinh(s.t));
  return s;
}

double law_of_sines_check(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.05, 3.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double a = dist(rng);
    const double b = dist(rng);
    worst = std::max(worst, law_of_sines(a, b).residual);
  }
  return worst;
}

}  // namespace slopesmith::hyp
