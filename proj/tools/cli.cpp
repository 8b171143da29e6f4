#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "slopesmith/cs_norm.hpp"
#include "slopesmith/curve_path.hpp"
#include "slopesmith/errors.hpp"
#include "slopesmith/hyp_volume.hpp"
#include "slopesmith/newton_polygon.hpp"
#include "slopesmith/obstruction.hpp"
#include "slopesmith/poly_text.hpp"
#include "slopesmith/roots.hpp"

#ifndef SLOPESMITH_DEFAULT_CORPUS
#define SLOPESMITH_DEFAULT_CORPUS "corpus"
#endif

namespace slopesmith::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr const char* kSchema = "slopesmith.report/1";

// Text and structured forms of one report.
struct Report {
  std::ostringstream text;
  json data;
};

std::string fmt(double v, int precision = 12) {
  std::ostringstream os;
  os << std::setprecision(precision) << v;
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Report& r, const std::string& out_path, std::ostream& out) {
  out << r.text.str();
  if (out_path.empty()) return;
  fs::path text_path(out_path);
  fs::path json_path = text_path;
  if (text_path.extension() == ".json") {
    text_path.replace_extension(".txt");
  } else {
    json_path.replace_extension(".json");
  }
  std::ofstream t(text_path, std::ios::binary);
  std::ofstream j(json_path, std::ios::binary);
  if (!t || !j) throw std::runtime_error("cannot write report to " + out_path);
  t << r.text.str();
  j << r.data.dump(2) << '\n';
}

VarNames parse_vars(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("--vars expects two comma-separated names");
  VarNames v{s.substr(0, comma), s.substr(comma + 1)};
  if (!(v == VarNames::mb() || v == VarNames::ml())) throw DomainError("--vars must be m,b or m,l");
  return v;
}

// "1.2", "pi", "pi/3", "2pi/3", "2*pi/3".
double parse_angle(const std::string& s) {
  const auto pos = s.find("pi");
  if (pos == std::string::npos) return std::stod(s);
  double num = 1.0;
  std::string head = s.substr(0, pos);
  if (!head.empty() && head.back() == '*') head.pop_back();
  if (head == "-") {
    num = -1.0;
  } else if (!head.empty()) {
    num = std::stod(head);
  }
  double den = 1.0;
  const std::string tail = s.substr(pos + 2);
  if (!tail.empty()) {
    if (tail.front() != '/') throw DomainError("malformed angle " + s);
    den = std::stod(tail.substr(1));
  }
  return num * std::numbers::pi / den;
}

std::string point_text(const newton::LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// --- analyze ---------------------------------------------------------------

Report analyze(const std::string& poly_arg, const std::string& vars_arg) {
  const fs::path path = resolve_poly(poly_arg);
  const std::optional<VarNames> forced = vars_arg.empty() ? std::nullopt : std::optional(parse_vars(vars_arg));
  const PolyFile file = parse_poly_file(read_file(path), forced.value_or(VarNames::ml()));
  if (forced && file.vars_declared && !(file.vars == *forced)) {
    throw VariableMismatch("--vars does not match the file header");
  }
  const LaurentPoly2& p = file.poly;
  const VarNames& v = p.vars();

  Report r;
  r.data["schema"] = kSchema;
  r.data["command"] = "analyze";
  r.data["source"] = path.string();
  if (file.metadata.count("name")) r.data["name"] = file.metadata.at("name");
  r.data["variables"] = {v.first, v.second};
  r.data["polynomial"] = to_string(p);
  r.text << "source: " << path.string() << "\n";
  r.text << "polynomial: " << to_string(p) << "\n";
  r.text << "variables: " << v.first << " " << v.second << "\n";

  const newton::NewtonPolygon n = newton::compute_polygon(p);
  json verts = json::array();
  std::string vtext;
  for (const auto& q : n.vertices()) {
    verts.push_back({q.x, q.y});
    vtext += (vtext.empty() ? "" : " ") + point_text(q);
  }
  const char* degeneracy = n.degeneracy() == newton::Degeneracy::none
                               ? "none"
                               : (n.degeneracy() == newton::Degeneracy::point ? "point" : "segment");
  r.data["newton_polygon"] = {{"degeneracy", degeneracy}, {"vertices", verts}};
  r.text << "newton polygon: " << vtext << "\n";
  if (n.is_degenerate()) {
    r.text << "degenerate polygon (" << degeneracy << "): slopes and norm not defined\n";
    return r;
  }

  json edges = json::array();
  for (const auto& e : n.edges()) {
    const newton::EdgeSlope s(e.direction.x, e.direction.y);
    edges.push_back({{"start", {e.start.x, e.start.y}},
                     {"direction", {e.direction.x, e.direction.y}},
                     {"lattice_length", e.lattice_length},
                     {"slope", s.to_string()}});
    r.text << "  edge " << point_text(e.start) << " -> " << point_text(e.end()) << ", slope " << s.to_string()
           << ", lattice length " << e.lattice_length << "\n";
  }
  r.data["newton_polygon"]["edges"] = edges;

  const newton::SlopeSet slopes = newton::boundary_slopes(n);
  json slope_list = json::array();
  std::string stext;
  for (const auto& s : slopes) {
    slope_list.push_back(s.to_string());
    stext += (stext.empty() ? "" : ", ") + s.to_string();
  }
  const ExtendedRational diam = norm::slope_set_diameter(slopes);
  const auto dm = newton::axis_diameter(n, newton::Axis::first);
  const auto dl = newton::axis_diameter(n, newton::Axis::second);
  r.data["boundary_slopes"] = slope_list;
  r.data["slope_diameter"] = diam.to_string();
  r.data["axis_diameters"] = {{v.first, dm}, {v.second, dl}};
  r.text << "boundary slopes: {" << stext << "}\n";
  r.text << "slope diameter: " << diam.to_string() << "\n";
  r.text << "axis diameters: " << v.first << " " << dm << ", " << v.second << " " << dl << "\n";

  const auto cert = newton::minimality_check(p, slopes);
  const std::string minimal = cert.verdict == newton::Minimality::minimal ? "minimal" : "possibly-factorable";
  r.data["minimality"] = {{"verdict", minimal}, {"notes", cert.notes}};
  r.text << "minimality: " << minimal << "\n";

  const norm::Seminorm sn = norm::seminorm_from_polygon(n);
  json fs_json = json::array();
  std::string ntext;
  for (const auto& f : sn.functionals()) {
    fs_json.push_back({{"q", f.q}, {"p", f.p}, {"weight", f.weight}});
    std::ostringstream t;
    t << f.weight << "*|" << f.q << "*a " << (f.p < 0 ? "- " : "+ ") << (f.p < 0 ? -f.p : f.p) << "*b|";
    ntext += (ntext.empty() ? "" : " + ") + t.str();
  }
  r.data["seminorm"] = fs_json;
  r.data["seminorm_convention"] = "edge weight = lattice length";
  r.text << "seminorm: " << ntext << "\n";
  r.text << "  convention: edge weight = lattice length\n";
  if (!sn.is_norm()) {
    r.data["norm_ball"] = nullptr;
    r.text << "norm ball: unbounded (degenerate seminorm)\n";
  } else {
    const norm::NormBall ball = norm::ball_polygon(sn);
    json bv = json::array();
    std::string btext;
    for (const auto& q : ball.vertices) {
      bv.push_back({q.a.to_string(), q.b.to_string()});
      btext += (btext.empty() ? "" : " ") + ("(" + q.a.to_string() + "," + q.b.to_string() + ")");
    }
    const Rational area = norm::shoelace_area(ball.vertices);
    r.data["norm_ball"] = {{"radius", ball.radius.to_string()}, {"vertices", bv}, {"area", area.to_string()}};
    r.text << "norm ball: radius " << ball.radius << ", vertices " << btext << ", area " << area << "\n";

    json fig = {{"applicable", ball.vertices.size() == 4}};
    if (ball.vertices.size() == 4) {
      const auto rep = norm::fundamental_polygon_check(ball, {1, 0});
      json vs = json::array();
      for (const auto& s : rep.vertex_slopes) vs.push_back(s.to_string());
      fig["passed"] = rep.passed;
      fig["area"] = rep.area.to_string();
      fig["mu_at_edge_midpoint"] = rep.mu_at_edge_midpoint;
      fig["vertex_slopes"] = vs;
      fig["pq"] = rep.pq ? json{rep.pq->first, rep.pq->second} : json(nullptr);
      r.text << "parallelogram check: " << (rep.passed ? "pass" : "fail");
      if (rep.pq) r.text << " (p,q) = (" << rep.pq->first << "," << rep.pq->second << ")";
      r.text << "\n";
      for (const auto& note : rep.notes) r.text << "  " << note << "\n";
    } else {
      r.text << "parallelogram check: not applicable (" << ball.vertices.size() << " vertices)\n";
    }
    r.data["parallelogram_check"] = fig;
  }

  json syms = json::array();
  std::string sym_text;
  for (const auto s : obstruction::detect_symmetries(p)) {
    syms.push_back(obstruction::to_string(s, v));
    sym_text += (sym_text.empty() ? "" : "; ") + obstruction::to_string(s, v);
  }
  r.data["symmetries"] = syms;
  r.text << "symmetries: " << (sym_text.empty() ? "none" : sym_text) << "\n";
  return r;
}

// --- obstruct --------------------------------------------------------------

Report obstruct(const obstruction::ObstructionReport& rep, int& code) {
  Report r;
  r.text << obstruction::report_text(rep);
  r.data = json::parse(obstruction::report_json(rep));
  r.data["schema"] = kSchema;
  r.data["command"] = "obstruct";
  code = obstruction::exit_code(rep.verdict);
  return r;
}

// --- volume ----------------------------------------------------------------

Report volume_lobachevsky(const std::string& theta_arg) {
  const double theta = parse_angle(theta_arg);
  const double val = hyp::lobachevsky(theta);
  Report r;
  r.data = {{"schema", kSchema}, {"command", "volume lobachevsky"}, {"theta", theta}, {"value", val}};
  r.text << "theta: " << fmt(theta, 17) << "\n";
  r.text << "lobachevsky: " << fmt(val, 15) << "\n";
  return r;
}

Report volume_tet(bool ideal, double side, double tol) {
  Report r;
  r.data = {{"schema", kSchema}, {"command", "volume tet"}, {"tolerance", tol}};
  if (ideal) {
    const double quad = hyp::klein_volume(hyp::regular_ideal_tet(), tol);
    const double series = 3.0 * hyp::lobachevsky(std::numbers::pi / 3.0);
    r.data["tetrahedron"] = "regular ideal";
    r.data["klein_volume"] = quad;
    r.data["lobachevsky_volume"] = series;
    r.data["difference"] = quad - series;
    r.text << "tetrahedron: regular ideal\n";
    r.text << "klein volume: " << fmt(quad) << "\n";
    r.text << "3*Lambda(pi/3): " << fmt(series) << "\n";
    r.text << "difference: " << fmt(quad - series, 3) << "\n";
    return r;
  }
  const double vol = hyp::klein_volume(hyp::regular_tet(side), tol);
  r.data["tetrahedron"] = "regular";
  r.data["side"] = side;
  r.data["radius"] = hyp::regular_tet_radius(side);
  r.data["klein_volume"] = vol;
  r.data["epsilon"] = hyp::kV3 - vol;
  r.text << "tetrahedron: regular, side " << fmt(side) << "\n";
  r.text << "radius: " << fmt(hyp::regular_tet_radius(side)) << "\n";
  r.text << "klein volume: " << fmt(vol) << "\n";
  r.text << "epsilon: " << fmt(hyp::kV3 - vol) << "\n";
  return r;
}

Report volume_decay(double from, double to, double step, double tol) {
  if (!(step > 0) || !(to >= from)) throw DomainError("decay range needs from <= to and step > 0");
  std::vector<double> sides;
  for (int k = 0; from + k * step <= to + 1e-9; ++k) sides.push_back(from + k * step);
  const hyp::DecayTable t = hyp::epsilon_decay_report(sides, tol);
  Report r;
  r.text << hyp::decay_table_text(t);
  json rows = json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"i", row.side},
                    {"t", row.radius},
                    {"vol", row.volume},
                    {"eps", row.epsilon},
                    {"i2eps", row.i2_epsilon},
                    {"ratio", std::isnan(row.ratio) ? json(nullptr) : json(row.ratio)},
                    {"bound", row.tail_bound}});
  }
  r.data = {{"schema", kSchema}, {"command", "volume decay"}, {"tolerance", tol}, {"rows", rows},
            {"fitted_rate", t.fitted_rate}};
  return r;
}

// Deterministic starting sheet: the root of smallest modulus, ties by argument.
std::complex<double> start_root(const LaurentPoly2& p, std::complex<double> a) {
  auto roots = polynomial_roots(specialize_complex(p, 0, a));
  std::erase_if(roots, [](auto z) { return std::abs(z) < 1e-12; });
  if (roots.empty()) throw DomainError("no curve point over the starting coordinate");
  return *std::min_element(roots.begin(), roots.end(), [](auto x, auto y) {
    if (std::abs(std::abs(x) - std::abs(y)) > 1e-9) return std::abs(x) < std::abs(y);
    return std::arg(x) < std::arg(y);
  });
}

Report volume_eta(const std::string& poly_arg, const std::string& loop, std::complex<double> center, double radius,
                  double step) {
  const fs::path path = resolve_poly(poly_arg);
  const PolyFile file = parse_poly_file(read_file(path), VarNames::ml());
  const LaurentPoly2& p = file.poly;
  hyp::TrackOptions opt;
  opt.step = step;
  Report r;
  r.data = {{"schema", kSchema}, {"command", "volume eta"}, {"source", path.string()}, {"loop", loop},
            {"center", {center.real(), center.imag()}}, {"radius", radius}, {"step", step}};
  r.text << "source: " << path.string() << "\n";
  r.text << "center: " << fmt(center.real()) << " " << fmt(center.imag()) << ", radius " << fmt(radius)
         << ", step " << fmt(step) << "\n";
  if (loop == "small") {
    const auto way = hyp::circle_waypoints(center, radius, 256);
    const auto b0 = start_root(p, way.front());
    const hyp::CurvePath cp = hyp::track_curve(p, {way.front(), b0}, way, opt);
    const double eta = hyp::integrate_eta(cp);
    const double closure = std::abs(cp.samples.back().b - cp.samples.front().b);
    r.data["samples"] = cp.samples.size();
    r.data["closure"] = closure;
    r.data["eta_integral"] = eta;
    r.data["volume_change"] = -0.5 * eta;
    r.text << "loop: small circle, " << cp.samples.size() << " samples\n";
    r.text << "closure |b_end - b_start|: " << fmt(closure, 3) << "\n";
    r.text << "integral of eta: " << fmt(eta, 6) << "\n";
    r.text << "volume change: " << fmt(-0.5 * eta, 6) << "\n";
    return r;
  }
  if (loop == "homotopic") {
    const std::complex<double> a0 = center - radius;
    const std::complex<double> a1 = center + radius;
    std::vector<std::complex<double>> arc;
    for (int k = 0; k <= 128; ++k) {
      arc.push_back(center - std::polar(radius, -std::numbers::pi * k / 128.0));
    }
    arc.front() = a0;
    const auto b0 = start_root(p, a0);
    const auto line = hyp::track_curve(p, {a0, b0}, {a0, a1}, opt);
    const auto bent = hyp::track_curve(p, {a0, b0}, arc, opt);
    const double e1 = hyp::integrate_eta(line);
    const double e2 = hyp::integrate_eta(bent);
    const double end_gap = std::abs(line.samples.back().b - bent.samples.back().b);
    r.data["eta_straight"] = e1;
    r.data["eta_arc"] = e2;
    r.data["difference"] = e1 - e2;
    r.data["endpoint_gap"] = end_gap;
    r.text << "paths: straight segment and half circle\n";
    r.text << "integral of eta (straight): " << fmt(e1) << "\n";
    r.text << "integral of eta (arc): " << fmt(e2) << "\n";
    r.text << "difference: " << fmt(e1 - e2, 3) << "\n";
    r.text << "endpoint gap: " << fmt(end_gap, 3) << "\n";
    return r;
  }
  throw DomainError("--loop must be small or homotopic");
}

Report volume_angle(std::size_t samples, std::uint64_t seed, double threshold, double tol) {
  const hyp::FaceAngleResult res = hyp::face_angle_check(samples, threshold, seed, tol);
  const double los = hyp::law_of_sines_check(200, seed);
  Report r;
  r.data = {{"schema", kSchema},          {"command", "volume angle"},  {"seed", seed},
            {"threshold", threshold},     {"samples", res.samples},     {"attempts", res.attempts},
            {"fitted_c", res.fitted_c},   {"min_ratio", res.min_ratio}, {"max_beta", res.max_beta},
            {"max_deficit", res.max_deficit}, {"violations", res.violations.size()},
            {"law_of_sines_residual", los}};
  r.text << "samples: " << res.samples << " of " << res.attempts << " attempts (vol >= " << fmt(threshold) << ")\n";
  r.text << "fitted C: " << fmt(res.fitted_c) << "\n";
  r.text << "max face angle: " << fmt(res.max_beta) << ", max deficit: " << fmt(res.max_deficit) << "\n";
  r.text << "violations: " << res.violations.size() << "\n";
  r.text << "law of sines max residual: " << fmt(los, 3) << "\n";
  return r;
}

}  // namespace

fs::path corpus_dir() {
  if (const char* env = std::getenv("SLOPESMITH_CORPUS"); env != nullptr && *env != '\0') return fs::path(env);
  return fs::path(SLOPESMITH_DEFAULT_CORPUS);
}

fs::path resolve_poly(const std::string& name) {
  if (fs::is_regular_file(name)) return fs::path(name);
  const fs::path candidate = corpus_dir() / (name + ".poly");
  if (fs::is_regular_file(candidate)) return candidate;
  throw std::runtime_error("no polynomial file or corpus entry named '" + name + "'");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"slopesmith: boundary slopes, obstructions and hyperbolic volumes", "slopesmith"};
  app.require_subcommand(1);
  std::string out_path;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  app.add_option("--out", out_path, "Write the text report here and a .json report beside it");
  app.add_option("--tol", tol, "Numerical tolerance");
  app.add_option("--seed", seed, "Seed for sampled checks");

  auto* analyze_cmd = app.add_subcommand("analyze", "Newton polygon, slopes, norm ball and symmetries");
  std::string poly_arg;
  std::string vars_arg;
  analyze_cmd->add_option("--poly", poly_arg, "Polynomial file or corpus name")->required();
  analyze_cmd->add_option("--vars", vars_arg, "Variable labels when the file has no header: m,b or m,l");

  auto* obstruct_cmd = app.add_subcommand("obstruct", "Run an obstruction pipeline");
  obstruct_cmd->require_subcommand(1);
  auto* cyclic_cmd = obstruct_cmd->add_subcommand("cyclic", "Cyclic-surgery pipeline for a rational C");
  std::string c_arg;
  int bound = 120;
  cyclic_cmd->add_option("--c", c_arg, "Rational constant C")->required();
  cyclic_cmd->add_option("--bound", bound, "Largest root-of-unity order tested");
  auto* diameter_cmd = obstruct_cmd->add_subcommand("diameter", "Diameter-2 pipeline for slopes -p/q, 2-p/q");
  std::int64_t p = 0;
  std::int64_t q = 0;
  diameter_cmd->add_option("--p", p)->required();
  diameter_cmd->add_option("--q", q)->required();

  auto* volume_cmd = app.add_subcommand("volume", "Hyperbolic volume computations");
  volume_cmd->require_subcommand(1);
  auto* lob_cmd = volume_cmd->add_subcommand("lobachevsky", "Evaluate the Lobachevsky function");
  std::string theta_arg;
  lob_cmd->add_option("--theta", theta_arg, "Angle, e.g. 0.5 or pi/3")->required();
  auto* tet_cmd = volume_cmd->add_subcommand("tet", "Klein-model volume of a regular tetrahedron");
  bool ideal = false;
  double side = 0;
  auto* ideal_flag = tet_cmd->add_flag("--ideal-regular", ideal, "Regular ideal tetrahedron");
  auto* side_opt = tet_cmd->add_option("--side", side, "Edge length of a finite regular tetrahedron");
  ideal_flag->excludes(side_opt);
  auto* decay_cmd = volume_cmd->add_subcommand("decay", "Volume deficit of regular tetrahedra");
  double from = 4;
  double to = 10;
  double step = 2;
  decay_cmd->add_option("--from", from);
  decay_cmd->add_option("--to", to);
  decay_cmd->add_option("--step", step);
  auto* eta_cmd = volume_cmd->add_subcommand("eta", "Integrate the volume form along curve paths");
  std::string eta_poly = "fig8-knot";
  std::string loop = "small";
  double cre = 1.5;
  double cim = 0.5;
  double radius = 0.1;
  double path_step = 1e-4;
  eta_cmd->add_option("--poly", eta_poly, "Polynomial file or corpus name");
  eta_cmd->add_option("--loop", loop, "small (closed circle) or homotopic (two paths)");
  eta_cmd->add_option("--center-re", cre);
  eta_cmd->add_option("--center-im", cim);
  eta_cmd->add_option("--radius", radius);
  eta_cmd->add_option("--step", path_step, "Continuation step");
  auto* angle_cmd = volume_cmd->add_subcommand("angle", "Fit the face-angle constant on sampled tetrahedra");
  std::size_t samples = 500;
  double threshold = hyp::kV3 - 0.05;
  angle_cmd->add_option("--samples", samples);
  angle_cmd->add_option("--threshold", threshold, "Minimum volume of a sample");

  for (auto* sub : {analyze_cmd, obstruct_cmd, volume_cmd, cyclic_cmd, diameter_cmd, lob_cmd, tet_cmd, decay_cmd,
                    eta_cmd, angle_cmd}) {
    sub->fallthrough();
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    int code = 0;
    Report r;
    if (*analyze_cmd) {
      r = analyze(poly_arg, vars_arg);
    } else if (*cyclic_cmd) {
      r = obstruct(obstruction::cyclic_verdict(Rational::parse(c_arg), bound), code);
    } else if (*diameter_cmd) {
      r = obstruct(obstruction::diameter_verdict(p, q), code);
    } else if (*lob_cmd) {
      r = volume_lobachevsky(theta_arg);
    } else if (*tet_cmd) {
      if (!ideal && !*side_opt) throw DomainError("volume tet needs --ideal-regular or --side");
      r = volume_tet(ideal, side, tol);
    } else if (*decay_cmd) {
      r = volume_decay(from, to, step, std::min(tol, 1e-10));
    } else if (*eta_cmd) {
      r = volume_eta(eta_poly, loop, {cre, cim}, radius, path_step);
    } else if (*angle_cmd) {
      r = volume_angle(samples, seed, threshold, std::min(tol, 1e-9));
    }
    emit(r, out_path, out);
    return code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.message() << " at position " << e.position() << "\n";
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << " (achieved " << e.achieved() << ")\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace slopesmith::cli
