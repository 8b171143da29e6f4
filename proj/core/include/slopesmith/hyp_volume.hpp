#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace slopesmith::hyp {

// Volume of the regular ideal tetrahedron.
inline constexpr double kV3 = 1.01494160640965362502;

// Lobachevsky function, odd and pi-periodic, absolute error <= 1e-12.
double lobachevsky(double theta);

// Ideal tetrahedron with dihedral angles alpha, beta, gamma. Angles must be
// nonnegative with sum pi within 1e-12; zero angles give degenerate limits.
double ideal_tet_volume(double alpha, double beta, double gamma);

using Vec3 = std::array<double, 3>;

// Four points of the closed unit ball in the Klein model.
class KleinTetrahedron {
 public:
  // Throws DomainError for points outside the ball or zero Euclidean volume.
  explicit KleinTetrahedron(const std::array<Vec3, 4>& vertices);

  const std::array<Vec3, 4>& vertices() const { return vertices_; }
  bool is_ideal(int k) const;
  double euclidean_volume() const;

 private:
  std::array<Vec3, 4> vertices_;
};

// Integral of (1 - |x|^2)^-2 over the Euclidean tetrahedron, absolute error
// target tol. Throws NumericalError when the subdivision budget runs out.
double klein_volume(const KleinTetrahedron& t, double tol = 1e-9);

// Hyperbolic distance in the Klein model; infinity when either point is ideal.
double klein_distance(const Vec3& x, const Vec3& y);

// Hyperbolic distance from the origin to the vertices of regular_tet(side).
double regular_tet_radius(double side);
// Regular tetrahedron with all edges of length `side`, centred at the origin.
KleinTetrahedron regular_tet(double side);
KleinTetrahedron regular_ideal_tet();

// Face angle at vertex `at` of the triangle (at, a, b); 0 when `at` is ideal.
double face_angle(const Vec3& at, const Vec3& a, const Vec3& b);
// All twelve face angles, face by face.
std::vector<double> face_angles(const KleinTetrahedron& t);

struct DecayRow {
  double side = 0;
  double radius = 0;      // t, distance from the centre to a vertex
  double volume = 0;
  double epsilon = 0;     // v3 - volume
  double i2_epsilon = 0;
  double ratio = 0;       // epsilon of the next row over this one; NaN on the last row
  double tail_bound = 0;  // 4 pi sinh(d) ln coth(t/2) with d the ideal face-centre distance
};

struct DecayTable {
  std::vector<DecayRow> rows;
  double fitted_rate = 0;  // least-squares slope of log epsilon against side
};

// Throws DomainError unless the sides are positive and strictly increasing.
DecayTable epsilon_decay_report(const std::vector<double>& sides, double tol = 1e-10);
// Tab-separated, one header line.
std::string decay_table_text(const DecayTable& table);

struct FaceAngleResult {
  double fitted_c = 0;
  std::size_t samples = 0;
  std::size_t attempts = 0;
  double min_ratio = 0;  // min (v3 - vol) / beta^2 over samples and angles
  double max_beta = 0;
  double max_deficit = 0;
  std::vector<std::size_t> violations;  // sample indices failing v3 - vol > C beta^2
};

// Samples perturbed large regular tetrahedra with volume >= vol_threshold and
// fits the largest C with v3 - vol > C beta^2 on all of them. Deterministic in
// `seed`. Throws DomainError when no sample qualifies.
FaceAngleResult face_angle_check(std::size_t n_samples, double vol_threshold, std::uint64_t seed, double tol = 1e-10);

// Right triangle (origin, q, w) with the right angle at q: sin(theta) against
// sinh(d) / sinh(t), with d = |qw| and t = |0w|.
struct LawOfSinesSample {
  double theta = 0;
  double d = 0;
  double t = 0;
  double residual = 0;
};
LawOfSinesSample law_of_sines(double foot_distance, double leg);
// Largest residual over n random right triangles.
double law_of_sines_check(std::size_t n, std::uint64_t seed);

}  // namespace slopesmith::hyp
