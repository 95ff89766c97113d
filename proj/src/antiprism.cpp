#include "sphervol/antiprism.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphervol/numeric.hpp"

namespace sphervol {

namespace {

constexpr double kPi = std::numbers::pi;

void require_spec(const AntiprismSpec& spec, const char* ctx) {
  if (spec.n < 2) throw DomainError(std::string(ctx) + ": n < 2");
  if (!(spec.a > 0.0 && spec.a <= kPi))
    throw DomainError(std::string(ctx) + ": a outside (0, pi]");
  if (!(spec.c > 0.0 && spec.c <= kPi))
    throw DomainError(std::string(ctx) + ": c outside (0, pi]");
}

}  // namespace

double ExistenceMargins::min() const { return std::min({m1, m2, m3}); }

ExistenceMargins existence_margins_from_cos(int n, double cos_a, double cos_c) {
  if (n < 2) throw DomainError("existence_margins: n < 2");
  const double p = std::cos(kPi / n);
  const double c2 = std::cos(2.0 * kPi / n);
  ExistenceMargins m;
  m.m1 = 1.0 + cos_a - 2.0 * (1.0 + p) * cos_c + 2.0 * p;
  m.m2 = 1.0 + cos_a + 2.0 * (1.0 - p) * cos_c - 2.0 * p;
  m.m3 = cos_a - c2;
  return m;
}

ExistenceMargins existence_margins(const AntiprismSpec& spec) {
  require_spec(spec, "existence_margins");
  return existence_margins_from_cos(spec.n, std::cos(spec.a), std::cos(spec.c));
}

bool exists(const AntiprismSpec& spec) {
  return existence_margins(spec).min() >= -kClampTol;
}

double circumradius(int n, double a) {
  if (n < 2) throw DomainError("circumradius: n < 2");
  const double ca = std::cos(a);
  const double c2 = std::cos(2.0 * kPi / n);
  if (ca - c2 < -kClampTol)
    throw DomainError("circumradius: cos a < cos 2pi/n");
  const double cr = checked_sqrt((ca - c2) / (1.0 - c2), "circumradius");
  return std::acos(std::min(cr, 1.0));
}

EmbeddingFrame center_distance(const AntiprismSpec& spec) {
  require_spec(spec, "center_distance");
  const double ca = std::cos(spec.a);
  const double cc = std::cos(spec.c);
  const double p = std::cos(kPi / spec.n);
  const double c2 = std::cos(2.0 * kPi / spec.n);
  if (ca - c2 <= kClampTol)
    throw DomainError("center_distance: polygon on a great circle");
  EmbeddingFrame f;
  f.circumradius = circumradius(spec.n, spec.a);
  const double half_a_cos = std::cos(spec.a / 2.0);
  f.vertex_leg = checked_acos(cc / half_a_cos, "center_distance H");
  f.apothem =
      checked_acos(std::cos(f.circumradius) / half_a_cos, "center_distance h");
  const double cos_d =
      (2.0 * cc * (1.0 - p * p) - p * (1.0 - ca)) / (ca - c2);
  if (cos_d > 1.0 + kClampTol || cos_d < -1.0 - kClampTol)
    throw InconsistencyError("center_distance: |cos d| > 1, spec outside the "
                             "existence region");
  f.center_distance = std::acos(std::clamp(cos_d, -1.0, 1.0));
  f.pole_angle = f.center_distance;
  return f;
}

DihedralAngles dihedral_angles(const AntiprismSpec& spec) {
  require_spec(spec, "dihedral_angles");
  const double ca = std::cos(spec.a);
  const double cc = std::cos(spec.c);
  const double p = std::cos(kPi / spec.n);
  const double c2 = std::cos(2.0 * kPi / spec.n);
  const double lat = 1.0 + ca - 2.0 * cc * cc;  // lateral triangle radicand
  if (lat <= kClampTol)
    throw DomainError("dihedral_angles: degenerate lateral triangle");
  if (ca - c2 <= kClampTol)
    throw DomainError("dihedral_angles: polygon on a great circle");
  DihedralAngles out;
  const double num_a = std::sqrt(1.0 - ca) * (2.0 * cc * p - ca - 1.0);
  const double den_a = std::sqrt(2.0 * lat * (ca - c2));
  out.along_a = checked_acos(num_a / den_a, "dihedral_angles A");
  const double num_c = cc - ca * cc + 2.0 * (cc * cc - 1.0) * p;
  out.along_c = checked_acos(num_c / lat, "dihedral_angles C");
  return out;
}

double c_lower_bound(int n, double a) {
  if (n < 2) throw DomainError("c_lower_bound: n < 2");
  const double ca = std::cos(a);
  const double p = std::cos(kPi / n);
  if (ca - std::cos(2.0 * kPi / n) < -kClampTol)
    throw DomainError("c_lower_bound: cos a < cos 2pi/n");
  const double arg = (1.0 + ca + 2.0 * p) / (2.0 * (1.0 + p));
  return checked_acos(arg, "c_lower_bound");
}

double c_upper_bound(int n, double a) {
  if (n < 2) throw DomainError("c_upper_bound: n < 2");
  const double ca = std::cos(a);
  const double p = std::cos(kPi / n);
  const double arg = (2.0 * p - 1.0 - ca) / (2.0 * (1.0 - p));
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

double tetra_angle_from_edge(double a) {
  if (!(a > 0.0 && a < 2.0 * kPi / 3.0))
    throw DomainError("tetra_angle_from_edge: a outside (0, 2pi/3)");
  const double ca = std::cos(a);
  return checked_acos(ca / (1.0 + 2.0 * ca), "tetra_angle_from_edge");
}

double tetra_edge_from_angle(double A) {
  // Near the flat limit the cosine argument crosses 1 at machine speed;
  // accept angles within 1e-7 of the endpoint as the endpoint itself.
  if (std::abs(A - std::acos(1.0 / 3.0)) <= 1e-7) return 0.0;
  const double cA = std::cos(A);
  const double den = 1.0 - 2.0 * cA;
  if (den <= 0.0) throw DomainError("tetra_edge_from_angle: cos A >= 1/2");
  return checked_acos(cA / den, "tetra_edge_from_angle");
}

double octa_angle_from_edge(double a) {
  if (!(a > 0.0 && a <= kPi / 2.0 + kClampTol))
    throw DomainError("octa_angle_from_edge: a outside (0, pi/2]");
  const double ca = std::cos(a);
  return checked_acos(-1.0 / (1.0 + 2.0 * ca), "octa_angle_from_edge");
}

double octa_edge_from_angle(double A) {
  if (std::abs(A - std::acos(-1.0 / 3.0)) <= 1e-7) return 0.0;
  const double cA = std::cos(A);
  if (cA >= 0.0) throw DomainError("octa_edge_from_angle: cos A >= 0");
  return checked_acos(-(cA + 1.0) / (2.0 * cA), "octa_edge_from_angle");
}

}  // namespace sphervol
