#include "sphervol/spherical_trig.hpp"

#include <cmath>
#include <numbers>

#include "sphervol/numeric.hpp"

namespace sphervol {

namespace {

constexpr double kPi = std::numbers::pi;

void require_side(double s, const char* name, const char* ctx) {
  if (!(s > 0.0 && s < kPi))
    throw DomainError(std::string(ctx) + ": side " + name +
                      " outside (0, pi)");
}

}  // namespace

double angle_from_sides(double opposite, double b, double c) {
  require_side(opposite, "opposite", "angle_from_sides");
  require_side(b, "b", "angle_from_sides");
  require_side(c, "c", "angle_from_sides");
  const double arg =
      (std::cos(opposite) - std::cos(b) * std::cos(c)) /
      (std::sin(b) * std::sin(c));
  return checked_acos(arg, "angle_from_sides");
}

double regular_triangle_face_angle(double a) {
  if (!(a > 0.0 && a < 2.0 * kPi / 3.0))
    throw DomainError("regular_triangle_face_angle: a outside (0, 2pi/3)");
  const double ca = std::cos(a);
  return checked_acos(ca / (1.0 + ca), "regular_triangle_face_angle");
}

double triangle_vertex_figure_angle(double alpha) {
  const double cal = std::cos(alpha);
  return checked_acos(cal / (1.0 + cal), "triangle_vertex_figure_angle");
}

double square_vertex_figure_angle(double alpha) {
  const double cal = std::cos(alpha);
  if (cal < -kClampTol)
    throw DomainError(
        "square_vertex_figure_angle: cos(alpha) < 0, no spherical square "
        "vertex figure");
  return checked_acos((cal - 1.0) / (cal + 1.0), "square_vertex_figure_angle");
}

HalfAnglePair regular_ngon_half_angle(int n, double a) {
  if (n < 2) throw DomainError("regular_ngon_half_angle: n < 2");
  const double ca = std::cos(a);
  const double c2 = std::cos(2.0 * kPi / n);
  if (ca - c2 < -kClampTol)
    throw DomainError("regular_ngon_half_angle: cos a < cos 2pi/n");
  HalfAnglePair p;
  p.cos_half = checked_sqrt((ca - c2) / (ca + 1.0), "regular_ngon_half_angle");
  p.sin_half = checked_sqrt((c2 + 1.0) / (ca + 1.0), "regular_ngon_half_angle");
  return p;
}

IsoscelesTriangleAngles isosceles_triangle_angles(double a, double c) {
  require_side(a, "a", "isosceles_triangle_angles");
  require_side(c, "c", "isosceles_triangle_angles");
  const double ca = std::cos(a);
  const double cc = std::cos(c);
  const double sc = std::sin(c);
  const double apex_rad = 1.0 + ca - 2.0 * cc * cc;  // = cos a - cos 2c
  if (apex_rad <= kClampTol)
    throw DomainError(
        "isosceles_triangle_angles: degenerate triangle, cos a <= cos 2c");
  IsoscelesTriangleAngles r;
  r.cos_y = clamped_unit(cc / sc * std::tan(a / 2.0),
                         "isosceles_triangle_angles cos y");
  r.sin_y = checked_sqrt(1.0 - r.cos_y * r.cos_y, "isosceles_triangle_angles");
  const double sqrt2 = std::sqrt(2.0);
  r.sin_half_z = std::sqrt(1.0 - ca) / (sqrt2 * sc);
  r.cos_half_z = std::sqrt(apex_rad) / (sqrt2 * sc);
  return r;
}

namespace {

// cos of the trapezoid angle at the base whose half angle is (s_near, c_near);
// the opposite base supplies s_far. Shared by both angles so that swapping
// the bases swaps the results exactly.
double base_angle(double s_near, double c_near, double s_far, double cos_y,
                  double sin_y) {
  if (c_near == 0.0)
    throw DomainError("trapezoid_angles: base of length pi");
  if (sin_y == 0.0)
    throw DomainError("trapezoid_angles: sin y = 0");
  return checked_acos((cos_y * s_near - s_far) / (sin_y * c_near),
                      "trapezoid_angles");
}

}  // namespace

TrapezoidAngles trapezoid_angles(const TrapezoidShape& shape) {
  require_side(shape.x, "x", "trapezoid_angles");
  require_side(shape.y, "y", "trapezoid_angles");
  require_side(shape.z, "z", "trapezoid_angles");
  const double sx = std::sin(shape.x / 2.0), cx = std::cos(shape.x / 2.0);
  const double sz = std::sin(shape.z / 2.0), cz = std::cos(shape.z / 2.0);
  const double cy = std::cos(shape.y), sy = std::sin(shape.y);
  TrapezoidAngles out;
  out.at_x = base_angle(sx, cx, sz, cy, sy);
  out.at_z = base_angle(sz, cz, sx, cy, sy);
  return out;
}

}  // namespace sphervol
