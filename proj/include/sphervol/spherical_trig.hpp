#pragma once

// Elementary spherical trigonometry on the unit sphere. All arcs and angles
// are radians, doubles throughout.

namespace sphervol {

// Isosceles spherical trapezoid with bases x, z and lateral sides y.
struct TrapezoidShape {
  double x;  // one base
  double y;  // lateral side
  double z;  // other base
};

struct TrapezoidAngles {
  double at_x;  // angle at the endpoints of base x
  double at_z;  // angle at the endpoints of base z
};

struct HalfAnglePair {
  double cos_half;
  double sin_half;
};

// Angles of the isosceles lateral triangle with sides a, c, c:
// y at the two base vertices, z at the apex.
struct IsoscelesTriangleAngles {
  double cos_y;
  double sin_y;
  double sin_half_z;
  double cos_half_z;
};

// Spherical law of cosines: angle opposite the first side.
double angle_from_sides(double opposite, double b, double c);

// Face angle alpha of a regular spherical triangle with side a:
// cos(alpha) = cos(a) / (1 + cos(a)).
double regular_triangle_face_angle(double a);

// Interior angle of the regular spherical triangle whose sides equal alpha:
// cos(A) = cos(alpha) / (1 + cos(alpha)).
double triangle_vertex_figure_angle(double alpha);

// Interior angle of the regular spherical quadrilateral whose sides equal
// alpha: cos(A) = (cos(alpha) - 1) / (cos(alpha) + 1).
double square_vertex_figure_angle(double alpha);

// Half the interior angle x of a regular spherical n-gon with side a.
// cos(x/2) = sqrt((cos a - cos 2pi/n)/(cos a + 1)),
// sin(x/2) = sqrt((cos 2pi/n + 1)/(cos a + 1)).
HalfAnglePair regular_ngon_half_angle(int n, double a);

// Angles of the isosceles triangle with sides a, c, c.
IsoscelesTriangleAngles isosceles_triangle_angles(double a, double c);

// Angles of an isosceles spherical trapezoid from its sides:
// cos(at_x) = (cos y sin(x/2) - sin(z/2)) / (sin y cos(x/2)) and the
// mirrored expression for at_z.
TrapezoidAngles trapezoid_angles(const TrapezoidShape& shape);

}  // namespace sphervol
