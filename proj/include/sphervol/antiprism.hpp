#pragma once

// Parameter model of the spherical antiprism with 2n vertices, two regular
// n-gon faces of edge length a and 2n lateral triangles of lateral edge
// length c. The existence region in the (cos a, cos c) plane is cut out by
// three closed inequalities; angles are defined in its interior.

namespace sphervol {

struct AntiprismSpec {
  int n;     // gonality, >= 2
  double a;  // polygon edge length (radians)
  double c;  // lateral edge length (radians)
};

// Left-hand sides of the three existence inequalities, in order. The spec
// is admissible iff min(m1, m2, m3) >= 0.
struct ExistenceMargins {
  double m1;  // 1 + cos a - 2(1 + cos pi/n) cos c + 2 cos pi/n
  double m2;  // 1 + cos a + 2(1 - cos pi/n) cos c - 2 cos pi/n
  double m3;  // cos a - cos 2pi/n
  double min() const;
};

struct DihedralAngles {
  double along_a;  // dihedral angle along the polygon edges
  double along_c;  // dihedral angle along the lateral edges
};

// Construction quantities of the cylinder frame the antiprism is inscribed
// in. All are radians.
struct EmbeddingFrame {
  double circumradius;     // R: face center to face vertex, in [0, pi/2]
  double vertex_leg;       // H: lateral-face vertex to opposite edge midpoint
  double apothem;          // h: face center to edge midpoint
  double center_distance;  // d: distance between the two face centers
  double pole_angle;       // Psi: angle at the pole, equal to d
};

ExistenceMargins existence_margins(const AntiprismSpec& spec);

// Same margins evaluated directly from cosines (no acos round trips).
ExistenceMargins existence_margins_from_cos(int n, double cos_a, double cos_c);

// Closed-region membership: min margin >= -1e-12.
bool exists(const AntiprismSpec& spec);

// Spherical circumradius of the regular n-gon with side a.
double circumradius(int n, double a);

// All frame quantities including the face-center distance
// cos d = (2 cos c (1 - cos^2 pi/n) - cos pi/n (1 - cos a)) / (cos a - cos 2pi/n).
EmbeddingFrame center_distance(const AntiprismSpec& spec);

// Dihedral angles from the edge lengths (interior of the region only).
DihedralAngles dihedral_angles(const AntiprismSpec& spec);

// Smallest admissible lateral edge for given (n, a): the closed-form root of
// 2 cos c (1 + cos pi/n) = 1 + cos a + 2 cos pi/n. The antiprism flattens
// into a spherical 2n-gon there.
double c_lower_bound(int n, double a);

// Largest admissible lateral edge (second inequality turns to equality),
// clamped to pi where that line exits the square.
double c_upper_bound(int n, double a);

// Regular tetrahedron (n = 2, a = c): edge/angle relations.
double tetra_angle_from_edge(double a);  // cos A = cos a / (1 + 2 cos a)
double tetra_edge_from_angle(double A);  // a = arccos(cos A / (1 - 2 cos A))

// Regular octahedron (n = 3, a = c): edge/angle relations.
double octa_angle_from_edge(double a);  // cos A = -1 / (1 + 2 cos a)
double octa_edge_from_angle(double A);  // a = arccos(-(cos A + 1)/(2 cos A))

}  // namespace sphervol
