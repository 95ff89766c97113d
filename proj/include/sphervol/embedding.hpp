#pragma once

// Coordinate realization of the antiprism on the unit 3-sphere in 4-space,
// with the symmetry axis in the last two coordinates. Serves as independent
// ground truth for the closed-form relations: edge lengths, dihedral angles
// and the vertex figure are measured from coordinates, and the volume is
// estimated by Monte-Carlo sampling of the convex cone.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "sphervol/antiprism.hpp"
#include "sphervol/volume.hpp"

namespace sphervol {

struct Vec4 {
  std::array<double, 4> v{};

  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }
  double dot(const Vec4& o) const {
    return v[0] * o.v[0] + v[1] * o.v[1] + v[2] * o.v[2] + v[3] * o.v[3];
  }
  double norm() const;
  Vec4 normalized() const;
  Vec4 operator+(const Vec4& o) const;
  Vec4 operator-(const Vec4& o) const;
  Vec4 operator*(double s) const;
};

// The 4-vector orthogonal to a, b, c (generalized cross product).
Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c);

struct Face {
  std::vector<int> cycle;  // vertex indices, consecutive pairs are edges
  Vec4 normal{};           // inward unit normal, set by face_halfspaces
};

struct EmbeddedPolytope {
  int n = 0;
  double a = 0.0;
  double c = 0.0;
  // Top ring first (indices 0..n-1), then bottom ring (n..2n-1).
  std::vector<Vec4> vertices;
  std::vector<Face> faces;
  bool normals_ready = false;
};

struct McConfig {
  long long samples = 1'000'000;
  std::uint64_t seed = 0;
};

// Sides and angles of the vertex link, measured from edge tangents. Angles
// are NaN where the adjacent link side degenerates (n = 2, x = 0).
struct VertexFigure {
  double x;          // side between the two polygon-edge tangents
  double y;          // lateral link side (first copy)
  double y2;         // lateral link side (second copy, isosceles check)
  double z;          // side between the two lateral-edge tangents
  double angle_at_x; // link interior angle at an endpoint of x
  double angle_at_z; // link interior angle at an endpoint of z
};

// Vertices on the cylinder through the two face circles plus the face
// incidence structure. For n = 2 the degenerate 2-gon faces are dropped and
// the solid is the tetrahedron of the 4 lateral faces.
EmbeddedPolytope embed(const AntiprismSpec& spec);

// Computes inward unit normals for every face and verifies that all
// vertices satisfy every half space within 1e-12.
void face_halfspaces(EmbeddedPolytope& poly);

// Dihedral angles measured as pi minus the angle between inward normals of
// the two faces at a representative a-edge and c-edge. All symmetric copies
// are checked to agree within 1e-12.
DihedralAngles measured_dihedrals(const EmbeddedPolytope& poly);

VertexFigure vertex_figure_trapezoid(const EmbeddedPolytope& poly);

// Hit-or-miss volume of the intersection of the half spaces, sampling
// uniformly on S^3 with a counter-based generator: the draw for sample i
// depends only on (seed, i), so results are bit-identical no matter how the
// work is sharded.
VolumeEstimate monte_carlo_volume(std::span<const Vec4> inward_normals,
                                  const McConfig& cfg);
VolumeEstimate monte_carlo_volume(const EmbeddedPolytope& poly,
                                  const McConfig& cfg);

}  // namespace sphervol
