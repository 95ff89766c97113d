#pragma once

#include "sphervol/antiprism.hpp"

namespace sphervol {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdivisions = 15;
};

enum class VolumeMethod { quadrature, monte_carlo };

// A volume in S^3 units; the whole space has volume 2 pi^2.
struct VolumeEstimate {
  double value = 0.0;
  double error_bound = 0.0;
  VolumeMethod method = VolumeMethod::quadrature;
  long evaluations = 0;
};

// Terms of the antiprism volume integrand at integration variable t.
// value = n (a G + t H) / ((1 + cos a - 2 cos^2 t) sqrt(R)); it is set to
// +inf where the radicand vanishes (integral endpoint).
struct IntegrandTerms {
  double g;         // G = -2 (cos t - cos pi/n) sin a sin t
  double h_term;    // H = (1 - cos a)(1 + cos a + 2 cos^2 t - 4 cos t cos pi/n)
  double radicand;  // R, vanishes at t = c0 and at the far existence boundary
  double denom;     // 1 + cos a - 2 cos^2 t
  double t;
  double value;
};

IntegrandTerms antiprism_integrand(int n, double a, double t);

// Volume of the antiprism by integrating the volume differential along the
// lateral-edge direction from the flat configuration c0 up to c. The 1/sqrt
// endpoint singularity at c0 is removed by the substitution t = c0 + s^2.
// Specs on the region boundary (within 1e-12) return exactly 0.
VolumeEstimate antiprism_volume(const AntiprismSpec& spec,
                                const QuadratureConfig& cfg = {});

// Same volume along a different path: first in a at fixed intermediate c
// (starting from the boundary), then in c. Exposes the path independence of
// the volume differential; used for cross-checks.
VolumeEstimate antiprism_volume_alt_path(const AntiprismSpec& spec,
                                         const QuadratureConfig& cfg = {});

// Regular tetrahedron, angle form:
// V = 3 int_{arccos 1/3}^{A} arccos(cos t / (1 - 2 cos t)) dt.
VolumeEstimate tetra_volume_by_angle(double A, const QuadratureConfig& cfg = {});

// Regular tetrahedron, edge form:
// V = int_0^a 3 t sin t dt / ((1 + 2 cos t) sqrt((1 + cos t)(1 + 3 cos t))).
VolumeEstimate tetra_volume_by_edge(double a, const QuadratureConfig& cfg = {});

// Regular octahedron, angle form:
// V = 6 int_{arccos(-1/3)}^{A} arccos(-(cos t + 1)/(2 cos t)) dt.
VolumeEstimate octa_volume_by_angle(double A, const QuadratureConfig& cfg = {});

// Regular octahedron, edge form:
// V = int_0^a 6 t sin t dt / ((1 + 2 cos t) sqrt(cos t (1 + cos t))).
// The a = pi/2 endpoint singularity is integrable.
VolumeEstimate octa_volume_by_edge(double a, const QuadratureConfig& cfg = {});

// Central-difference check of dV = n a dA + n c dC, on the derivative scale:
// max over the c- and a-directions of
//   |dV - n a dA - n c dC| / (2 step),
// which is O(step^2) for interior specs.
double schlafli_residual(const AntiprismSpec& spec, double step);

}  // namespace sphervol
