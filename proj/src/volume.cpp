#include "sphervol/volume.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "sphervol/numeric.hpp"

namespace sphervol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTotalVolume = 2.0 * kPi * kPi;

using gk = boost::math::quadrature::gauss_kronrod<double, 31>;

struct GkResult {
  double value;
  double error;
  long evaluations;
};

template <class F>
GkResult gk_integrate(F&& f, double lo, double hi, const QuadratureConfig& cfg,
                      const char* ctx) {
  long evals = 0;
  auto counted = [&](double t) {
    ++evals;
    return f(t);
  };
  double error = 0.0;
  const double value = gk::integrate(counted, lo, hi,
                                     static_cast<unsigned>(cfg.max_subdivisions),
                                     cfg.rel_tol, &error);
  // The estimate is conservative; reject only clearly failed integrals.
  if (!(error <= 1e-6 * std::max(1.0, std::abs(value))))
    throw ConvergenceError(std::string(ctx) +
                           ": quadrature error estimate " +
                           std::to_string(error) + " above tolerance");
  return {value, error, evals};
}

template <class F>
GkResult ts_integrate(F&& f, double lo, double hi, const QuadratureConfig& cfg,
                      const char* ctx) {
  long evals = 0;
  auto counted = [&](double t) {
    ++evals;
    return f(t);
  };
  boost::math::quadrature::tanh_sinh<double> integrator(
      static_cast<std::size_t>(cfg.max_subdivisions));
  double error = 0.0, l1 = 0.0;
  const double value =
      integrator.integrate(counted, lo, hi,
                           std::max(cfg.rel_tol, 1e-12), &error, &l1);
  // tanh_sinh reports a relative error estimate.
  const double abs_err = error * std::max(l1, std::abs(value));
  if (!(abs_err <= 1e-6 * std::max(1.0, std::abs(value))))
    throw ConvergenceError(std::string(ctx) + ": tanh-sinh error estimate " +
                           std::to_string(abs_err) + " above tolerance");
  return {value, abs_err, evals};
}

double integrand_value(int n, double a, double t, bool throw_on_edge) {
  const IntegrandTerms terms = antiprism_integrand(n, a, t);
  if (throw_on_edge && !std::isfinite(terms.value))
    throw DomainError("antiprism integrand: radicand vanishes at interior "
                      "evaluation point");
  return terms.value;
}

// Complex-step machinery for the derivative of the dihedral angles in a.
// The formulas are analytic in a on the interior, so Im f(a + ih)/h gives
// the derivative to machine precision.
using cplx = std::complex<double>;

struct AngleDerivs {
  double dA_da;
  double dC_da;
};

AngleDerivs angle_derivs_in_a(int n, double a, double c) {
  const double h = 1e-100;
  const cplx ca = std::cos(cplx(a, h));
  const double cc = std::cos(c);
  const double p = std::cos(kPi / n);
  const double c2 = std::cos(2.0 * kPi / n);
  const cplx lat = 1.0 + ca - 2.0 * cc * cc;
  const cplx cosA = std::sqrt(1.0 - ca) * (2.0 * cc * p - ca - 1.0) /
                    std::sqrt(2.0 * lat * (ca - c2));
  const cplx cosC = (cc - ca * cc + 2.0 * (cc * cc - 1.0) * p) / lat;
  const cplx A = std::acos(cosA);
  const cplx C = std::acos(cosC);
  return {A.imag() / h, C.imag() / h};
}

// dV/da = n a dA/da + n c dC/da (the volume differential restricted to a).
double volume_derivative_in_a(int n, double a, double c) {
  const AngleDerivs d = angle_derivs_in_a(n, a, c);
  return n * a * d.dA_da + n * c * d.dC_da;
}

void require_tetra_edge(double a) {
  const double a_max = std::acos(-1.0 / 3.0);
  if (!(a >= 0.0 && a <= a_max + 1e-15))
    throw DomainError("tetra_volume_by_edge: a outside [0, arccos(-1/3)]");
}

}  // namespace

IntegrandTerms antiprism_integrand(int n, double a, double t) {
  if (n < 2) throw DomainError("antiprism_integrand: n < 2");
  const double p = std::cos(kPi / n);
  const double ca = std::cos(a);
  const double ct = std::cos(t);
  const double st = std::sin(t);
  IntegrandTerms terms;
  terms.t = t;
  terms.g = -2.0 * (ct - p) * std::sin(a) * st;
  terms.h_term = (1.0 - ca) * (1.0 + ca + 2.0 * ct * ct - 4.0 * ct * p);
  terms.radicand = (1.0 + ca) * (1.0 + ca) -
                   4.0 * (ct * ct + st * st * p * p - (1.0 - ca) * ct * p);
  terms.denom = 1.0 + ca - 2.0 * ct * ct;
  if (terms.radicand < -kClampTol)
    throw DomainError("antiprism_integrand: negative radicand " +
                      std::to_string(terms.radicand));
  if (terms.denom <= 0.0)
    throw DomainError("antiprism_integrand: nonpositive denominator");
  const double rad = std::max(terms.radicand, 0.0);
  if (rad == 0.0) {
    terms.value = std::numeric_limits<double>::infinity();
  } else {
    terms.value = n * (a * terms.g + t * terms.h_term) /
                  (terms.denom * std::sqrt(rad));
  }
  return terms;
}

VolumeEstimate antiprism_volume(const AntiprismSpec& spec,
                                const QuadratureConfig& cfg) {
  const ExistenceMargins m = existence_margins(spec);
  if (m.min() < -kClampTol)
    throw DomainError("antiprism_volume: spec outside the existence region "
                      "(margins " + std::to_string(m.m1) + ", " +
                      std::to_string(m.m2) + ", " + std::to_string(m.m3) + ")");
  VolumeEstimate est;
  est.method = VolumeMethod::quadrature;
  if (m.min() <= kClampTol) return est;  // degenerate: V = 0 on the boundary

  const double c0 = c_lower_bound(spec.n, spec.a);
  const double s_max = std::sqrt(spec.c - c0);
  const double p = std::cos(kPi / spec.n);
  const double ca = std::cos(spec.a);
  // Exact value of cos c0 without the acos/cos round trip.
  const double u0 = (1.0 + ca + 2.0 * p) / (2.0 * (1.0 + p));
  // t = c0 + s^2 removes the 1/sqrt(R) endpoint singularity. The radicand is
  // evaluated in the factored form R = 4 (cos c0 - cos t) B(t) with
  // cos c0 - cos t = 2 sin(c0 + s^2/2) sin(s^2/2), which is free of the
  // cancellation the direct formula suffers near t = c0.
  auto f = [&](double s) {
    const double t = c0 + s * s;
    const double ct = std::cos(t);
    const double b = (1.0 - p * p) * (u0 + ct) - (1.0 - ca) * p;
    const double denom = 1.0 + ca - 2.0 * ct * ct;
    if (b <= 0.0 || denom <= 0.0)
      throw DomainError("antiprism_volume: integrand degenerates at an "
                        "interior evaluation point");
    const double g = -2.0 * (ct - p) * std::sin(spec.a) * std::sin(t);
    const double h = (1.0 - ca) * (1.0 + ca + 2.0 * ct * ct - 4.0 * ct * p);
    const double num = spec.n * (spec.a * g + t * h);
    if (s * s < 1e-20)  // s -> 0 limit of 2 s / sqrt(R)
      return num / (denom * std::sqrt(std::sin(c0) * b));
    const double rad =
        8.0 * std::sin(c0 + 0.5 * s * s) * std::sin(0.5 * s * s) * b;
    return 2.0 * s * num / (denom * std::sqrt(rad));
  };
  const GkResult r = gk_integrate(f, 0.0, s_max, cfg, "antiprism_volume");
  est.value = r.value;
  est.error_bound = r.error;
  est.evaluations = r.evaluations;
  if (est.value > kTotalVolume * (1.0 + 1e-9))
    throw InconsistencyError("antiprism_volume: value exceeds vol(S^3)");
  return est;
}

VolumeEstimate antiprism_volume_alt_path(const AntiprismSpec& spec,
                                         const QuadratureConfig& cfg) {
  const ExistenceMargins m = existence_margins(spec);
  if (m.min() <= kClampTol)
    throw DomainError("antiprism_volume_alt_path: interior specs only");
  const double p = std::cos(kPi / spec.n);
  const double c0 = c_lower_bound(spec.n, spec.a);
  // Intermediate height below pi/n, so the a-leg meets the flat boundary
  // before the polygon reaches a great circle.
  const double c_mid = 0.5 * (c0 + kPi / spec.n);
  const double a_up = checked_acos(
      2.0 * (1.0 + p) * std::cos(c_mid) - 1.0 - 2.0 * p,
      "antiprism_volume_alt_path");
  // Leg 1: in a at fixed c_mid, from the boundary point a_up (V = 0) down to
  // spec.a, with the same s^2 endpoint substitution.
  const double s_max = std::sqrt(a_up - spec.a);
  auto leg1_f = [&](double s) {
    const double alpha = a_up - std::max(s * s, 1e-24);
    return -2.0 * s * volume_derivative_in_a(spec.n, alpha, c_mid);
  };
  const GkResult leg1 =
      gk_integrate(leg1_f, 0.0, s_max, cfg, "antiprism_volume_alt_path leg1");
  // Leg 2: in c at fixed a, interior everywhere (c_mid > c0).
  auto leg2_f = [&](double t) {
    return integrand_value(spec.n, spec.a, t, true);
  };
  const GkResult leg2 = gk_integrate(leg2_f, c_mid, spec.c, cfg,
                                     "antiprism_volume_alt_path leg2");
  VolumeEstimate est;
  est.value = leg1.value + leg2.value;
  est.error_bound = leg1.error + leg2.error;
  est.method = VolumeMethod::quadrature;
  est.evaluations = leg1.evaluations + leg2.evaluations;
  return est;
}

VolumeEstimate tetra_volume_by_angle(double A, const QuadratureConfig& cfg) {
  const double A_min = std::acos(1.0 / 3.0);
  if (!(A >= A_min - 1e-7 && A < 2.0 * kPi / 3.0))
    throw DomainError("tetra_volume_by_angle: A outside [arccos(1/3), 2pi/3)");
  VolumeEstimate est;
  if (A <= A_min) return est;
  auto f = [](double phi) {
    const double cp = std::cos(phi);
    return std::acos(std::clamp(cp / (1.0 - 2.0 * cp), -1.0, 1.0));
  };
  const GkResult r = ts_integrate(f, A_min, A, cfg, "tetra_volume_by_angle");
  est.value = 3.0 * r.value;
  est.error_bound = 3.0 * r.error;
  est.evaluations = r.evaluations;
  return est;
}

VolumeEstimate tetra_volume_by_edge(double a, const QuadratureConfig& cfg) {
  require_tetra_edge(a);
  VolumeEstimate est;
  if (a == 0.0) return est;
  auto f = [](double t) {
    const double ct = std::cos(t);
    return 3.0 * t * std::sin(t) /
           ((1.0 + 2.0 * ct) *
            std::sqrt(std::max((1.0 + ct) * (1.0 + 3.0 * ct), 0.0)));
  };
  const GkResult r = ts_integrate(f, 0.0, a, cfg, "tetra_volume_by_edge");
  est.value = r.value;
  est.error_bound = r.error;
  est.evaluations = r.evaluations;
  return est;
}

VolumeEstimate octa_volume_by_angle(double A, const QuadratureConfig& cfg) {
  const double A_min = std::acos(-1.0 / 3.0);
  if (!(A >= A_min - 1e-7 && A <= kPi + kClampTol))
    throw DomainError("octa_volume_by_angle: A outside [arccos(-1/3), pi]");
  VolumeEstimate est;
  if (A <= A_min) return est;
  auto f = [](double phi) {
    const double cp = std::cos(phi);
    return std::acos(std::clamp(-(cp + 1.0) / (2.0 * cp), -1.0, 1.0));
  };
  const GkResult r = ts_integrate(f, A_min, std::min(A, kPi), cfg,
                                  "octa_volume_by_angle");
  est.value = 6.0 * r.value;
  est.error_bound = 6.0 * r.error;
  est.evaluations = r.evaluations;
  return est;
}

VolumeEstimate octa_volume_by_edge(double a, const QuadratureConfig& cfg) {
  if (!(a >= 0.0 && a <= kPi / 2.0 + kClampTol))
    throw DomainError("octa_volume_by_edge: a outside [0, pi/2]");
  VolumeEstimate est;
  if (a == 0.0) return est;
  auto f = [](double t) {
    const double ct = std::cos(t);
    return 6.0 * t * std::sin(t) /
           ((1.0 + 2.0 * ct) * std::sqrt(std::max(ct * (1.0 + ct), 0.0)));
  };
  const GkResult r = ts_integrate(f, 0.0, std::min(a, kPi / 2.0), cfg,
                                  "octa_volume_by_edge");
  est.value = r.value;
  est.error_bound = r.error;
  est.evaluations = r.evaluations;
  return est;
}

double schlafli_residual(const AntiprismSpec& spec, double step) {
  if (!(step > 0.0)) throw DomainError("schlafli_residual: step <= 0");
  const double strict = 1e-9;
  for (const AntiprismSpec& s :
       {AntiprismSpec{spec.n, spec.a, spec.c + step},
        AntiprismSpec{spec.n, spec.a, spec.c - step},
        AntiprismSpec{spec.n, spec.a + step, spec.c},
        AntiprismSpec{spec.n, spec.a - step, spec.c}}) {
    if (existence_margins(s).min() < strict)
      throw DomainError("schlafli_residual: perturbed spec leaves the "
                        "existence region");
  }
  QuadratureConfig tight;
  tight.rel_tol = 1e-13;
  tight.abs_tol = 1e-15;

  // c direction: dV as a single integral of the volume differential.
  auto fc = [&](double t) {
    return integrand_value(spec.n, spec.a, t, true);
  };
  const double dV_c =
      gk_integrate(fc, spec.c - step, spec.c + step, tight, "schlafli c").value;
  const DihedralAngles cp = dihedral_angles({spec.n, spec.a, spec.c + step});
  const DihedralAngles cm = dihedral_angles({spec.n, spec.a, spec.c - step});
  const double res_c =
      std::abs(dV_c - spec.n * spec.a * (cp.along_a - cm.along_a) -
               spec.n * spec.c * (cp.along_c - cm.along_c)) /
      (2.0 * step);

  // a direction: dV integrated along a path in a at fixed c.
  auto fa = [&](double alpha) {
    return volume_derivative_in_a(spec.n, alpha, spec.c);
  };
  const double dV_a =
      gk_integrate(fa, spec.a - step, spec.a + step, tight, "schlafli a").value;
  const DihedralAngles ap = dihedral_angles({spec.n, spec.a + step, spec.c});
  const DihedralAngles am = dihedral_angles({spec.n, spec.a - step, spec.c});
  const double res_a =
      std::abs(dV_a - spec.n * spec.a * (ap.along_a - am.along_a) -
               spec.n * spec.c * (ap.along_c - am.along_c)) /
      (2.0 * step);

  return std::max(res_c, res_a);
}

}  // namespace sphervol
