// Acceptance suite: one check per release criterion, one PASS/FAIL line each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "sphervol/antiprism.hpp"
#include "sphervol/embedding.hpp"
#include "sphervol/numeric.hpp"
#include "sphervol/spherical_trig.hpp"
#include "sphervol/volume.hpp"
#include "trapezoid_oracle.hpp"

using namespace sphervol;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOrthant = kPi * kPi / 8.0;

int failures = 0;

void report(int idx, const std::string& desc, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", idx,
              desc.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

template <class F>
void criterion(int idx, const std::string& desc, F&& f) {
  try {
    auto [pass, detail] = f();
    report(idx, desc, pass, detail);
  } catch (const std::exception& e) {
    report(idx, desc, false, std::string("exception: ") + e.what());
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

AntiprismSpec interior_spec(int n, double fa, double fc) {
  const double a = (2.0 * kPi / n) * fa;
  const double lo = c_lower_bound(n, a);
  const double hi = c_upper_bound(n, a);
  return {n, a, lo + fc * (hi - lo)};
}

double next_unit(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "orthant tetrahedron = pi^2/8", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const double by_edge = tetra_volume_by_edge(kPi / 2).value;
    const double by_angle = tetra_volume_by_angle(kPi / 2).value;
    const double as_antiprism = antiprism_volume({2, kPi / 2, kPi / 2}).value;
    const double worst = std::max({std::abs(by_edge - kOrthant),
                                   std::abs(by_angle - kOrthant),
                                   std::abs(as_antiprism - kOrthant)});
    const double elapsed = seconds_since(t0);
    return std::pair{worst <= 1e-8 && elapsed < 1.0,
                     "max err " + fmt(worst) + ", " + fmt(elapsed) + " s"};
  });

  criterion(2, "octahedron hemisphere limit", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const double at_limit = octa_volume_by_edge(kPi / 2).value;
    const double err_limit = std::abs(at_limit - kPi * kPi);
    // Near the limit the integrand behaves like 6t sin t / sqrt(cos t), so
    // the deficit at a = pi/2 - delta is 6 pi sqrt(delta) to leading order.
    const double delta = 1e-3;
    const double near_limit = octa_volume_by_edge(kPi / 2 - delta).value;
    const double tail = 6.0 * kPi * std::sqrt(delta);
    const double err_near = std::abs(kPi * kPi - near_limit - tail);
    const double elapsed = seconds_since(t0);
    return std::pair{err_limit <= 1e-6 && err_near <= 5e-2 && elapsed < 1.0,
                     "err " + fmt(err_limit) + " / tail err " + fmt(err_near) +
                         ", " + fmt(elapsed) + " s"};
  });

  criterion(3, "family reductions (tetra, octa)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i) {
      const double a = 0.05 + (1.82 - 0.05) * i / 21.0;
      worst = std::max(worst, std::abs(antiprism_volume({2, a, a}).value -
                                       tetra_volume_by_edge(a).value));
    }
    for (int i = 1; i <= 20; ++i) {
      const double a = 0.05 + (kPi / 2 - 0.08 - 0.05) * i / 21.0;
      worst = std::max(worst, std::abs(antiprism_volume({3, a, a}).value -
                                       octa_volume_by_edge(a).value));
    }
    const double elapsed = seconds_since(t0);
    return std::pair{worst <= 1e-6 && elapsed < 10.0,
                     "max |diff| " + fmt(worst) + ", " + fmt(elapsed) + " s"};
  });

  criterion(4, "angle-form vs edge-form volumes", [] {
    double worst = 0.0;
    const double tA0 = std::acos(1.0 / 3.0);
    for (int i = 1; i <= 20; ++i) {
      const double A = tA0 + (2.0 * kPi / 3.0 - 0.02 - tA0) * i / 21.0;
      worst = std::max(
          worst, std::abs(tetra_volume_by_angle(A).value -
                          tetra_volume_by_edge(tetra_edge_from_angle(A)).value));
    }
    const double oA0 = std::acos(-1.0 / 3.0);
    for (int i = 1; i <= 20; ++i) {
      const double A = oA0 + (kPi - 0.02 - oA0) * i / 21.0;
      worst = std::max(
          worst, std::abs(octa_volume_by_angle(A).value -
                          octa_volume_by_edge(octa_edge_from_angle(A)).value));
    }
    return std::pair{worst <= 2e-10, "max |diff| " + fmt(worst)};
  });

  criterion(5, "dihedral formulas vs measured dihedrals", [] {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
      for (int ia = 0; ia < 10; ++ia) {
        for (int ic = 0; ic < 10; ++ic) {
          const AntiprismSpec spec =
              interior_spec(n, (ia + 0.5) / 10.0, (ic + 0.5) / 10.0);
          const DihedralAngles formula = dihedral_angles(spec);
          EmbeddedPolytope poly = embed(spec);
          face_halfspaces(poly);
          const DihedralAngles measured = measured_dihedrals(poly);
          const double expect_a =
              n == 2 ? 2.0 * formula.along_a - kPi : formula.along_a;
          worst = std::max(worst, std::abs(measured.along_a - expect_a));
          worst = std::max(worst, std::abs(measured.along_c - formula.along_c));
        }
      }
    }
    // n = 2 regular family: 2A - pi reduces to the tetrahedron relation.
    for (int i = 1; i <= 20; ++i) {
      const double a = 0.05 + (1.85 - 0.05) * i / 21.0;
      const double A = dihedral_angles({2, a, a}).along_a;
      worst = std::max(
          worst, std::abs(2.0 * A - kPi -
                          std::acos(std::cos(a) / (1.0 + 2.0 * std::cos(a)))));
    }
    return std::pair{worst <= 1e-9, "max |diff| " + fmt(worst)};
  });

  criterion(6, "center distance formula vs embedding", [] {
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
      for (int ia = 0; ia < 10; ++ia) {
        for (int ic = 0; ic < 10; ++ic) {
          const AntiprismSpec spec =
              interior_spec(n, (ia + 0.5) / 10.0, (ic + 0.5) / 10.0);
          const EmbeddingFrame frame = center_distance(spec);
          const EmbeddedPolytope poly = embed(spec);
          Vec4 top{}, bottom{};
          for (int k = 0; k < n; ++k) {
            top = top + poly.vertices[k];
            bottom = bottom + poly.vertices[n + k];
          }
          const double dot = top.normalized().dot(bottom.normalized());
          worst = std::max(worst,
                           std::abs(std::cos(frame.center_distance) - dot));
        }
      }
    }
    return std::pair{worst <= 1e-12, "max |diff| " + fmt(worst)};
  });

  criterion(7, "Monte-Carlo concordance (1e7 samples)", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<AntiprismSpec> specs = {
        interior_spec(2, 0.3, 0.5), interior_spec(2, 0.6, 0.3),
        interior_spec(2, 0.8, 0.7), interior_spec(3, 0.4, 0.4),
        interior_spec(3, 0.7, 0.6), interior_spec(3, 0.5, 0.8),
        interior_spec(5, 0.5, 0.5), interior_spec(5, 0.7, 0.3),
        interior_spec(8, 0.4, 0.6), interior_spec(8, 0.6, 0.4)};
    double worst_z = 0.0;
    std::uint64_t seed = 1000;
    for (const AntiprismSpec& spec : specs) {
      const double quad = antiprism_volume(spec).value;
      EmbeddedPolytope poly = embed(spec);
      face_halfspaces(poly);
      const VolumeEstimate mc = monte_carlo_volume(poly, {10'000'000, seed++});
      worst_z = std::max(worst_z,
                         std::abs(mc.value - quad) / mc.error_bound);
    }
    const double elapsed = seconds_since(t0);
    return std::pair{worst_z <= 4.0 && elapsed < 60.0,
                     "max z " + fmt(worst_z) + ", " + fmt(elapsed) + " s"};
  });

  criterion(8, "Schlafli residual order", [] {
    const std::vector<AntiprismSpec> specs = {
        {4, 0.6, 0.9}, interior_spec(2, 0.4, 0.3), interior_spec(3, 0.6, 0.4),
        interior_spec(6, 0.5, 0.6), interior_spec(8, 0.4, 0.5)};
    double worst_res = 0.0, worst_lo = 10.0, worst_hi = 0.0;
    for (const AntiprismSpec& spec : specs) {
      const double r1 = schlafli_residual(spec, 1e-4);
      const double r2 = schlafli_residual(spec, 5e-5);
      worst_res = std::max(worst_res, r1);
      worst_lo = std::min(worst_lo, r1 / r2);
      worst_hi = std::max(worst_hi, r1 / r2);
    }
    return std::pair{worst_res <= 1e-7 && worst_lo >= 3.5 && worst_hi <= 4.5,
                     "max res " + fmt(worst_res) + ", ratios [" +
                         fmt(worst_lo) + ", " + fmt(worst_hi) + "]"};
  });

  criterion(9, "volume vanishes at the flat boundary", [] {
    bool pass = true;
    double worst_near = 0.0;
    for (int n : {2, 4, 6}) {
      const double a = 0.5 * 2.0 * kPi / n;
      const double c0 = c_lower_bound(n, a);
      pass = pass && antiprism_volume({n, a, c0}).value == 0.0;
      const double near = antiprism_volume({n, a, c0 + 1e-6}).value;
      worst_near = std::max(worst_near, near);
      pass = pass && near <= 1e-2;
      double prev = near;
      for (double dc : {1e-7, 1e-8, 1e-9}) {
        const double v = antiprism_volume({n, a, c0 + dc}).value;
        pass = pass && v < prev && v >= 0.0;
        prev = v;
      }
    }
    return std::pair{pass, "V(c0)=0 exact, V(c0+1e-6) max " + fmt(worst_near)};
  });

  criterion(10, "trapezoid relations vs 2-sphere construction", [] {
    std::uint64_t state = 42;
    int accepted = 0;
    double worst = 0.0;
    while (accepted < 1000) {
      const double x = 0.05 + 2.8 * next_unit(state);
      const double y = 0.05 + 2.8 * next_unit(state);
      const double z = 0.05 + 2.8 * next_unit(state);
      const auto built = sphervol_test::build_trapezoid(x, y, z);
      if (!built) continue;
      TrapezoidAngles formula;
      try {
        formula = trapezoid_angles({x, y, z});
      } catch (const DomainError&) {
        continue;
      }
      const auto measured = sphervol_test::measure_angles(*built);
      worst = std::max({worst, std::abs(formula.at_x - measured.at_x),
                        std::abs(formula.at_z - measured.at_z)});
      ++accepted;
    }
    return std::pair{worst <= 1e-10, "max |diff| " + fmt(worst)};
  });

  criterion(11, "degeneration limits of the dihedral angles", [] {
    const double tetra = std::abs(tetra_angle_from_edge(1e-9) -
                                  std::acos(1.0 / 3.0));
    const double octa = std::abs(octa_angle_from_edge(1e-9) -
                                 std::acos(-1.0 / 3.0));
    return std::pair{tetra <= 1e-8 && octa <= 1e-8,
                     "errs " + fmt(tetra) + " / " + fmt(octa)};
  });

  criterion(12, "Euclidean octahedron limit", [] {
    const double eps = 1e-2;
    const double scaled = antiprism_volume({3, eps, eps}).value /
                          (eps * eps * eps);
    const double rel = std::abs(scaled - std::sqrt(2.0) / 3.0) /
                       (std::sqrt(2.0) / 3.0);
    return std::pair{rel <= 1e-2, "rel err " + fmt(rel)};
  });

  criterion(13, "verify output is byte-identical", [] {
    const std::string cli = SPHERVOL_CLI_PATH;
    const std::string args =
        " verify --n 4 --a 0.6 --c 0.9 --samples 200000 --seed 11";
    const std::string outs[3] = {"/tmp/sphervol_verify_1.txt",
                                 "/tmp/sphervol_verify_2.txt",
                                 "/tmp/sphervol_verify_3.txt"};
    const std::string cmds[3] = {
        "SPHERVOL_THREADS=1 '" + cli + "'" + args + " > " + outs[0] + " 2>&1",
        "SPHERVOL_THREADS=1 '" + cli + "'" + args + " > " + outs[1] + " 2>&1",
        "SPHERVOL_THREADS=4 '" + cli + "'" + args + " > " + outs[2] + " 2>&1"};
    for (const std::string& cmd : cmds) {
      if (std::system(cmd.c_str()) != 0)
        return std::pair{false, std::string("verify exited nonzero")};
    }
    const std::string r0 = slurp(outs[0]);
    const bool pass = !r0.empty() && r0 == slurp(outs[1]) &&
                      r0 == slurp(outs[2]);
    return std::pair{pass, pass ? std::string("3 identical runs")
                                : std::string("outputs differ")};
  });

  if (failures == 0) std::printf("all criteria passed\n");
  return failures == 0 ? 0 : 1;
}
