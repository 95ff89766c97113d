// Command-line front end for the spherical antiprism library. Every command
// is a thin adapter around the library calls; no numerics live here.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphervol/antiprism.hpp"
#include "sphervol/embedding.hpp"
#include "sphervol/numeric.hpp"
#include "sphervol/spherical_trig.hpp"
#include "sphervol/volume.hpp"

namespace {

using nlohmann::ordered_json;
using namespace sphervol;

constexpr double kDeg = 180.0 / std::numbers::pi;

// Exit codes: 0 success, 2 usage, 3 domain/region, 4 convergence or a failed
// verification check.
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitCheck = 4;

std::string format_value(const ordered_json& v) {
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print_record(const ordered_json& rec, bool as_json) {
  if (as_json) {
    std::printf("%s\n", rec.dump(2).c_str());
    return;
  }
  for (const auto& [key, value] : rec.items())
    std::printf("%s=%s\n", key.c_str(), format_value(value).c_str());
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SPHERVOL_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

void echo_spec(ordered_json& rec, const AntiprismSpec& spec) {
  rec["n"] = spec.n;
  rec["a"] = spec.a;
  rec["c"] = spec.c;
}

const char* method_name(VolumeMethod m) {
  return m == VolumeMethod::quadrature ? "quadrature" : "mc";
}

struct Options {
  bool json = false;
  bool degrees = false;
  AntiprismSpec spec{3, 0.0, 0.0};
  double rel_tol = QuadratureConfig{}.rel_tol;
  std::string method = "quadrature";
  long long samples = 1'000'000;
  std::uint64_t seed = default_seed();
  int grid = 50;
  std::string out = "-";
  // tetra/octa
  double edge = -1.0, angle = -1.0;
  std::string by;
  // trapezoid
  TrapezoidShape shape{0.0, 0.0, 0.0};
};

void add_spec_options(CLI::App* cmd, Options& opt) {
  cmd->add_option("--n", opt.spec.n, "gonality")
      ->required()
      ->check(CLI::Range(2, 1000000));
  cmd->add_option("--a", opt.spec.a, "polygon edge length (radians)")
      ->required();
  cmd->add_option("--c", opt.spec.c, "lateral edge length (radians)")
      ->required();
}

int run_exists(const Options& opt) {
  const ExistenceMargins m = existence_margins(opt.spec);
  ordered_json rec;
  echo_spec(rec, opt.spec);
  rec["m1"] = m.m1;
  rec["m2"] = m.m2;
  rec["m3"] = m.m3;
  rec["inside"] = exists(opt.spec);
  print_record(rec, opt.json);
  return 0;
}

int run_angles(const Options& opt) {
  const DihedralAngles d = dihedral_angles(opt.spec);
  ordered_json rec;
  echo_spec(rec, opt.spec);
  rec["A"] = d.along_a;
  rec["C"] = d.along_c;
  if (opt.degrees) {
    rec["A_deg"] = d.along_a * kDeg;
    rec["C_deg"] = d.along_c * kDeg;
  }
  print_record(rec, opt.json);
  return 0;
}

int run_volume(const Options& opt) {
  VolumeEstimate est;
  if (opt.method == "mc") {
    EmbeddedPolytope poly = embed(opt.spec);
    face_halfspaces(poly);
    est = monte_carlo_volume(poly, {opt.samples, opt.seed});
  } else {
    QuadratureConfig cfg;
    cfg.rel_tol = opt.rel_tol;
    est = antiprism_volume(opt.spec, cfg);
  }
  ordered_json rec;
  echo_spec(rec, opt.spec);
  rec["c0"] = c_lower_bound(opt.spec.n, opt.spec.a);
  rec["volume"] = est.value;
  rec["error_bound"] = est.error_bound;
  rec["method"] = method_name(est.method);
  if (est.method == VolumeMethod::monte_carlo) {
    rec["samples"] = opt.samples;
    rec["seed"] = opt.seed;
  }
  print_record(rec, opt.json);
  return 0;
}

int run_platonic(const Options& opt, bool octa) {
  const bool have_edge = opt.edge >= 0.0;
  double a, A;
  if (have_edge) {
    a = opt.edge;
    A = octa ? octa_angle_from_edge(a) : tetra_angle_from_edge(a);
  } else {
    A = opt.angle;
    a = octa ? octa_edge_from_angle(A) : tetra_edge_from_angle(A);
  }
  std::string by = opt.by;
  if (by.empty()) by = have_edge ? "edge" : "angle";

  ordered_json rec;
  rec["a"] = a;
  rec["A"] = A;
  if (by == "edge" || by == "both") {
    const VolumeEstimate est =
        octa ? octa_volume_by_edge(a) : tetra_volume_by_edge(a);
    rec["volume_by_edge"] = est.value;
    rec["error_bound_by_edge"] = est.error_bound;
  }
  if (by == "angle" || by == "both") {
    const VolumeEstimate est =
        octa ? octa_volume_by_angle(A) : tetra_volume_by_angle(A);
    rec["volume_by_angle"] = est.value;
    rec["error_bound_by_angle"] = est.error_bound;
  }
  print_record(rec, opt.json);
  return 0;
}

int run_region(const Options& opt) {
  std::ofstream file;
  if (opt.out != "-") {
    file.open(opt.out);
    if (!file) throw std::runtime_error("cannot open " + opt.out);
  }
  std::ostream& os = opt.out == "-" ? std::cout : file;

  os << "cos_a,cos_c,inside,m1,m2,m3,volume\n";
  char buf[40];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  const int N = opt.grid;
  for (int i = 0; i < N; ++i) {
    const double cos_a = -1.0 + 2.0 * i / (N - 1);
    for (int j = 0; j < N; ++j) {
      const double cos_c = -1.0 + 2.0 * j / (N - 1);
      const ExistenceMargins m =
          existence_margins_from_cos(opt.spec.n, cos_a, cos_c);
      const bool inside = m.min() >= -1e-12;
      os << num(cos_a) << ',' << num(cos_c) << ',' << (inside ? 1 : 0) << ','
         << num(m.m1) << ',' << num(m.m2) << ',' << num(m.m3) << ',';
      if (inside) {
        const double a = std::acos(clamped_unit(cos_a, "cos a"));
        const double c = std::acos(clamped_unit(cos_c, "cos c"));
        // The cos_a = 1 grid line degenerates to a point; volume 0.
        const double v = (a == 0.0 || c == 0.0)
                             ? 0.0
                             : antiprism_volume({opt.spec.n, a, c}).value;
        os << num(v);
      }
      os << '\n';
    }
  }
  if (opt.out != "-") {
    ordered_json rec;
    rec["n"] = opt.spec.n;
    rec["grid"] = N;
    rec["rows"] = N * N;
    rec["out"] = opt.out;
    print_record(rec, opt.json);
  }
  return 0;
}

int run_verify(const Options& opt) {
  const AntiprismSpec& spec = opt.spec;
  const DihedralAngles formula = dihedral_angles(spec);
  EmbeddedPolytope poly = embed(spec);
  face_halfspaces(poly);
  const DihedralAngles measured = measured_dihedrals(poly);
  // For n = 2 the two lateral faces at a polygon edge are coplanar copies;
  // the physical angle there is 2A - pi.
  const double expect_a =
      spec.n == 2 ? 2.0 * formula.along_a - std::numbers::pi : formula.along_a;
  const double angle_diff = std::max(std::abs(measured.along_a - expect_a),
                                     std::abs(measured.along_c - formula.along_c));

  const EmbeddingFrame frame = center_distance(spec);
  Vec4 top{}, bottom{};
  for (int k = 0; k < spec.n; ++k) {
    top = top + poly.vertices[k];
    bottom = bottom + poly.vertices[spec.n + k];
  }
  const double cos_d_diff = std::abs(std::cos(frame.center_distance) -
                                     top.normalized().dot(bottom.normalized()));

  const VolumeEstimate quad = antiprism_volume(spec);
  const VolumeEstimate mc = monte_carlo_volume(poly, {opt.samples, opt.seed});
  const double z = std::abs(mc.value - quad.value) / mc.error_bound;

  const double residual = schlafli_residual(spec, 1e-4);

  const bool ok_angles = angle_diff <= 1e-9;
  const bool ok_cos_d = cos_d_diff <= 1e-12;
  const bool ok_mc = z <= 4.0;
  const bool ok_schlafli = residual <= 1e-7;
  const bool all_ok = ok_angles && ok_cos_d && ok_mc && ok_schlafli;

  ordered_json rec;
  echo_spec(rec, spec);
  rec["samples"] = opt.samples;
  rec["seed"] = opt.seed;
  rec["angle_abs_diff"] = angle_diff;
  rec["angle_check"] = ok_angles;
  rec["cos_d_abs_diff"] = cos_d_diff;
  rec["cos_d_check"] = ok_cos_d;
  rec["volume_quadrature"] = quad.value;
  rec["volume_mc"] = mc.value;
  rec["mc_z_score"] = z;
  rec["mc_check"] = ok_mc;
  rec["schlafli_residual"] = residual;
  rec["schlafli_check"] = ok_schlafli;
  rec["all_checks_passed"] = all_ok;
  print_record(rec, opt.json);
  return all_ok ? 0 : kExitCheck;
}

int run_trapezoid(const Options& opt) {
  const TrapezoidAngles angles = trapezoid_angles(opt.shape);
  ordered_json rec;
  rec["x"] = opt.shape.x;
  rec["y"] = opt.shape.y;
  rec["z"] = opt.shape.z;
  rec["angle_at_x"] = angles.at_x;
  rec["angle_at_z"] = angles.at_z;
  if (opt.degrees) {
    rec["angle_at_x_deg"] = angles.at_x * kDeg;
    rec["angle_at_z_deg"] = angles.at_z * kDeg;
  }
  print_record(rec, opt.json);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical antiprism volumes on S^3"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.json, "emit a single JSON object");

  CLI::App* c_exists = app.add_subcommand("exists", "existence margins");
  add_spec_options(c_exists, opt);

  CLI::App* c_angles = app.add_subcommand("angles", "dihedral angles");
  add_spec_options(c_angles, opt);
  c_angles->add_flag("--degrees", opt.degrees, "also print degrees");

  CLI::App* c_volume = app.add_subcommand("volume", "antiprism volume");
  add_spec_options(c_volume, opt);
  c_volume->add_option("--rel-tol", opt.rel_tol, "quadrature tolerance");
  c_volume->add_option("--method", opt.method, "quadrature|mc")
      ->check(CLI::IsMember({"quadrature", "mc"}));
  c_volume->add_option("--samples", opt.samples, "Monte-Carlo samples");
  c_volume->add_option("--seed", opt.seed, "Monte-Carlo seed");

  auto add_platonic = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    CLI::Option* oa = cmd->add_option("--a", opt.edge, "edge length");
    CLI::Option* oA = cmd->add_option("--A", opt.angle, "dihedral angle");
    oa->excludes(oA);
    cmd->add_option("--by", opt.by, "edge|angle|both")
        ->check(CLI::IsMember({"edge", "angle", "both"}));
    cmd->callback([oa, oA] {
      if (oa->count() + oA->count() != 1)
        throw CLI::ValidationError("exactly one of --a / --A is required");
    });
    return cmd;
  };
  add_platonic("tetra", "regular tetrahedron volume");
  add_platonic("octa", "regular octahedron volume");

  CLI::App* c_region = app.add_subcommand("region", "existence-region CSV");
  c_region->add_option("--n", opt.spec.n, "gonality")
      ->required()
      ->check(CLI::Range(2, 1000000));
  c_region->add_option("--grid", opt.grid, "grid size per axis")
      ->check(CLI::Range(2, 100000));
  c_region->add_option("--out", opt.out, "output path ('-' for stdout)");

  CLI::App* c_verify = app.add_subcommand("verify", "cross-validation report");
  add_spec_options(c_verify, opt);
  c_verify->add_option("--samples", opt.samples, "Monte-Carlo samples");
  c_verify->add_option("--seed", opt.seed, "Monte-Carlo seed");

  CLI::App* c_trapezoid =
      app.add_subcommand("trapezoid", "isosceles trapezoid angles");
  c_trapezoid->add_option("--x", opt.shape.x, "base x")->required();
  c_trapezoid->add_option("--y", opt.shape.y, "lateral side")->required();
  c_trapezoid->add_option("--z", opt.shape.z, "base z")->required();
  c_trapezoid->add_flag("--degrees", opt.degrees, "also print degrees");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c_exists->parsed()) return run_exists(opt);
    if (c_angles->parsed()) return run_angles(opt);
    if (c_volume->parsed()) return run_volume(opt);
    if (app.get_subcommand("tetra")->parsed()) return run_platonic(opt, false);
    if (app.get_subcommand("octa")->parsed()) return run_platonic(opt, true);
    if (c_region->parsed()) return run_region(opt);
    if (c_verify->parsed()) return run_verify(opt);
    if (c_trapezoid->parsed()) return run_trapezoid(opt);
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const InconsistencyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheck;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
