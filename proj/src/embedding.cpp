#include "sphervol/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <tuple>
#include <utility>

#include "sphervol/numeric.hpp"

namespace sphervol {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTotalVolume = 2.0 * kPi * kPi;

}  // namespace

double Vec4::norm() const { return std::sqrt(dot(*this)); }

Vec4 Vec4::normalized() const {
  const double n = norm();
  if (n == 0.0) throw InconsistencyError("Vec4: normalizing zero vector");
  return *this * (1.0 / n);
}

Vec4 Vec4::operator+(const Vec4& o) const {
  return {{v[0] + o.v[0], v[1] + o.v[1], v[2] + o.v[2], v[3] + o.v[3]}};
}

Vec4 Vec4::operator-(const Vec4& o) const {
  return {{v[0] - o.v[0], v[1] - o.v[1], v[2] - o.v[2], v[3] - o.v[3]}};
}

Vec4 Vec4::operator*(double s) const {
  return {{v[0] * s, v[1] * s, v[2] * s, v[3] * s}};
}

Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  auto det3 = [](double a0, double a1, double a2, double b0, double b1,
                 double b2, double c0, double c1, double c2) {
    return a0 * (b1 * c2 - b2 * c1) - a1 * (b0 * c2 - b2 * c0) +
           a2 * (b0 * c1 - b1 * c0);
  };
  Vec4 n;
  n[0] = det3(a[1], a[2], a[3], b[1], b[2], b[3], c[1], c[2], c[3]);
  n[1] = -det3(a[0], a[2], a[3], b[0], b[2], b[3], c[0], c[2], c[3]);
  n[2] = det3(a[0], a[1], a[3], b[0], b[1], b[3], c[0], c[1], c[3]);
  n[3] = -det3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]);
  return n;
}

EmbeddedPolytope embed(const AntiprismSpec& spec) {
  const ExistenceMargins m = existence_margins(spec);
  if (m.min() < -kClampTol)
    throw DomainError("embed: spec outside the existence region");
  const EmbeddingFrame frame = center_distance(spec);
  const double R = frame.circumradius;
  const double half_d = frame.center_distance / 2.0;
  const int n = spec.n;

  EmbeddedPolytope poly;
  poly.n = n;
  poly.a = spec.a;
  poly.c = spec.c;
  poly.vertices.reserve(2 * n);
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    poly.vertices.push_back({{std::sin(R) * std::cos(th),
                              std::sin(R) * std::sin(th),
                              std::cos(R) * std::cos(half_d),
                              std::cos(R) * std::sin(half_d)}});
  }
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n + kPi / n;
    poly.vertices.push_back({{std::sin(R) * std::cos(th),
                              std::sin(R) * std::sin(th),
                              std::cos(R) * std::cos(half_d),
                              -std::cos(R) * std::sin(half_d)}});
  }

  // The two n-gon faces carry no constraint when n = 2 (they degenerate to
  // the two skew edges).
  if (n >= 3) {
    Face top, bottom;
    for (int k = 0; k < n; ++k) top.cycle.push_back(k);
    for (int k = 0; k < n; ++k) bottom.cycle.push_back(n + k);
    poly.faces.push_back(std::move(top));
    poly.faces.push_back(std::move(bottom));
  }
  for (int k = 0; k < n; ++k) {
    poly.faces.push_back({{k, (k + 1) % n, n + k}, {}});
    poly.faces.push_back({{n + k, n + (k + 1) % n, (k + 1) % n}, {}});
  }
  return poly;
}

void face_halfspaces(EmbeddedPolytope& poly) {
  Vec4 centroid{};
  for (const Vec4& v : poly.vertices) centroid = centroid + v;
  centroid = centroid.normalized();

  for (Face& face : poly.faces) {
    const std::size_t m = face.cycle.size();
    // Spread the three spanning vertices around the cycle for conditioning.
    const Vec4& v0 = poly.vertices[face.cycle[0]];
    const Vec4& v1 = poly.vertices[face.cycle[std::max<std::size_t>(m / 3, 1)]];
    const Vec4& v2 =
        poly.vertices[face.cycle[std::max<std::size_t>(2 * m / 3, 2)]];
    Vec4 normal = cross4(v0, v1, v2);
    if (normal.norm() < 1e-10)
      throw InconsistencyError("face_halfspaces: face span has rank < 3");
    normal = normal.normalized();
    for (int idx : face.cycle) {
      if (std::abs(normal.dot(poly.vertices[idx])) > 1e-10)
        throw InconsistencyError(
            "face_halfspaces: face vertices not coplanar (rank > 3)");
    }
    if (normal.dot(centroid) < 0.0) normal = normal * -1.0;
    face.normal = normal;
  }
  for (const Vec4& v : poly.vertices) {
    for (const Face& face : poly.faces) {
      if (face.normal.dot(v) < -kClampTol)
        throw InconsistencyError(
            "face_halfspaces: vertex outside a face half space by " +
            std::to_string(-face.normal.dot(v)));
    }
  }
  poly.normals_ready = true;
}

namespace {

struct EdgeKey {
  int lo, hi;
  bool operator==(const EdgeKey&) const = default;
};

EdgeKey make_edge(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// The two faces whose cycles contain the edge (as a consecutive pair).
std::pair<const Face*, const Face*> incident_faces(const EmbeddedPolytope& poly,
                                                   EdgeKey e) {
  const Face* first = nullptr;
  const Face* second = nullptr;
  for (const Face& face : poly.faces) {
    const std::size_t m = face.cycle.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (make_edge(face.cycle[i], face.cycle[(i + 1) % m]) == e) {
        (first ? second : first) = &face;
        break;
      }
    }
  }
  if (!first || !second)
    throw InconsistencyError("measured_dihedrals: edge-face adjacency failed");
  return {first, second};
}

double dihedral_at(const EmbeddedPolytope& poly, EdgeKey e) {
  auto [f1, f2] = incident_faces(poly, e);
  return kPi - checked_acos(f1->normal.dot(f2->normal), "measured_dihedrals");
}

}  // namespace

DihedralAngles measured_dihedrals(const EmbeddedPolytope& poly) {
  if (!poly.normals_ready)
    throw InconsistencyError("measured_dihedrals: normals not populated");
  const int n = poly.n;
  std::vector<EdgeKey> a_edges, c_edges;
  for (int k = 0; k < n; ++k) {
    a_edges.push_back(make_edge(k, (k + 1) % n));
    a_edges.push_back(make_edge(n + k, n + (k + 1) % n));
    c_edges.push_back(make_edge(k, n + k));
    c_edges.push_back(make_edge((k + 1) % n, n + k));
  }
  auto dedupe = [](std::vector<EdgeKey>& v) {
    std::sort(v.begin(), v.end(), [](EdgeKey a, EdgeKey b) {
      return std::tie(a.lo, a.hi) < std::tie(b.lo, b.hi);
    });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  dedupe(a_edges);
  dedupe(c_edges);

  auto representative = [&](const std::vector<EdgeKey>& edges,
                            const char* kind) {
    const double first = dihedral_at(poly, edges[0]);
    for (const EdgeKey& e : edges) {
      if (std::abs(dihedral_at(poly, e) - first) > 1e-12)
        throw InconsistencyError(std::string("measured_dihedrals: ") + kind +
                                 "-edge dihedrals disagree");
    }
    return first;
  };
  return {representative(a_edges, "a"), representative(c_edges, "c")};
}

namespace {

// Unit tangent at v of the geodesic toward w.
Vec4 edge_tangent(const Vec4& v, const Vec4& w) {
  const double cth = v.dot(w);
  const double th = checked_acos(cth, "edge_tangent");
  if (std::sin(th) == 0.0)
    throw InconsistencyError("edge_tangent: coincident vertices");
  return (w - v * cth) * (1.0 / std::sin(th));
}

double arc_between(const Vec4& u, const Vec4& w) {
  return checked_acos(u.dot(w), "vertex_figure arc");
}

// Interior angle of the link polygon at vertex b, with neighbors a and c,
// all unit tangents in the same tangent space. NaN if a side degenerates.
double link_angle(const Vec4& a, const Vec4& b, const Vec4& c) {
  const double tab = arc_between(b, a);
  const double tbc = arc_between(b, c);
  // acos noise alone can reach ~1e-8 when two tangents coincide (n = 2).
  if (std::sin(tab) < 1e-6 || std::sin(tbc) < 1e-6)
    return std::numeric_limits<double>::quiet_NaN();
  const Vec4 ua = (a - b * std::cos(tab)) * (1.0 / std::sin(tab));
  const Vec4 uc = (c - b * std::cos(tbc)) * (1.0 / std::sin(tbc));
  return checked_acos(ua.dot(uc), "vertex_figure angle");
}

}  // namespace

VertexFigure vertex_figure_trapezoid(const EmbeddedPolytope& poly) {
  if (!poly.normals_ready)
    throw InconsistencyError("vertex_figure_trapezoid: normals not populated");
  const int n = poly.n;
  const Vec4& v = poly.vertices[0];
  // Link cycle at top vertex 0: tangents toward top_1, bottom_0,
  // bottom_{n-1}, top_{n-1}; sides in order are y, z, y, x.
  const Vec4 t_a1 = edge_tangent(v, poly.vertices[1]);
  const Vec4 t_c1 = edge_tangent(v, poly.vertices[n]);
  const Vec4 t_c2 = edge_tangent(v, poly.vertices[n + n - 1]);
  const Vec4 t_a2 = edge_tangent(v, poly.vertices[n - 1]);
  VertexFigure fig;
  fig.x = arc_between(t_a2, t_a1);
  fig.y = arc_between(t_a1, t_c1);
  fig.z = arc_between(t_c1, t_c2);
  fig.y2 = arc_between(t_c2, t_a2);
  fig.angle_at_x = link_angle(t_a2, t_a1, t_c1);
  fig.angle_at_z = link_angle(t_a1, t_c1, t_c2);
  return fig;
}

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

// Counter-based word: depends only on (seed, counter).
inline std::uint64_t rng_word(std::uint64_t seed, std::uint64_t counter) {
  return mix64(mix64(seed ^ 0x5851f42d4c957f2dull) +
               counter * 0x9e3779b97f4a7c15ull);
}

inline double to_unit(std::uint64_t w) {
  // (0, 1]: safe for the log in Box-Muller.
  return static_cast<double>((w >> 11) + 1) * 0x1.0p-53;
}

Vec4 sample_on_s3(std::uint64_t seed, std::uint64_t i) {
  const double u1 = to_unit(rng_word(seed, 4 * i));
  const double u2 = to_unit(rng_word(seed, 4 * i + 1));
  const double u3 = to_unit(rng_word(seed, 4 * i + 2));
  const double u4 = to_unit(rng_word(seed, 4 * i + 3));
  const double r1 = std::sqrt(-2.0 * std::log(u1));
  const double r2 = std::sqrt(-2.0 * std::log(u3));
  const Vec4 g{{r1 * std::cos(2.0 * kPi * u2), r1 * std::sin(2.0 * kPi * u2),
                r2 * std::cos(2.0 * kPi * u4), r2 * std::sin(2.0 * kPi * u4)}};
  return g.normalized();
}

long long count_hits(std::span<const Vec4> normals, std::uint64_t seed,
                     long long begin, long long end) {
  long long hits = 0;
  for (long long i = begin; i < end; ++i) {
    const Vec4 pt = sample_on_s3(seed, static_cast<std::uint64_t>(i));
    bool inside = true;
    for (const Vec4& nrm : normals) {
      if (nrm.dot(pt) < 0.0) {
        inside = false;
        break;
      }
    }
    if (inside) ++hits;
  }
  return hits;
}

unsigned worker_count() {
  if (const char* env = std::getenv("SPHERVOL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

VolumeEstimate monte_carlo_volume(std::span<const Vec4> inward_normals,
                                  const McConfig& cfg) {
  if (cfg.samples < 1)
    throw DomainError("monte_carlo_volume: samples < 1");
  const long long total = cfg.samples;
  const unsigned workers = std::min<unsigned>(
      worker_count(), static_cast<unsigned>((total + (1 << 16)) >> 16) + 1);
  long long hits = 0;
  if (workers <= 1) {
    hits = count_hits(inward_normals, cfg.seed, 0, total);
  } else {
    // Each sample's draw depends only on (seed, index), so any sharding
    // yields the same exact hit count.
    std::vector<std::future<long long>> parts;
    const long long chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const long long lo = w * chunk;
      const long long hi = std::min<long long>(total, lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async, [=, &inward_normals] {
        return count_hits(inward_normals, cfg.seed, lo, hi);
      }));
    }
    for (auto& part : parts) hits += part.get();
  }
  const double p = static_cast<double>(hits) / static_cast<double>(total);
  VolumeEstimate est;
  est.value = kTotalVolume * p;
  est.error_bound =
      kTotalVolume * std::sqrt(p * (1.0 - p) / static_cast<double>(total));
  est.method = VolumeMethod::monte_carlo;
  est.evaluations = total;
  return est;
}

VolumeEstimate monte_carlo_volume(const EmbeddedPolytope& poly,
                                  const McConfig& cfg) {
  if (!poly.normals_ready)
    throw InconsistencyError("monte_carlo_volume: normals not populated");
  std::vector<Vec4> normals;
  normals.reserve(poly.faces.size());
  for (const Face& f : poly.faces) normals.push_back(f.normal);
  return monte_carlo_volume(normals, cfg);
}

}  // namespace sphervol
