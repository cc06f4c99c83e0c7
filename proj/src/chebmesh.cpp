#include "amesh/chebmesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "amesh/errors.hpp"

namespace amesh {

namespace {

constexpr double dedup_rel_tol = 1e-12;

// Raw (not deduplicated) samples of one arc.
void sample_arc(const Arc& arc, std::size_t arc_index, const MeshParams& params,
                std::vector<cplx>& points, std::vector<Provenance>& provenance) {
  const auto u = chebyshev_points(parameter_count(arc, params), params.kind);
  // Parameters increasing in t: Chebyshev points come in decreasing order.
  for (auto it = u.rbegin(); it != u.rend(); ++it) {
    const double t = arc.kind() == ArcKind::algebraic ? map_algebraic(*it, arc.lo(), arc.hi())
                                                      : map_trigonometric(*it, arc.lo(), arc.hi());
    points.push_back(eval_arc(arc, t));
    provenance.push_back({arc_index, t});
  }
}

void deduplicate(Mesh& mesh) {
  if (mesh.points.empty()) return;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  for (const auto& z : mesh.points) {
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
    ymin = std::min(ymin, z.imag());
    ymax = std::max(ymax, z.imag());
  }
  const double tol = dedup_rel_tol * std::max(1.0, std::hypot(xmax - xmin, ymax - ymin));

  // Kept points keyed by real part; a new point only needs to be compared
  // against kept points whose real part is within tol.
  std::multimap<double, std::size_t> kept;
  std::vector<cplx> points;
  std::vector<Provenance> provenance;
  for (std::size_t i = 0; i < mesh.points.size(); ++i) {
    const cplx z = mesh.points[i];
    bool duplicate = false;
    for (auto it = kept.lower_bound(z.real() - tol);
         it != kept.end() && it->first <= z.real() + tol; ++it) {
      if (std::abs(points[it->second] - z) <= tol) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    kept.emplace(z.real(), points.size());
    points.push_back(z);
    provenance.push_back(mesh.provenance[i]);
  }
  mesh.points = std::move(points);
  mesh.provenance = std::move(provenance);
}

}  // namespace

std::string_view to_string(PointKind kind) {
  return kind == PointKind::zeros ? "zeros" : "extrema";
}

PointKind point_kind_from_string(std::string_view text) {
  if (text == "zeros") return PointKind::zeros;
  if (text == "extrema") return PointKind::extrema;
  throw DomainError("point kind must be 'zeros' or 'extrema', got '" + std::string(text) + "'");
}

void MeshParams::validate() const {
  if (n < 1) throw DomainError("mesh degree n must be at least 1");
  if (!(m > 1.0) || !std::isfinite(m)) throw DomainError("oversampling factor m must exceed 1");
}

std::vector<double> chebyshev_points(std::size_t count, PointKind kind) {
  if (count == 0) throw DomainError("number of Chebyshev points must be positive");
  // cos(theta) written as sin(pi/2 - theta) with an integer numerator, so that
  // mirrored points are exact negatives of each other and the midpoint is 0.
  const double N = static_cast<double>(count);
  std::vector<double> x;
  if (kind == PointKind::zeros) {
    x.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
      const double num = N - 2.0 * static_cast<double>(j) + 1.0;  // N - 2j + 1
      x.push_back(std::sin(std::numbers::pi * num / (2.0 * N)));
    }
  } else {
    x.reserve(count + 1);
    for (std::size_t j = 0; j <= count; ++j) {
      const double num = N - 2.0 * static_cast<double>(j);  // N - 2j
      x.push_back(std::sin(std::numbers::pi * num / (2.0 * N)));
    }
  }
  return x;
}

double map_algebraic(double u, double a, double b) {
  const double t = (b - a) / 2.0 * u + (b + a) / 2.0;
  return std::clamp(t, a, b);
}

double map_trigonometric(double u, double a, double b) {
  if (b - a > 2.0 * std::numbers::pi)
    throw DomainError("trigonometric interval longer than 2*pi");
  const double t = 2.0 * std::asin(u * std::sin((b - a) / 4.0)) + (b + a) / 2.0;
  return std::clamp(t, a, b);
}

double norming_constant(double m) {
  if (!(m > 1.0)) throw DomainError("norming constant needs m > 1");
  return 1.0 / std::cos(std::numbers::pi / (2.0 * m));
}

std::size_t parameter_count(const Arc& arc, const MeshParams& params) {
  params.validate();
  const double factor = arc.kind() == ArcKind::algebraic ? 1.0 : 2.0;
  const double exact = factor * params.m * params.n * arc.degree();
  // Guard against products like 4.1 * 20 landing a hair above an integer.
  return static_cast<std::size_t>(std::ceil(exact * (1.0 - 1e-14)));
}

Mesh arc_mesh(const Arc& arc, const MeshParams& params, std::string label) {
  params.validate();
  Mesh mesh;
  mesh.params = params;
  mesh.label = std::move(label);
  mesh.c = norming_constant(params.m);
  sample_arc(arc, 0, params, mesh.points, mesh.provenance);
  deduplicate(mesh);
  return mesh;
}

Mesh boundary_mesh(const Boundary& boundary, const MeshParams& params) {
  params.validate();
  Mesh mesh;
  mesh.params = params;
  mesh.label = boundary.label();
  mesh.c = norming_constant(params.m);
  for (std::size_t j = 0; j < boundary.arcs().size(); ++j)
    sample_arc(boundary.arcs()[j], j, params, mesh.points, mesh.provenance);
  deduplicate(mesh);
  return mesh;
}

}  // namespace amesh
