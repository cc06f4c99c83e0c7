#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "amesh/geometry.hpp"

namespace amesh {

enum class PointKind { zeros, extrema };

std::string_view to_string(PointKind kind);
/// Inverse of to_string; throws DomainError on anything else.
PointKind point_kind_from_string(std::string_view text);

struct MeshParams {
  int n = 1;         ///< polynomial degree, >= 1
  double m = 4.0;    ///< oversampling factor, > 1
  PointKind kind = PointKind::zeros;

  /// Throws DomainError unless n >= 1 and m > 1.
  void validate() const;
};

/// Where a mesh point came from: z = eval_arc(arcs[arc], t).
struct Provenance {
  std::size_t arc = 0;
  double t = 0.0;
};

/// Admissible polynomial mesh Z_n^m on a boundary, with its norming constant.
struct Mesh {
  std::vector<cplx> points;
  std::vector<Provenance> provenance;
  MeshParams params;
  std::string label;
  double c = 0.0;  ///< norming constant c_m

  std::size_t size() const noexcept { return points.size(); }
};

/// N Chebyshev zeros (N points) or extrema (N+1 points) in decreasing order,
/// exactly antisymmetric about 0.
std::vector<double> chebyshev_points(std::size_t count, PointKind kind);

/// Affine map [-1,1] -> [a,b].
double map_algebraic(double u, double a, double b);
/// Subperiodic map [-1,1] -> [a,b], u -> 2 asin(u sin((b-a)/4)) + (b+a)/2.
/// Throws DomainError when b - a > 2*pi.
double map_trigonometric(double u, double a, double b);

/// c_m = 1 / cos(pi / (2m)); throws DomainError for m <= 1.
double norming_constant(double m);

/// Number of Chebyshev parameters N used on an arc: ceil(m n k) for algebraic
/// arcs and ceil(2 m n k) for trigonometric ones.
std::size_t parameter_count(const Arc& arc, const MeshParams& params);

Mesh arc_mesh(const Arc& arc, const MeshParams& params, std::string label = {});

/// Union of the arc meshes in arc order.  A point within
/// 1e-12 * max(1, bounding-box diagonal) of an earlier point is dropped.
Mesh boundary_mesh(const Boundary& boundary, const MeshParams& params);

}  // namespace amesh
