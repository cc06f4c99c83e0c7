#pragma once

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace amesh {

using cplx = std::complex<double>;

enum class ArcKind { algebraic, trigonometric };

std::string_view to_string(ArcKind kind);

/// One parametric piece z(t), t in [a,b], of a boundary curve.
///
/// Algebraic arcs store c_0..c_k with z(t) = sum c_j t^j.  Trigonometric arcs
/// store a_0..a_k and b_1..b_k with z(t) = a_0 + sum (a_j cos jt + b_j sin jt),
/// and require b - a <= 2*pi.  The degree k >= 1 is the index of the highest
/// nonzero coefficient; trailing zero coefficients are rejected.
class Arc {
 public:
  static Arc algebraic(std::vector<cplx> coefficients, double a, double b);
  static Arc trigonometric(std::vector<cplx> cos_coefficients,
                           std::vector<cplx> sin_coefficients, double a, double b);

  ArcKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return degree_; }
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

  /// c_0..c_k for algebraic arcs, a_0..a_k for trigonometric arcs.
  std::span<const cplx> coefficients() const noexcept { return primary_; }
  /// b_1..b_k; empty for algebraic arcs.
  std::span<const cplx> sin_coefficients() const noexcept { return sines_; }

  bool operator==(const Arc&) const = default;

 private:
  Arc(ArcKind kind, std::vector<cplx> primary, std::vector<cplx> sines, double a, double b);

  ArcKind kind_;
  std::vector<cplx> primary_;
  std::vector<cplx> sines_;
  double lo_;
  double hi_;
  int degree_;
};

/// Ordered finite union of arcs.
class Boundary {
 public:
  Boundary(std::string label, std::vector<Arc> arcs);

  const std::string& label() const noexcept { return label_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  bool operator==(const Boundary&) const = default;

 private:
  std::string label_;
  std::vector<Arc> arcs_;
};

/// z(t); throws DomainError for t outside [a,b].
cplx eval_arc(const Arc& arc, double t);

/// Straight segment from p to q parametrized on [0,1].
Arc segment(cplx p, cplx q);

/// Names accepted by gallery().
const std::vector<std::string>& gallery_names();

/// The fixed test domains: m_polygon, curvpolygon, sun, lune, cardioid,
/// torpedo.  Throws LookupError for any other name.
Boundary gallery(std::string_view name);

/// Boundary document (JSON text).  Numbers are written with 17 significant
/// digits so load_boundary(save_boundary(b)) == b.
std::string save_boundary(const Boundary& boundary);
Boundary load_boundary(std::string_view document);

}  // namespace amesh
