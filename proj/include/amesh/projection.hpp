#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amesh/chebmesh.hpp"
#include "amesh/extremal.hpp"
#include "amesh/vanderbasis.hpp"

namespace amesh {

enum class ProjectionKind { interpolation, least_squares };

std::string_view to_string(ProjectionKind kind);

/// L_n f(z) = sum_j f(xi_j) w_j K_n(z, xi_j), with K_n the reproducing kernel
/// of the discrete scalar product on the sample points.  With n+1 samples this
/// is Lagrange interpolation.
class ProjectionOperator {
 public:
  /// General constructor: orthonormalizes `base` on (samples, weights).
  ProjectionOperator(ProjectionKind kind, std::vector<cplx> samples, std::vector<double> weights,
                     const OrthoBasis& base, std::string label);

  ProjectionKind kind() const noexcept { return kind_; }
  int degree() const noexcept { return basis_.degree(); }
  const std::string& label() const noexcept { return label_; }
  const std::vector<cplx>& samples() const noexcept { return samples_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const OrthoBasis& basis() const noexcept { return basis_; }
  /// Number of factors of basis() that belong to the base basis.
  std::size_t base_factor_count() const noexcept { return base_factors_; }
  /// Householder Q with sqrt(W) [pi_k(xi_j)] = Q.
  const ComplexMatrix& q() const noexcept { return q_; }
  /// [pi_k(xi_j)] evaluated through the basis.
  const ComplexMatrix& basis_at_samples() const noexcept { return pi_samples_; }

  /// phi_j(z) = w_j K_n(z, xi_j) for every sample j.
  std::vector<cplx> fundamental_functions(cplx z) const;

  /// Attaches data f(xi_j); coefficients are (f, pi_k) in the discrete product.
  void set_samples(std::span<const cplx> values);
  const std::vector<cplx>& coefficients() const noexcept { return coefficients_; }
  bool has_data() const noexcept { return !coefficients_.empty(); }

  /// L_n f(z); requires set_samples.
  cplx operator()(cplx z) const;
  std::vector<cplx> evaluate(std::span<const cplx> z) const;

 private:
  ProjectionKind kind_;
  std::vector<cplx> samples_;
  std::vector<double> weights_;
  OrthoBasis basis_;
  std::size_t base_factors_ = 0;
  ComplexMatrix q_;
  ComplexMatrix pi_samples_;
  std::string label_;
  std::vector<cplx> coefficients_;
};

/// Interpolation at the nodes of a node set, in the node set's mesh basis.
ProjectionOperator make_interpolant(const NodeSet& nodes, std::span<const cplx> values = {});

/// Interpolation at arbitrary distinct nodes (degree = count - 1), in a basis
/// orthonormalized on the nodes themselves.
ProjectionOperator make_interpolant(std::span<const cplx> nodes, std::span<const cplx> values = {},
                                    std::string label = {});

/// Discrete least squares of degree n on the whole mesh (unit weights unless
/// given).
ProjectionOperator make_least_squares(const Mesh& mesh, int n, std::span<const cplx> values = {},
                                      std::span<const double> weights = {});

/// Lebesgue function lambda_n(z) = sum_j |phi_j(z)|.
double lebesgue_function(const ProjectionOperator& op, cplx z);

struct LebesgueReport {
  double value = 0.0;         ///< max of lambda_n on the mesh, matrix formula
  double direct_value = 0.0;  ///< same maximum through lebesgue_function
  double lower = 0.0;
  double upper = 0.0;
  double relative_budget = 0.0;  ///< c_m - 1
  double c = 0.0;
  std::size_t argmax = 0;        ///< mesh index where the maximum is attained
  std::string label;
  MeshParams eval_params;
  std::size_t eval_size = 0;
};

/// ||lambda_n|| on an admissible mesh, computed as || V(Z) R^{-1} Q^H ||_inf
/// and as the direct maximum of lebesgue_function; the two must agree to
/// 1e-10 relative (NumericalError otherwise).  Throws UsageError when the
/// operator and the mesh belong to different boundaries.
LebesgueReport lebesgue_constant(const ProjectionOperator& op, const Mesh& eval_mesh);

/// Certified enclosure [value, c_m value] of the Lebesgue constant.
std::pair<double, double> certified_interval(double value, double m);

}  // namespace amesh
