#pragma once

#include <span>
#include <vector>

#include "amesh/factorkit.hpp"

namespace amesh {

/// Shifted and scaled monomials q_j(z) = ((z - center) / scale)^(j-1),
/// j = 1..degree+1.
struct BasisSpec {
  cplx center;
  double scale = 1.0;
  int degree = 0;
};

/// Barycenter of the points and the largest distance to it.  Throws
/// DomainError when all points coincide.
BasisSpec basis_spec(std::span<const cplx> points, int n);

/// M x (n+1) matrix [q_j(z_i)].
ComplexMatrix vandermonde(std::span<const cplx> points, const BasisSpec& spec);

/// Polynomial basis pi = [q_1..q_{n+1}] F_1 F_2 ... F_s, each F upper
/// triangular, orthonormal for the discrete scalar product
/// (f, g) = sum_j w_j f(z_j) conj(g(z_j)) on its source points.
///
/// The factors are applied one after another when evaluating, which keeps
/// rounding at the level of a single well-conditioned product per factor.
class OrthoBasis {
 public:
  OrthoBasis(BasisSpec spec, std::vector<ComplexMatrix> factors, std::vector<cplx> source,
             std::vector<double> weights);

  const BasisSpec& spec() const noexcept { return spec_; }
  int degree() const noexcept { return spec_.degree; }
  std::size_t dimension() const noexcept { return static_cast<std::size_t>(spec_.degree) + 1; }
  const std::vector<ComplexMatrix>& factors() const noexcept { return factors_; }
  const std::vector<cplx>& source() const noexcept { return source_; }
  const std::vector<double>& weights() const noexcept { return weights_; }

  /// R^{-1} = F_1 F_2 ... F_s as a single matrix.
  ComplexMatrix r_inv() const;

  /// M x (n+1) matrix [pi_k(z_i)].
  ComplexMatrix evaluate(std::span<const cplx> points) const;
  std::vector<cplx> evaluate(cplx z) const;

 private:
  BasisSpec spec_;
  std::vector<ComplexMatrix> factors_;
  std::vector<cplx> source_;
  std::vector<double> weights_;
};

/// Discrete orthonormalization of the shifted-scaled basis on the points
/// (unit weights).  Throws SingularityError naming the failing degree when the
/// points cannot carry degree n in double precision.
OrthoBasis orthonormalize(std::span<const cplx> points, int n);

/// Re-orthonormalizes an existing basis on new points and positive weights.
/// The result keeps `base`'s factors and appends its own.
OrthoBasis orthonormalize(std::span<const cplx> points, std::span<const double> weights,
                          const OrthoBasis& base);

/// Same as above, also returning the Householder Q of the last pass:
/// sqrt(W) [pi_k(z_i)] = Q in exact arithmetic.
struct OrthoFactorization {
  OrthoBasis basis;
  ComplexMatrix q;
};
OrthoFactorization orthonormalize_with_q(std::span<const cplx> points,
                                         std::span<const double> weights, const OrthoBasis& base);

}  // namespace amesh
