#include "amesh/vanderbasis.hpp"

#include <cmath>
#include <string>

#include "amesh/errors.hpp"

namespace amesh {

namespace {

// Relative size of R's diagonal (after column equilibration) below which the
// Vandermonde matrix is treated as rank deficient.
constexpr double rank_tol = 1e-14;
// Loss of orthonormality that triggers the second QR pass.
constexpr double reorth_tol = 1e-10;

void right_multiply_inplace(ComplexMatrix& v, const ComplexMatrix& f) { v = multiply(v, f); }

struct Pass {
  std::vector<ComplexMatrix> factors;
  ComplexMatrix q;
};

// QR of the (weighted) Vandermonde-like matrix v, with one conditional
// re-orthogonalization pass.
Pass orthonormal_pass(ComplexMatrix v, int n) {
  const std::size_t cols = v.cols();
  if (v.rows() < cols)
    throw SingularityError("fewer points than the dimension of P_" + std::to_string(n), v.rows());

  // Column equilibration: V D = Q R  =>  V (D R^{-1}) = Q.
  ComplexMatrix scaling(cols, cols);
  ComplexMatrix scaled = v;
  for (std::size_t j = 0; j < cols; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.rows(); ++i) s += std::norm(v(i, j));
    s = std::sqrt(s);
    if (s == 0.0) throw SingularityError("basis degree " + std::to_string(j) + " vanishes on the points", j);
    scaling(j, j) = 1.0 / s;
    for (std::size_t i = 0; i < v.rows(); ++i) scaled(i, j) /= s;
  }

  QRFactors qr;
  try {
    qr = qr_householder(scaled, rank_tol);
  } catch (const SingularityError& e) {
    throw SingularityError("discrete orthonormalization fails at degree " +
                               std::to_string(e.index()) + " of requested " + std::to_string(n),
                           e.index());
  }
  Pass out;
  out.factors.push_back(multiply(scaling, invert_upper(qr.r)));
  out.q = std::move(qr.q);

  right_multiply_inplace(v, out.factors.front());
  if (orthogonality_defect(v) > reorth_tol) {
    auto second = qr_householder(v, rank_tol);
    out.factors.push_back(invert_upper(second.r));
    out.q = std::move(second.q);
  }
  return out;
}

}  // namespace

BasisSpec basis_spec(std::span<const cplx> points, int n) {
  if (n < 0) throw DomainError("basis degree must be nonnegative");
  if (points.empty()) throw DomainError("basis_spec needs points");
  cplx sum{};
  for (const auto& z : points) sum += z;
  const cplx center = sum / static_cast<double>(points.size());
  double scale = 0.0;
  for (const auto& z : points) scale = std::max(scale, std::abs(z - center));
  // Degree 0 needs no scale; a single point is a valid sample set for it.
  if (n == 0 && scale == 0.0) scale = 1.0;
  if (!(scale > 0.0)) throw DomainError("degenerate geometry: all points coincide");
  return {center, scale, n};
}

ComplexMatrix vandermonde(std::span<const cplx> points, const BasisSpec& spec) {
  const std::size_t cols = static_cast<std::size_t>(spec.degree) + 1;
  ComplexMatrix v(points.size(), cols);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const cplx w = (points[i] - spec.center) / spec.scale;
    cplx p = 1.0;
    for (std::size_t j = 0; j < cols; ++j) {
      v(i, j) = p;
      p *= w;
    }
  }
  return v;
}

OrthoBasis::OrthoBasis(BasisSpec spec, std::vector<ComplexMatrix> factors,
                       std::vector<cplx> source, std::vector<double> weights)
    : spec_(spec),
      factors_(std::move(factors)),
      source_(std::move(source)),
      weights_(std::move(weights)) {}

ComplexMatrix OrthoBasis::r_inv() const {
  ComplexMatrix acc = ComplexMatrix::identity(dimension());
  for (const auto& f : factors_) acc = multiply(acc, f);
  return acc;
}

ComplexMatrix OrthoBasis::evaluate(std::span<const cplx> points) const {
  ComplexMatrix v = vandermonde(points, spec_);
  for (const auto& f : factors_) v = multiply(v, f);
  return v;
}

std::vector<cplx> OrthoBasis::evaluate(cplx z) const {
  const auto v = evaluate(std::span<const cplx>(&z, 1));
  return {v.row(0).begin(), v.row(0).end()};
}

OrthoBasis orthonormalize(std::span<const cplx> points, int n) {
  const auto spec = basis_spec(points, n);
  auto pass = orthonormal_pass(vandermonde(points, spec), n);
  return OrthoBasis(spec, std::move(pass.factors), {points.begin(), points.end()},
                    std::vector<double>(points.size(), 1.0));
}

OrthoFactorization orthonormalize_with_q(std::span<const cplx> points,
                                         std::span<const double> weights, const OrthoBasis& base) {
  if (weights.size() != points.size())
    throw DomainError("weights and points differ in length");
  ComplexMatrix v = base.evaluate(points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(weights[i] > 0.0)) throw DomainError("weights must be positive");
    const double s = std::sqrt(weights[i]);
    for (auto& x : v.row(i)) x *= s;
  }
  auto pass = orthonormal_pass(std::move(v), base.degree());
  std::vector<ComplexMatrix> factors = base.factors();
  for (auto& f : pass.factors) factors.push_back(std::move(f));
  return {OrthoBasis(base.spec(), std::move(factors), {points.begin(), points.end()},
                     {weights.begin(), weights.end()}),
          std::move(pass.q)};
}

OrthoBasis orthonormalize(std::span<const cplx> points, std::span<const double> weights,
                          const OrthoBasis& base) {
  return orthonormalize_with_q(points, weights, base).basis;
}

}  // namespace amesh
