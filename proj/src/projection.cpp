#include "amesh/projection.hpp"

#include <algorithm>
#include <cmath>

#include "amesh/errors.hpp"
#include "numfmt.hpp"

namespace amesh {

std::string_view to_string(ProjectionKind kind) {
  return kind == ProjectionKind::interpolation ? "interpolation" : "least_squares";
}

ProjectionOperator::ProjectionOperator(ProjectionKind kind, std::vector<cplx> samples,
                                       std::vector<double> weights, const OrthoBasis& base,
                                       std::string label)
    : kind_(kind),
      samples_(std::move(samples)),
      weights_(std::move(weights)),
      basis_(base),
      base_factors_(base.factors().size()),
      label_(std::move(label)) {
  if (weights_.empty()) weights_.assign(samples_.size(), 1.0);
  const std::size_t dim = base.dimension();
  if (kind_ == ProjectionKind::interpolation && samples_.size() != dim)
    throw UsageError("interpolation of degree " + std::to_string(base.degree()) + " needs " +
                     std::to_string(dim) + " nodes, got " + std::to_string(samples_.size()));
  if (samples_.size() < dim)
    throw UsageError("least squares of degree " + std::to_string(base.degree()) +
                     " needs at least " + std::to_string(dim) + " samples");
  try {
    auto f = orthonormalize_with_q(samples_, weights_, base);
    basis_ = std::move(f.basis);
    q_ = std::move(f.q);
  } catch (const SingularityError& e) {
    if (kind_ == ProjectionKind::interpolation)
      throw SingularityError(std::string("nodes are not unisolvent: ") + e.what(), e.index());
    throw;
  }
  pi_samples_ = basis_.evaluate(samples_);
}

std::vector<cplx> ProjectionOperator::fundamental_functions(cplx z) const {
  const auto pz = basis_.evaluate(z);
  std::vector<cplx> phi(samples_.size());
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    const auto pj = pi_samples_.row(j);
    cplx k{};
    for (std::size_t c = 0; c < pz.size(); ++c) k += pz[c] * std::conj(pj[c]);
    phi[j] = weights_[j] * k;
  }
  return phi;
}

void ProjectionOperator::set_samples(std::span<const cplx> values) {
  if (values.size() != samples_.size())
    throw UsageError("expected " + std::to_string(samples_.size()) + " sample values, got " +
                     std::to_string(values.size()));
  coefficients_.assign(basis_.dimension(), cplx{});
  for (std::size_t j = 0; j < samples_.size(); ++j) {
    const auto pj = pi_samples_.row(j);
    for (std::size_t k = 0; k < coefficients_.size(); ++k)
      coefficients_[k] += weights_[j] * values[j] * std::conj(pj[k]);
  }
}

std::vector<cplx> ProjectionOperator::evaluate(std::span<const cplx> z) const {
  if (!has_data()) throw UsageError("projection operator has no sample data");
  const auto p = basis_.evaluate(z);
  std::vector<cplx> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    const auto row = p.row(i);
    for (std::size_t k = 0; k < coefficients_.size(); ++k) out[i] += coefficients_[k] * row[k];
  }
  return out;
}

cplx ProjectionOperator::operator()(cplx z) const {
  return evaluate(std::span<const cplx>(&z, 1)).front();
}

ProjectionOperator make_interpolant(const NodeSet& nodes, std::span<const cplx> values) {
  if (!nodes.basis) throw UsageError("node set carries no basis");
  ProjectionOperator op(ProjectionKind::interpolation, nodes.nodes, {}, *nodes.basis, nodes.label);
  if (!values.empty()) op.set_samples(values);
  return op;
}

ProjectionOperator make_interpolant(std::span<const cplx> nodes, std::span<const cplx> values,
                                    std::string label) {
  if (nodes.empty()) throw UsageError("interpolation needs at least one node");
  const int n = static_cast<int>(nodes.size()) - 1;
  const auto base = orthonormalize(nodes, n);
  ProjectionOperator op(ProjectionKind::interpolation, {nodes.begin(), nodes.end()}, {}, base,
                        std::move(label));
  if (!values.empty()) op.set_samples(values);
  return op;
}

ProjectionOperator make_least_squares(const Mesh& mesh, int n, std::span<const cplx> values,
                                      std::span<const double> weights) {
  const auto base = orthonormalize(mesh.points, n);
  ProjectionOperator op(ProjectionKind::least_squares, mesh.points,
                        {weights.begin(), weights.end()}, base, mesh.label);
  if (!values.empty()) op.set_samples(values);
  return op;
}

double lebesgue_function(const ProjectionOperator& op, cplx z) {
  double s = 0.0;
  for (const auto& phi : op.fundamental_functions(z)) s += std::abs(phi);
  return s;
}

namespace {

// ||A B^H diag(sqrt w)||_inf streamed row by row, without forming the
// M x M_samples product; returns (norm, argmax row).
std::pair<double, std::size_t> inf_norm_kernel(const ComplexMatrix& a, const ComplexMatrix& b,
                                               const std::vector<double>& weights) {
  std::vector<double> sw(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) sw[j] = std::sqrt(weights[j]);
  double best = -1.0;
  std::size_t arg = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto ai = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < b.rows(); ++j) {
      const auto bj = b.row(j);
      cplx d{};
      for (std::size_t k = 0; k < ai.size(); ++k) d += ai[k] * std::conj(bj[k]);
      s += sw[j] * std::abs(d);
    }
    if (s > best) {
      best = s;
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace

LebesgueReport lebesgue_constant(const ProjectionOperator& op, const Mesh& eval_mesh) {
  if (!op.label().empty() && !eval_mesh.label.empty() && op.label() != eval_mesh.label)
    throw UsageError("operator built on '" + op.label() + "' evaluated on a mesh of '" +
                     eval_mesh.label + "'");
  if (eval_mesh.points.empty()) throw UsageError("empty evaluation mesh");

  // (a) || V_p(Z) R^{-1} Q^H ||_inf with p the base basis and V_p(Xi) = Q R.
  const auto& factors = op.basis().factors();
  ComplexMatrix vz = vandermonde(eval_mesh.points, op.basis().spec());
  for (std::size_t f = 0; f < op.base_factor_count(); ++f) vz = multiply(vz, factors[f]);
  ComplexMatrix r_inv = ComplexMatrix::identity(op.basis().dimension());
  for (std::size_t f = op.base_factor_count(); f < factors.size(); ++f)
    r_inv = multiply(r_inv, factors[f]);
  const auto [value, arg] = inf_norm_kernel(multiply(vz, r_inv), op.q(), op.weights());

  // (b) direct maximum of the Lebesgue function.
  double direct = 0.0;
  for (const auto& z : eval_mesh.points) direct = std::max(direct, lebesgue_function(op, z));

  if (std::abs(value - direct) > 1e-10 * std::max(value, direct))
    throw NumericalError("Lebesgue constant routes disagree: matrix " + detail::fmt17(value) +
                         " vs direct " + detail::fmt17(direct));

  LebesgueReport rep;
  rep.value = value;
  rep.direct_value = direct;
  rep.c = eval_mesh.c;
  std::tie(rep.lower, rep.upper) = certified_interval(value, eval_mesh.params.m);
  rep.relative_budget = rep.c - 1.0;
  rep.argmax = arg;
  rep.label = eval_mesh.label;
  rep.eval_params = eval_mesh.params;
  rep.eval_size = eval_mesh.size();
  return rep;
}

std::pair<double, double> certified_interval(double value, double m) {
  if (!(value >= 0.0)) throw DomainError("Lebesgue value must be nonnegative");
  return {value, norming_constant(m) * value};
}

}  // namespace amesh
