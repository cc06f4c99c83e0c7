#include "amesh/extremal.hpp"

#include <cmath>
#include <limits>

#include "amesh/errors.hpp"

namespace amesh {

namespace {

// Same relative tie window as the pivoted factorizations.
constexpr double tie_tol = 5e-13;

void require_points(std::size_t available, int n) {
  if (n < 0) throw DomainError("extraction degree must be nonnegative");
  if (available < static_cast<std::size_t>(n) + 1)
    throw ExtractionError("mesh has " + std::to_string(available) + " points, degree " +
                          std::to_string(n) + " needs at least " + std::to_string(n + 1));
}

std::vector<std::size_t> afp_with_basis(const OrthoBasis& basis, std::span<const cplx> points) {
  const std::size_t dim = basis.dimension();
  // Columns of V^T are mesh points; column pivoting picks the points.
  const auto pqr = qr_column_pivot(transpose(basis.evaluate(points)));
  if (pqr.rank < dim)
    throw ExtractionError("mesh Vandermonde has numerical rank " + std::to_string(pqr.rank) +
                          " < " + std::to_string(dim));
  return {pqr.perm.begin(), pqr.perm.begin() + static_cast<std::ptrdiff_t>(dim)};
}

std::vector<std::size_t> leja_with_basis(const OrthoBasis& basis, std::span<const cplx> points) {
  const std::size_t dim = basis.dimension();
  PivotedLU lu;
  try {
    lu = lu_row_pivot(basis.evaluate(points));
  } catch (const SingularityError& e) {
    throw ExtractionError(std::string("LU extraction failed: ") + e.what());
  }
  return {lu.perm.begin(), lu.perm.begin() + static_cast<std::ptrdiff_t>(dim)};
}

NodeSet make_nodeset(const Mesh& mesh, int n, Family family, std::vector<std::size_t> indices,
                     std::shared_ptr<const OrthoBasis> basis) {
  NodeSet out;
  out.family = family;
  out.n = n;
  out.label = mesh.label;
  out.params = mesh.params;
  out.params.n = n;
  for (const auto i : indices) out.nodes.push_back(mesh.points[i]);
  out.indices = std::move(indices);
  out.basis = std::move(basis);
  return out;
}

double log_distance_sum(cplx z, std::span<const cplx> chosen) {
  double s = 0.0;
  for (const auto& x : chosen) s += std::log(std::abs(z - x));
  return s;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::afp: return "afp";
    case Family::discrete_leja: return "discrete_leja";
    case Family::pseudo_leja: return "pseudo_leja";
  }
  return "?";
}

std::vector<std::size_t> afp_indices(std::span<const cplx> points, int n) {
  require_points(points.size(), n);
  return afp_with_basis(orthonormalize(points, n), points);
}

std::vector<std::size_t> leja_lu_indices(std::span<const cplx> points, int n) {
  require_points(points.size(), n);
  return leja_with_basis(orthonormalize(points, n), points);
}

NodeSet approximate_fekete(const Mesh& mesh, int n) {
  require_points(mesh.size(), n);
  auto basis = std::make_shared<const OrthoBasis>(orthonormalize(mesh.points, n));
  auto idx = afp_with_basis(*basis, mesh.points);
  return make_nodeset(mesh, n, Family::afp, std::move(idx), std::move(basis));
}

NodeSet discrete_leja(const Mesh& mesh, int n) {
  require_points(mesh.size(), n);
  auto basis = std::make_shared<const OrthoBasis>(orthonormalize(mesh.points, n));
  auto idx = leja_with_basis(*basis, mesh.points);
  return make_nodeset(mesh, n, Family::discrete_leja, std::move(idx), std::move(basis));
}

NodeSet pseudo_leja(const Boundary& boundary, int n, double m, PointKind kind) {
  if (n < 1) throw DomainError("pseudo-Leja degree must be at least 1");
  NodeSet out;
  out.family = Family::pseudo_leja;
  out.n = n;
  out.label = boundary.label();
  out.params = {n, m, kind};
  out.params.validate();

  {
    const Mesh z1 = boundary_mesh(boundary, {1, m, kind});
    std::size_t best = 0;
    for (std::size_t i = 1; i < z1.size(); ++i) {
      const cplx a = z1.points[i], b = z1.points[best];
      if (a.imag() > b.imag() || (a.imag() == b.imag() && a.real() > b.real())) best = i;
    }
    out.nodes.push_back(z1.points[best]);
    out.indices.push_back(best);
  }

  for (int j = 2; j <= n + 1; ++j) {
    const Mesh mesh = boundary_mesh(boundary, {j - 1, m, kind});
    std::vector<double> score(mesh.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < mesh.size(); ++i) {
      score[i] = log_distance_sum(mesh.points[i], out.nodes);
      top = std::max(top, score[i]);
    }
    if (top == -std::numeric_limits<double>::infinity())
      throw ExtractionError("pseudo-Leja step " + std::to_string(j) +
                            ": every candidate coincides with a chosen node");
    std::size_t best = 0;
    while (score[best] < top + std::log1p(-tie_tol)) ++best;
    out.nodes.push_back(mesh.points[best]);
    out.indices.push_back(best);
  }

  out.basis = std::make_shared<const OrthoBasis>(
      orthonormalize(boundary_mesh(boundary, out.params).points, n));
  return out;
}

std::vector<std::size_t> greedy_leja_oracle(std::span<const cplx> points, int n,
                                            std::size_t first) {
  require_points(points.size(), n);
  if (first >= points.size()) throw DomainError("first index out of range");
  std::vector<std::size_t> order{first};
  std::vector<cplx> chosen{points[first]};
  std::vector<double> score(points.size(), 0.0);
  for (int j = 1; j <= n; ++j) {
    // Running sums of log distances; chosen points sit at -inf.
    const cplx last = chosen.back();
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
      score[i] += std::log(std::abs(points[i] - last));
      top = std::max(top, score[i]);
    }
    // Products within a relative tie_tol of the maximum are ties: lowest index.
    std::size_t best = 0;
    while (score[best] < top + std::log1p(-tie_tol)) ++best;
    order.push_back(best);
    chosen.push_back(points[best]);
  }
  return order;
}

double abs_vandermonde_det(const OrthoBasis& basis, std::span<const cplx> points,
                           std::span<const std::size_t> indices) {
  std::vector<cplx> sel;
  for (const auto i : indices) sel.push_back(points[i]);
  return std::abs(determinant(basis.evaluate(sel)));
}

std::vector<std::size_t> brute_force_fekete(std::span<const cplx> points, int n) {
  if (points.size() > 20 || n > 4)
    throw DomainError("brute_force_fekete is limited to 20 points and degree 4");
  require_points(points.size(), n);
  const auto basis = orthonormalize(points, n);
  const auto v = basis.evaluate(points);
  const std::size_t k = static_cast<std::size_t>(n) + 1;

  std::vector<std::size_t> comb(k), best;
  for (std::size_t i = 0; i < k; ++i) comb[i] = i;
  double best_det = -1.0;
  ComplexMatrix sub(k, k);
  while (true) {
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = v(comb[r], c);
    const double d = std::abs(determinant(sub));
    // Equal determinants up to rounding keep the earlier (smaller) tuple.
    if (d > best_det * (1.0 + 1e-12)) {
      best_det = d;
      best = comb;
    }
    // Next combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && comb[i - 1] == points.size() - k + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < k; ++j) comb[j] = comb[j - 1] + 1;
  }
  return best;
}

}  // namespace amesh
