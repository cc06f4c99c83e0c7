#include "amesh/factorkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "amesh/errors.hpp"

namespace amesh {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product dimension mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ci = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      const auto bk = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) ci[j] += aik * bk[j];
    }
  }
  return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DomainError("matrix difference dimension mismatch");
  ComplexMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

double inf_norm_rows(const ComplexMatrix& a) {
  double best = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (const cplx& v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double orthogonality_defect(const ComplexMatrix& a) {
  auto g = multiply(adjoint(a), a);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return inf_norm_rows(g);
}

namespace {

// Candidates within this relative distance of the largest pivot count as tied;
// the lowest original index among them wins.  Keeps |L_ij| <= 1 + 1e-12.
constexpr double pivot_tie_tol = 5e-13;

// Index j in [from, size) maximizing value[j] up to ties, preferring the
// smallest original[j] among tied candidates.
std::size_t pick_pivot(const std::vector<double>& value, const std::vector<std::size_t>& original,
                       std::size_t from) {
  double vmax = -1.0;
  for (std::size_t j = from; j < value.size(); ++j) vmax = std::max(vmax, value[j]);
  const double floor = vmax * (1.0 - pivot_tie_tol);
  std::size_t best = value.size();
  for (std::size_t j = from; j < value.size(); ++j)
    if (value[j] >= floor && (best == value.size() || original[j] < original[best])) best = j;
  return best;
}

// Column-major work array used by the Householder kernels.
struct Columns {
  std::size_t rows;
  std::vector<std::vector<cplx>> col;

  explicit Columns(const ComplexMatrix& a) : rows(a.rows()), col(a.cols()) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      col[j].resize(rows);
      for (std::size_t i = 0; i < rows; ++i) col[j][i] = a(i, j);
    }
  }
};

double tail_norm(const std::vector<cplx>& x, std::size_t from) {
  double scale = 0.0;
  for (std::size_t i = from; i < x.size(); ++i)
    scale = std::max({scale, std::abs(x[i].real()), std::abs(x[i].imag())});
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = from; i < x.size(); ++i) s += std::norm(x[i] / scale);
  return scale * std::sqrt(s);
}

// Householder reflector H = I - tau v v^H mapping x(k:) to alpha e_1.
struct Reflector {
  std::vector<cplx> v;  // entries k..rows-1
  double tau = 0.0;
  cplx alpha;
};

Reflector make_reflector(const std::vector<cplx>& x, std::size_t k) {
  Reflector h;
  const double s = tail_norm(x, k);
  h.v.assign(x.begin() + static_cast<std::ptrdiff_t>(k), x.end());
  if (s == 0.0) return h;
  const double a0 = std::abs(x[k]);
  const cplx phase = a0 == 0.0 ? cplx(1.0) : x[k] / a0;
  h.alpha = -phase * s;
  h.v[0] = phase * (a0 + s);
  h.tau = 1.0 / (s * (s + a0));
  return h;
}

void apply_reflector(const Reflector& h, std::vector<cplx>& y, std::size_t k) {
  if (h.tau == 0.0) return;
  cplx dot{};
  for (std::size_t i = 0; i < h.v.size(); ++i) dot += std::conj(h.v[i]) * y[k + i];
  dot *= h.tau;
  for (std::size_t i = 0; i < h.v.size(); ++i) y[k + i] -= dot * h.v[i];
}

// Thin Q (rows x r) from the first r reflectors.
ComplexMatrix form_q(const std::vector<Reflector>& hs, std::size_t rows) {
  const std::size_t r = hs.size();
  ComplexMatrix q(rows, r);
  std::vector<cplx> e(rows);
  for (std::size_t j = 0; j < r; ++j) {
    std::fill(e.begin(), e.end(), cplx{});
    e[j] = 1.0;
    for (std::size_t k = r; k-- > 0;) apply_reflector(hs[k], e, k);
    for (std::size_t i = 0; i < rows; ++i) q(i, j) = e[i];
  }
  return q;
}

// Rotate phases so that diag(R) is real and nonnegative: Q R = (Q D)(D^H R).
void normalize_signs(ComplexMatrix& q, ComplexMatrix& r) {
  for (std::size_t k = 0; k < r.rows(); ++k) {
    const double mag = std::abs(r(k, k));
    if (mag == 0.0) continue;
    const cplx d = r(k, k) / mag;
    for (std::size_t j = 0; j < r.cols(); ++j) r(k, j) *= std::conj(d);
    r(k, k) = mag;
    for (std::size_t i = 0; i < q.rows(); ++i) q(i, k) *= d;
  }
}

}  // namespace

QRFactors qr_householder(const ComplexMatrix& a, double rank_tol) {
  const std::size_t m = a.rows(), n = a.cols();
  if (n == 0 || m < n) throw DomainError("qr_householder needs rows >= cols >= 1");
  Columns w(a);
  std::vector<Reflector> hs;
  hs.reserve(n);
  ComplexMatrix r(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    hs.push_back(make_reflector(w.col[k], k));
    const Reflector& h = hs.back();
    for (std::size_t j = k + 1; j < n; ++j) apply_reflector(h, w.col[j], k);
    r(k, k) = h.tau == 0.0 ? cplx{} : h.alpha;
    for (std::size_t j = k + 1; j < n; ++j) r(k, j) = w.col[j][k];
  }
  const double r11 = std::abs(r(0, 0));
  for (std::size_t k = 0; k < n; ++k)
    if (!(std::abs(r(k, k)) >= rank_tol * r11) || r11 == 0.0)
      throw SingularityError("rank deficient matrix in QR factorization", k);
  auto q = form_q(hs, m);
  normalize_signs(q, r);
  return {std::move(q), std::move(r)};
}

PivotedQR qr_column_pivot(const ComplexMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (m == 0 || n == 0) throw DomainError("qr_column_pivot needs a nonempty matrix");
  Columns w(a);
  PivotedQR out;
  out.perm.resize(n);
  std::iota(out.perm.begin(), out.perm.end(), std::size_t{0});

  const std::size_t steps = std::min(m, n);
  std::vector<Reflector> hs;
  hs.reserve(steps);
  double initial_max = 0.0;
  std::vector<double> norms;
  for (std::size_t k = 0; k < steps; ++k) {
    // Residual norms are recomputed rather than downdated.
    norms.assign(n, 0.0);
    for (std::size_t j = k; j < n; ++j) norms[j] = tail_norm(w.col[j], k);
    const std::size_t best = pick_pivot(norms, out.perm, k);
    const double best_norm = norms[best];
    if (k == 0) initial_max = *std::max_element(norms.begin(), norms.end());
    if (best_norm <= 1e-15 * initial_max) break;
    std::swap(w.col[k], w.col[best]);
    std::swap(out.perm[k], out.perm[best]);
    hs.push_back(make_reflector(w.col[k], k));
    for (std::size_t j = k + 1; j < n; ++j) apply_reflector(hs.back(), w.col[j], k);
    w.col[k][k] = hs.back().alpha;
  }

  out.rank = hs.size();
  out.r = ComplexMatrix(out.rank, n);
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t j = i; j < n; ++j) out.r(i, j) = w.col[j][i];
  out.q = form_q(hs, m);
  normalize_signs(out.q, out.r);
  return out;
}

PivotedLU lu_row_pivot(const ComplexMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  if (n == 0 || m < n) throw DomainError("lu_row_pivot needs rows >= cols >= 1");
  ComplexMatrix w = a;
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  std::vector<double> mags(m, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = k; i < m; ++i) mags[i] = std::abs(w(i, k));
    const std::size_t best = pick_pivot(mags, perm, k);
    const double best_abs = mags[best];
    if (best_abs == 0.0) throw SingularityError("zero pivot column in LU factorization", k);
    if (best != k) {
      std::swap_ranges(w.row(k).begin(), w.row(k).end(), w.row(best).begin());
      std::swap(perm[k], perm[best]);
    }
    const cplx pivot = w(k, k);
    const auto uk = w.row(k);
    for (std::size_t i = k + 1; i < m; ++i) {
      auto wi = w.row(i);
      const cplx lik = wi[k] / pivot;
      wi[k] = lik;
      if (lik == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) wi[j] -= lik * uk[j];
    }
  }

  PivotedLU out;
  out.l = ComplexMatrix(m, n);
  out.u = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i)
        out.l(i, j) = w(i, j);
      else if (i < n)
        out.u(i, j) = w(i, j);
      if (i == j) out.l(i, j) = 1.0;
    }
  out.perm = std::move(perm);
  return out;
}

ComplexMatrix solve_upper(const ComplexMatrix& r, const ComplexMatrix& b) {
  const std::size_t n = r.rows();
  if (r.cols() != n || b.rows() != n) throw DomainError("solve_upper dimension mismatch");
  for (std::size_t k = 0; k < n; ++k)
    if (r(k, k) == cplx{}) throw SingularityError("zero diagonal in triangular solve", k);
  ComplexMatrix x = b;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (std::size_t i = n; i-- > 0;) {
      cplx s = x(i, c);
      for (std::size_t j = i + 1; j < n; ++j) s -= r(i, j) * x(j, c);
      x(i, c) = s / r(i, i);
    }
  }
  return x;
}

ComplexMatrix invert_upper(const ComplexMatrix& r) {
  auto inv = solve_upper(r, ComplexMatrix::identity(r.rows()));
  // Back substitution leaves exact zeros below the diagonal already; keep it
  // explicit so products of inverses stay triangular.
  for (std::size_t i = 0; i < inv.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) inv(i, j) = cplx{};
  return inv;
}

cplx determinant(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  PivotedLU lu;
  try {
    lu = lu_row_pivot(a);
  } catch (const SingularityError&) {
    return cplx{};
  }
  cplx det = 1.0;
  for (std::size_t k = 0; k < a.rows(); ++k) det *= lu.u(k, k);
  // Sign of the permutation by cycle counting.
  std::vector<bool> seen(a.rows(), false);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = lu.perm[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) det = -det;
  }
  return det;
}

}  // namespace amesh
