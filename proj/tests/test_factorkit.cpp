#include <algorithm>
#include <cmath>
#include <numeric>

#include "amesh/errors.hpp"
#include "amesh/factorkit.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace amesh;
using testing::max_abs_diff;
using testing::random_matrix;

namespace {

ComplexMatrix columns(const ComplexMatrix& a, const std::vector<std::size_t>& perm, std::size_t k) {
  ComplexMatrix out(a.rows(), k);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = a(i, perm[j]);
  return out;
}

ComplexMatrix rows_of(const ComplexMatrix& a, const std::vector<std::size_t>& perm) {
  ComplexMatrix out(perm.size(), a.cols());
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(perm[i], j);
  return out;
}

bool upper_triangular(const ComplexMatrix& r) {
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < std::min(i, r.cols()); ++j)
      if (r(i, j) != cplx{}) return false;
  return true;
}

bool is_permutation_of(std::vector<std::size_t> p, std::size_t n) {
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return p.size() == n;
}

// Shapes up to 500 x 60, deterministic from the trial index.
std::pair<std::size_t, std::size_t> shape(int trial) {
  const std::size_t cols = 1 + (trial * 7) % 60;
  const std::size_t rows = cols + (trial * 37) % (501 - cols);
  return {rows, cols};
}

}  // namespace

TEST_CASE("qr_householder examples") {
  const auto id = qr_householder(ComplexMatrix::identity(2));
  CHECK(id.q == ComplexMatrix::identity(2));
  CHECK(id.r == ComplexMatrix::identity(2));

  const auto col = qr_householder(ComplexMatrix{{3.0}, {4.0}});
  CHECK(std::abs(col.r(0, 0) - 5.0) < 1e-15);
  CHECK(std::abs(col.q(0, 0) - 0.6) < 1e-15);
  CHECK(std::abs(col.q(1, 0) - 0.8) < 1e-15);

  const ComplexMatrix a = random_matrix(50, 11, 7);
  const auto f = qr_householder(a);
  CHECK(inf_norm_rows(subtract(multiply(f.q, f.r), a)) / inf_norm_rows(a) <= 1e-12);
}

TEST_CASE("qr_householder flags rank deficiency") {
  ComplexMatrix a = random_matrix(10, 3, 3);
  for (std::size_t i = 0; i < 10; ++i) a(i, 2) = 2.0 * a(i, 0) - cplx(0, 1) * a(i, 1);
  try {
    qr_householder(a);
    FAIL("expected SingularityError");
  } catch (const SingularityError& e) {
    CHECK(e.index() == 2);
  }
}

TEST_CASE("qr_householder invariants on random matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto [m, n] = shape(trial);
    const ComplexMatrix a = random_matrix(m, n, 1000 + trial);
    const auto f = qr_householder(a);
    CAPTURE(trial);
    CHECK(inf_norm_rows(subtract(multiply(f.q, f.r), a)) <= 1e-12 * inf_norm_rows(a));
    CHECK(orthogonality_defect(f.q) <= 1e-12);
    CHECK(upper_triangular(f.r));
    for (std::size_t k = 0; k < n; ++k) {
      CHECK(f.r(k, k).imag() == 0.0);
      CHECK(f.r(k, k).real() > 0.0);
    }
  }
}

TEST_CASE("qr_column_pivot examples") {
  const ComplexMatrix a{{1.0, 0.0, 0.0}, {0.0, 3.0, 0.0}, {0.0, 0.0, 2.0}};
  const auto f = qr_column_pivot(a);
  CHECK(f.perm[0] == 1);
  CHECK(f.perm == std::vector<std::size_t>{1, 2, 0});

  const auto id = qr_column_pivot(ComplexMatrix::identity(3));
  CHECK(id.perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.rank == 3);
}

TEST_CASE("qr_column_pivot invariants on random matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto [m, n] = shape(trial);
    // Wide as well as tall inputs: extraction pivots on V^T.
    const ComplexMatrix a = trial % 2 ? random_matrix(m, n, 5000 + trial)
                                      : transpose(random_matrix(m, n, 5000 + trial));
    const auto f = qr_column_pivot(a);
    CAPTURE(trial);
    REQUIRE(is_permutation_of(f.perm, a.cols()));
    CHECK(f.rank == std::min(a.rows(), a.cols()));
    CHECK(orthogonality_defect(f.q) <= 1e-12);
    CHECK(upper_triangular(f.r));
    const ComplexMatrix ap = columns(a, f.perm, a.cols());
    CHECK(max_abs_diff(multiply(f.q, f.r), ap) <= 1e-12 * inf_norm_rows(a));
    // Pivot ordering: |R_kk| is non-increasing.
    for (std::size_t k = 1; k < f.rank; ++k)
      CHECK(std::abs(f.r(k, k)) <= std::abs(f.r(k - 1, k - 1)) * (1 + 1e-12));
  }
}

TEST_CASE("qr_column_pivot never prefers a duplicate column") {
  ComplexMatrix a = random_matrix(20, 6, 99);
  // Column 5 duplicates column 0; once column 0 is taken its residual is zero.
  for (std::size_t i = 0; i < 20; ++i) a(i, 5) = a(i, 0);
  const auto f = qr_column_pivot(a);
  const auto p0 = std::find(f.perm.begin(), f.perm.end(), 0) - f.perm.begin();
  const auto p5 = std::find(f.perm.begin(), f.perm.end(), 5) - f.perm.begin();
  CHECK(std::min(p0, p5) < 5);
  CHECK(std::max(p0, p5) >= 5);
  CHECK(f.rank == 5);
}

TEST_CASE("lu_row_pivot examples") {
  const auto swap = lu_row_pivot(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}});
  CHECK(swap.perm == std::vector<std::size_t>{1, 0});
  CHECK(swap.u == ComplexMatrix::identity(2));
  CHECK(swap.l == ComplexMatrix::identity(2));

  const auto id = lu_row_pivot(ComplexMatrix::identity(3));
  CHECK(id.perm == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.l == ComplexMatrix::identity(3));
  CHECK(id.u == ComplexMatrix::identity(3));

  CHECK_THROWS_AS(lu_row_pivot(ComplexMatrix{{1.0, 0.0}, {2.0, 0.0}}), SingularityError);
}

TEST_CASE("lu_row_pivot invariants on random matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto [m, n] = shape(trial);
    const ComplexMatrix a = random_matrix(m, n, 9000 + trial);
    const auto f = lu_row_pivot(a);
    CAPTURE(trial);
    REQUIRE(is_permutation_of(f.perm, m));
    CHECK(upper_triangular(f.u));
    // Unit lower trapezoidal with entries bounded by one (partial pivoting).
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (j > i) CHECK(f.l(i, j) == cplx{});
        if (j == i) CHECK(f.l(i, j) == cplx(1.0));
        if (j < i) CHECK(std::abs(f.l(i, j)) <= 1.0 + 1e-12);
      }
    CHECK(max_abs_diff(multiply(f.l, f.u), rows_of(a, f.perm)) <= 1e-11 * inf_norm_rows(a));
  }
}

TEST_CASE("factorizations are deterministic") {
  const ComplexMatrix a = random_matrix(80, 17, 5);
  CHECK(qr_householder(a).r == qr_householder(a).r);
  CHECK(qr_column_pivot(a).perm == qr_column_pivot(a).perm);
  CHECK(qr_column_pivot(a).r == qr_column_pivot(a).r);
  CHECK(lu_row_pivot(a).u == lu_row_pivot(a).u);
}

TEST_CASE("triangular helpers and norms") {
  const ComplexMatrix r{{2.0, 0.0}, {0.0, 4.0}};
  const auto x = solve_upper(r, ComplexMatrix{{2.0}, {8.0}});
  CHECK(x == ComplexMatrix{{1.0}, {2.0}});
  CHECK_THROWS_AS(solve_upper(ComplexMatrix{{1.0, 1.0}, {0.0, 0.0}}, ComplexMatrix{{1.0}, {1.0}}),
                  SingularityError);

  CHECK(inf_norm_rows(ComplexMatrix{{1.0, -2.0}, {3.0, 4.0}}) == 7.0);
  CHECK(inf_norm_rows(ComplexMatrix{{cplx(0, 1), 1.0}}) == 2.0);

  const ComplexMatrix u = qr_householder(random_matrix(30, 8, 17)).r;
  const ComplexMatrix prod = multiply(u, invert_upper(u));
  CHECK(max_abs_diff(prod, ComplexMatrix::identity(8)) <= 1e-12);

  CHECK(std::abs(determinant(ComplexMatrix{{1.0, 2.0}, {3.0, 4.0}}) - cplx(-2.0)) < 1e-14);
  CHECK(std::abs(determinant(ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}) - cplx(-1.0)) < 1e-15);
  CHECK(determinant(ComplexMatrix{{1.0, 2.0}, {2.0, 4.0}}) == cplx{});
  CHECK(adjoint(ComplexMatrix{{cplx(1, 2), 3.0}}) == ComplexMatrix{{cplx(1, -2)}, {3.0}});
}
