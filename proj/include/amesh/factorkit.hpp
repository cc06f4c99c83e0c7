#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace amesh {

using cplx = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::span<const cplx> data() const noexcept { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);

/// Induced infinity norm: max over rows of the sum of entry moduli.
double inf_norm_rows(const ComplexMatrix& a);

/// || A^H A - I ||_inf, the loss of orthonormality of A's columns.
double orthogonality_defect(const ComplexMatrix& a);

struct QRFactors {
  ComplexMatrix q;  ///< rows x cols, orthonormal columns
  ComplexMatrix r;  ///< cols x cols, upper triangular, real positive diagonal
};

/// Thin Householder QR of a tall matrix.  Throws SingularityError carrying k
/// when |R_kk| < rank_tol * |R_11|.
QRFactors qr_householder(const ComplexMatrix& a, double rank_tol = 1e-13);

struct PivotedQR {
  ComplexMatrix q;                ///< rows x rank
  ComplexMatrix r;                ///< rank x cols, upper trapezoidal
  std::vector<std::size_t> perm;  ///< A(:, perm) = Q R (first `rank` columns exact)
  std::size_t rank = 0;
};

/// Householder QR with column pivoting.  Each step takes the remaining column
/// of largest residual 2-norm (lowest index on ties).  Stops early once every
/// residual norm drops below 1e-15 times the largest initial column norm;
/// `rank` reports how many steps were taken.
PivotedQR qr_column_pivot(const ComplexMatrix& a);

struct PivotedLU {
  ComplexMatrix l;                ///< rows x r, unit lower trapezoidal, rows in pivot order
  ComplexMatrix u;                ///< r x cols, upper trapezoidal
  std::vector<std::size_t> perm;  ///< A(perm, :) = L U
};

/// LU with partial (row) pivoting on a matrix with rows >= cols.  Pivots are
/// the largest modulus in the current column, lowest row index on ties.
/// Throws SingularityError with the column index on an exactly zero column.
PivotedLU lu_row_pivot(const ComplexMatrix& a);

/// Solves R X = B by back substitution; throws SingularityError on a zero
/// diagonal entry.
ComplexMatrix solve_upper(const ComplexMatrix& r, const ComplexMatrix& b);

/// Inverse of a nonsingular upper triangular matrix.
ComplexMatrix invert_upper(const ComplexMatrix& r);

/// Determinant of a square matrix via lu_row_pivot (0 for singular input).
cplx determinant(const ComplexMatrix& a);

}  // namespace amesh
