#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "amesh/factorkit.hpp"
#include "amesh/geometry.hpp"

namespace testing {

using amesh::cplx;

inline cplx unit_square(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double re = u(rng);
  return {re, u(rng)};
}

inline amesh::ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  amesh::ComplexMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = unit_square(rng);
  return a;
}

inline double max_abs_diff(const amesh::ComplexMatrix& a, const amesh::ComplexMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
  return d;
}

inline std::vector<cplx> roots_of_unity(int count, double phase = 0.0) {
  std::vector<cplx> z;
  for (int j = 0; j < count; ++j) z.push_back(std::polar(1.0, phase + 2.0 * M_PI * j / count));
  return z;
}

inline amesh::Boundary segment_domain(double a = -1.0, double b = 1.0) {
  return amesh::Boundary("segment", {amesh::Arc::algebraic({{(a + b) / 2, 0}, {(b - a) / 2, 0}},
                                                           -1.0, 1.0)});
}

inline amesh::Boundary circle_domain() {
  return amesh::Boundary("circle",
                         {amesh::Arc::trigonometric({{0, 0}, {1, 0}}, {{0, 1}}, 0.0, 2 * M_PI)});
}

}  // namespace testing
