#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amesh/chebmesh.hpp"
#include "amesh/vanderbasis.hpp"

namespace amesh {

enum class Family { afp, discrete_leja, pseudo_leja };

std::string_view to_string(Family family);

/// Interpolation nodes extracted from an admissible mesh.
struct NodeSet {
  std::vector<cplx> nodes;          ///< n+1 nodes in selection order
  std::vector<std::size_t> indices; ///< index of each node in its source mesh
  Family family = Family::afp;
  int n = 0;
  std::string label;                ///< boundary label of the source mesh
  MeshParams params;                ///< m and kind of the source mesh; params.n == n
  /// Orthonormal basis of the degree-n extraction mesh.  Pseudo-Leja
  /// extraction does not use a basis; it carries the one of Z_n^m so that
  /// downstream projections share the same starting point.
  std::shared_ptr<const OrthoBasis> basis;
};

/// Approximate Fekete points: QR with column pivoting on the transposed
/// mesh Vandermonde in the mesh-orthonormal basis; the first n+1 pivots are
/// the nodes.
NodeSet approximate_fekete(const Mesh& mesh, int n);

/// Discrete Leja points: LU with row pivoting on the mesh Vandermonde in the
/// mesh-orthonormal basis; the first n+1 pivot rows are the nodes.
NodeSet discrete_leja(const Mesh& mesh, int n);

/// Pseudo-Leja sequence: xi_1 is the point of Z_1^m with the largest
/// imaginary part (then largest real part, then lowest index); xi_j maximizes
/// prod_k |z - xi_k| over Z_{j-1}^m.
NodeSet pseudo_leja(const Boundary& boundary, int n, double m, PointKind kind = PointKind::zeros);

/// Index-level variants over an arbitrary point list.
std::vector<std::size_t> afp_indices(std::span<const cplx> points, int n);
std::vector<std::size_t> leja_lu_indices(std::span<const cplx> points, int n);

/// Literal greedy argmax of prod_k |z - xi_k| over a fixed point list, starting
/// at `first`; ties go to the lowest index.  Validation oracle for
/// discrete_leja.
std::vector<std::size_t> greedy_leja_oracle(std::span<const cplx> points, int n,
                                            std::size_t first);

/// Exhaustive discrete Fekete search (at most 20 points, n <= 4): the
/// (n+1)-subset maximizing |det| of the orthonormal-basis Vandermonde, ties to
/// the lexicographically smallest index tuple.  Indices returned ascending.
std::vector<std::size_t> brute_force_fekete(std::span<const cplx> points, int n);

/// |det| of the Vandermonde of the selected points in the given basis.
double abs_vandermonde_det(const OrthoBasis& basis, std::span<const cplx> points,
                           std::span<const std::size_t> indices);

}  // namespace amesh
