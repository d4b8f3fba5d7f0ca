#pragma once

#include <cstddef>
#include <vector>

#include "drgkit/graph.hpp"
#include "drgkit/matrix.hpp"
#include "drgkit/scheme.hpp"

namespace drgkit {

struct DualIdempotents {
  Vertex base = 0;
  /// Diagonal 0/1 matrices; diag(E*_i) is the indicator of Γ_i(x).
  std::vector<BitMatrix> e_star;
};

DualIdempotents dual_idempotents(const Graph& g, Vertex x, const DistanceData& dd);

struct DualAdjacency {
  Vertex base = 0;
  std::vector<std::size_t> ordering;
  ExactMatrix a_star;
  std::vector<AlgebraicScalar> theta_star;
};

/// A* = diag(n (E_1)_{xy}) for E_1 = E_{ordering[1]}. Errors: "dual
/// adjacency" if the diagonal is not constant on a distance class or the
/// θ*_i are not mutually distinct.
DualAdjacency dual_adjacency(const Graph& g, Vertex x, const DistanceData& dd, const EigenData& ed,
                             const std::vector<std::size_t>& ordering);

struct AlgebraBasis {
  std::vector<ExactMatrix> generators;
  std::vector<ExactMatrix> basis;
  std::size_t dim = 0;
};

/// Unital algebra generated by `generators`, by breadth-first left
/// multiplication of the span of {I} ∪ generators until nothing new appears.
/// Exact over one quadratic field. Errors: "dimension mismatch", "float mode".
AlgebraBasis algebra_closure(const std::vector<ExactMatrix>& generators);

/// {A, E*_0, ..., E*_D} at base vertex x as exact matrices.
std::vector<ExactMatrix> terwilliger_generators(const Graph& g, Vertex x, const DistanceData& dd);

/// Dimension of T(x) computed block by block: T(x) is the direct sum of the
/// spaces E*_i T E*_j, each spanned by words E*_i A E*_{i1} A ... A E*_j.
/// Each block is closed separately over Z with a fraction-free span.
struct BlockClosure {
  std::size_t dim = 0;
  /// block_dim[i][j] = dim E*_i T(x) E*_j.
  std::vector<std::vector<std::size_t>> block_dim;
};

BlockClosure terwilliger_closure(const Graph& g, Vertex x, const DistanceData& dd);

/// Matrix of A on the standard basis {E*_i 1} of the primary module.
ExactMatrix tridiagonal_primary(const DrgParameters& params);

}  // namespace drgkit
