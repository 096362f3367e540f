#pragma once

#include <vector>

#include "sparsesym/graph.hpp"
#include "sparsesym/poly_matrix.hpp"

namespace sparsesym {

/// X_G: the generic symmetric matrix with x_ij replaced by zero for every
/// non-edge ij of G. Zeros occur only off the diagonal.
struct SparseSymmetricMatrix {
  VariableLayout layout;
  Graph graph;
  PolyMatrix matrix;
  /// Z: off-diagonal variables of the non-edges.
  VarMask zero_vars = 0;
};

SparseSymmetricMatrix build_matrix(const Graph& g);
/// The fully generic X (complete graph).
SparseSymmetricMatrix build_generic(int n);

/// Signed submaximal minor (-1)^{k+l} det(M without row k, column l), k <= l.
struct MinorGenerator {
  int k = 0;
  int l = 0;
  Polynomial value;
};

/// The C(n+1, 2) signed cofactors in basis order: (1,1), ..., (n,n), then
/// (1,2), (1,3), ..., (n-1,n).
std::vector<MinorGenerator> minor_generators(const SparseSymmetricMatrix& m);

/// Index pairs (k, l) in the order used by minor_generators.
std::vector<std::pair<int, int>> minor_index_order(int n);

/// Simple paths from k to l in g, as vertex lists. Throws ResourceLimit when
/// more than `path_cap` paths exist.
std::vector<std::vector<int>> simple_paths(const Graph& g, int k, int l, std::size_t path_cap);

inline constexpr std::size_t kDefaultPathCap = 100000;

/// Sum over paths p from k to l in G of
/// (-1)^{|V(p)|-1} det(X_G restricted to [n] \ V(p)) x_p. Requires k < l.
Polynomial path_determinant_rhs(const Graph& g, int k, int l, std::size_t path_cap = kDefaultPathCap);

}  // namespace sparsesym
