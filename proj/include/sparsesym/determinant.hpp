#pragma once

#include <cstdint>
#include <unordered_map>

#include "sparsesym/poly_matrix.hpp"

namespace sparsesym {

/// Minors of one square polynomial matrix by Laplace expansion over row and
/// column subsets. Sub-determinants are memoized, so related minors share work,
/// and zero entries are skipped. Not thread-safe; use one engine per thread.
class MinorEngine {
 public:
  explicit MinorEngine(const PolyMatrix& m);

  std::size_t size() const { return n_; }

  /// det of the submatrix on rows/cols given as bitmasks of 0-based indices
  /// (equal popcounts required).
  const Polynomial& minor(std::uint64_t rows, std::uint64_t cols);
  Polynomial determinant();
  /// (-1)^{k+l} det with row k and column l deleted; 1-based indices.
  Polynomial cofactor(int k, int l);
  /// Principal minor on the complement of `removed` (1-based vertex mask bit v).
  Polynomial principal_minor_without(std::uint64_t removed_vertices);

 private:
  PolyMatrix m_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, Polynomial> cache_;
};

/// Exact determinant of a square matrix; throws std::invalid_argument otherwise.
Polynomial determinant(const PolyMatrix& m);

/// (-1)^{k+l} det(m with row k and column l removed), 1-based.
Polynomial signed_cofactor(const PolyMatrix& m, int k, int l);

}  // namespace sparsesym
