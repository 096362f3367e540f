#pragma once

#include <optional>
#include <vector>

#include "sparsesym/polynomial.hpp"

namespace sparsesym {

/// Dense square matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n);
  RationalMatrix(std::size_t n, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  bool is_symmetric() const;
  bool is_diagonal() const;
  /// Principal submatrix on the given 0-based indices.
  RationalMatrix principal(const std::vector<std::size_t>& indices) const;

  bool operator==(const RationalMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Rational bareiss_determinant(const RationalMatrix& a);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

struct PrincipalRegularityReport {
  bool principally_regular = false;
  /// A_ij (A^{-1})_ij = 0 for all i < j; nullopt when A is singular.
  std::optional<bool> condition_holds;
  bool diagonal = false;
  /// principally regular and condition holding imply diagonal.
  bool implication_holds = true;
};

/// Throws std::invalid_argument for a non-symmetric matrix.
PrincipalRegularityReport principally_regular_check(const RationalMatrix& a);

}  // namespace sparsesym
