#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace sparsesym {

/// Dense index of a ring variable. See VariableLayout for the ordering.
struct VariableId {
  int index = 0;

  auto operator<=>(const VariableId&) const = default;
};

/// Bitmask over VariableId indices.
using VarMask = std::uint64_t;

/// Variable ordering of K[x_ij : i <= j][t] for a fixed n:
/// x11, x22, ..., xnn, x12, ..., x1n, x23, ..., x(n-1)n, then t.
///
/// The matrix is symmetric, so x(i, j) and x(j, i) name the same variable.
class VariableLayout {
 public:
  explicit VariableLayout(int n);

  int n() const { return n_; }
  /// C(n+1, 2): the variables of the symmetric matrix.
  int num_matrix_vars() const { return n_ * (n_ + 1) / 2; }
  /// Matrix variables plus the homogenizing variable t.
  int num_vars() const { return num_matrix_vars() + 1; }

  VariableId x(int i, int j) const;
  VariableId t() const { return VariableId{num_matrix_vars()}; }

  bool is_t(VariableId v) const { return v.index == num_matrix_vars(); }
  bool is_diagonal(VariableId v) const { return v.index < n_; }
  /// (i, j) with i <= j for a matrix variable.
  std::pair<int, int> indices(VariableId v) const;

  /// "x_i_j" or "t", the serialized name.
  std::string name(VariableId v) const;
  /// Inverse of name(); throws std::invalid_argument on unknown names.
  VariableId parse(const std::string& name) const;

  VarMask diagonal_mask() const { return (VarMask{1} << n_) - 1; }
  VarMask matrix_mask() const { return (VarMask{1} << num_matrix_vars()) - 1; }

  bool operator==(const VariableLayout&) const = default;

 private:
  int n_;
};

}  // namespace sparsesym
