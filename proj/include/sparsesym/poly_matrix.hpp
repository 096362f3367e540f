#pragma once

#include <vector>

#include "sparsesym/polynomial.hpp"

namespace sparsesym {

/// Dense matrix of polynomials with a degree shift attached to every row and
/// column. Zero rows or zero columns are allowed.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_twists,
             std::vector<int> col_twists);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  const std::vector<int>& row_twists() const { return row_twists_; }
  const std::vector<int>& col_twists() const { return col_twists_; }
  void set_row_twists(std::vector<int> twists);
  void set_col_twists(std::vector<int> twists);

  bool is_zero() const;
  bool column_is_zero(std::size_t c) const;
  /// Submatrix on the given rows and columns (twists follow).
  PolyMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  /// Entrywise transform.
  template <typename F>
  PolyMatrix map(F&& f) const {
    PolyMatrix out = *this;
    for (auto& e : out.entries_) e = f(e);
    return out;
  }

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Polynomial> entries_;
  std::vector<int> row_twists_;
  std::vector<int> col_twists_;
};

/// Matrix product; twists are taken from the outer dimensions.
PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace sparsesym
