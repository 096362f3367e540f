#include "sparsesym/poly_matrix.hpp"

#include <stdexcept>

namespace sparsesym {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : PolyMatrix(rows, cols, std::vector<int>(rows, 0), std::vector<int>(cols, 0)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<int> row_twists,
                       std::vector<int> col_twists)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  set_row_twists(std::move(row_twists));
  set_col_twists(std::move(col_twists));
}

void PolyMatrix::set_row_twists(std::vector<int> twists) {
  if (twists.size() != rows_) throw std::invalid_argument("row twist count does not match rows");
  row_twists_ = std::move(twists);
}

void PolyMatrix::set_col_twists(std::vector<int> twists) {
  if (twists.size() != cols_) throw std::invalid_argument("column twist count does not match columns");
  col_twists_ = std::move(twists);
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool PolyMatrix::column_is_zero(std::size_t c) const {
  for (std::size_t r = 0; r < rows_; ++r)
    if (!(*this)(r, c).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::select(const std::vector<std::size_t>& rows,
                              const std::vector<std::size_t>& cols) const {
  std::vector<int> rt;
  std::vector<int> ct;
  for (auto r : rows) rt.push_back(row_twists_.at(r));
  for (auto c : cols) ct.push_back(col_twists_.at(c));
  PolyMatrix out(rows.size(), cols.size(), std::move(rt), std::move(ct));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimensions do not compose");
  PolyMatrix out(a.rows(), b.cols(), a.row_twists(), b.col_twists());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Polynomial& left = a(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Polynomial& right = b(k, j);
        if (!right.is_zero()) out(i, j) += left * right;
      }
    }
  return out;
}

}  // namespace sparsesym
