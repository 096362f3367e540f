#include "sparsesym/determinant.hpp"

#include <bit>
#include <stdexcept>

namespace sparsesym {

MinorEngine::MinorEngine(const PolyMatrix& m) : m_(m), n_(m.rows()) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n_ > 32) throw std::invalid_argument("MinorEngine supports at most 32 rows");
}

const Polynomial& MinorEngine::minor(std::uint64_t rows, std::uint64_t cols) {
  if (std::popcount(rows) != std::popcount(cols)) {
    throw std::invalid_argument("minor needs as many rows as columns");
  }
  const std::uint64_t key = rows << 32 | cols;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  Polynomial det;
  if (rows == 0) {
    det = Polynomial(1);
  } else {
    // Expand along the first remaining row.
    const int r = std::countr_zero(rows);
    const std::uint64_t rest_rows = rows & (rows - 1);
    int position = 0;
    for (std::uint64_t cs = cols; cs != 0; cs &= cs - 1, ++position) {
      const int c = std::countr_zero(cs);
      const Polynomial& entry = m_(r, c);
      if (entry.is_zero()) continue;
      const Polynomial& sub = minor(rest_rows, cols & ~(std::uint64_t{1} << c));
      if (sub.is_zero()) continue;
      if (position % 2 == 0) {
        det += entry * sub;
      } else {
        det -= entry * sub;
      }
    }
  }
  return cache_.emplace(key, std::move(det)).first->second;
}

Polynomial MinorEngine::determinant() {
  const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
  return minor(all, all);
}

Polynomial MinorEngine::cofactor(int k, int l) {
  if (k < 1 || l < 1 || k > static_cast<int>(n_) || l > static_cast<int>(n_)) {
    throw std::invalid_argument("cofactor index out of range");
  }
  const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
  const Polynomial& sub = minor(all & ~(std::uint64_t{1} << (k - 1)), all & ~(std::uint64_t{1} << (l - 1)));
  return (k + l) % 2 == 0 ? sub : -sub;
}

Polynomial MinorEngine::principal_minor_without(std::uint64_t removed_vertices) {
  const std::uint64_t all = (std::uint64_t{1} << n_) - 1;
  const std::uint64_t keep = all & ~(removed_vertices >> 1);
  return minor(keep, keep);
}

Polynomial determinant(const PolyMatrix& m) { return MinorEngine(m).determinant(); }

Polynomial signed_cofactor(const PolyMatrix& m, int k, int l) { return MinorEngine(m).cofactor(k, l); }

}  // namespace sparsesym
