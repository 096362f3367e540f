#include "sparsesym/rational_matrix.hpp"

#include <stdexcept>

namespace sparsesym {

RationalMatrix::RationalMatrix(std::size_t n) : n_(n), entries_(n * n, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> entries)
    : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw std::invalid_argument("entry count does not match n*n");
  for (auto& e : entries_) e.canonicalize();
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

bool RationalMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RationalMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

RationalMatrix RationalMatrix::principal(const std::vector<std::size_t>& indices) const {
  RationalMatrix out(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) out(i, j) = (*this)(indices[i], indices[j]);
  return out;
}

Rational bareiss_determinant(const RationalMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  RationalMatrix m = a;
  Rational previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m = a;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m(pivot, c) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      std::swap(m(c, k), m(pivot, k));
      std::swap(inv(c, k), inv(pivot, k));
    }
    const Rational scale = 1 / m(c, c);
    for (std::size_t k = 0; k < n; ++k) {
      m(c, k) *= scale;
      inv(c, k) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = 0; k < n; ++k) {
        m(r, k) -= factor * m(c, k);
        inv(r, k) -= factor * inv(c, k);
      }
    }
  }
  return inv;
}

PrincipalRegularityReport principally_regular_check(const RationalMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("principally_regular_check expects a symmetric matrix");
  const std::size_t n = a.size();
  if (n > 20) throw std::invalid_argument("principal minor enumeration limited to n <= 20");
  PrincipalRegularityReport report;
  report.principally_regular = true;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) idx.push_back(i);
    if (bareiss_determinant(a.principal(idx)) == 0) {
      report.principally_regular = false;
      break;
    }
  }
  if (auto inv = inverse(a)) {
    bool holds = true;
    for (std::size_t i = 0; i < n && holds; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a(i, j) * (*inv)(i, j) != 0) {
          holds = false;
          break;
        }
    report.condition_holds = holds;
  }
  report.diagonal = a.is_diagonal();
  report.implication_holds =
      !(report.principally_regular && report.condition_holds.value_or(false)) || report.diagonal;
  return report;
}

}  // namespace sparsesym
