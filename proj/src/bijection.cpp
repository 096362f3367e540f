#include "sparsesym/bijection.hpp"

#include <bit>
#include <stdexcept>

namespace sparsesym {

Monomial bijection_fd(const Graph& g, const Forest& t, const Monomial& m) {
  if (!t.spans(g)) throw std::invalid_argument("forest does not span the graph");
  if (!m.is_squarefree()) throw std::invalid_argument("bijection_fd expects a square-free monomial");
  const int n = g.n();
  const VariableLayout layout(n);
  const VarMask support = m.support();
  if ((support & ~layout.matrix_mask()) != 0) throw std::invalid_argument("monomial involves t");
  auto bit = [&](int i, int j) { return VarMask{1} << layout.x(i, j).index; };

  const VarMask diag = layout.diagonal_mask();
  const int diagonal_count = std::popcount(support & diag);
  if (diagonal_count >= n - 1) return m;
  if (diagonal_count != n - 2) throw std::invalid_argument("monomial does not lie in I");

  // The two missing diagonal variables single out the generator of I.
  const VarMask missing = diag & ~support;
  const int k = std::countr_zero(missing) + 1;
  const int l = std::countr_zero(missing & (missing - 1)) + 1;
  if ((support & bit(k, l)) == 0) throw std::invalid_argument("monomial does not lie in I");

  const auto path = tree_path(t, k, l);
  if (!path) return m;

  // Off-diagonal cofactor of the generator of I.
  const VarMask rest = support & ~diag & ~bit(k, l);
  const std::size_t r = path->size() - 1;
  VarMask path_edges = 0;
  for (std::size_t i = 1; i <= r; ++i) path_edges |= bit((*path)[i - 1], (*path)[i]);
  const VarMask last_edge = bit((*path)[r - 1], l);

  const VarMask m1 = rest & ~path_edges;
  VarMask m2_prime = 0;
  for (std::size_t j = 1; j < r; ++j) {
    if (rest & bit((*path)[j - 1], (*path)[j])) m2_prime |= bit((*path)[j], (*path)[j]);
  }
  const VarMask m3_prime = (rest & last_edge) ? bit(k, l) : 0;

  VarMask image = diag;
  for (int v : *path) image &= ~bit(v, v);
  image |= path_edges | m1 | m2_prime | m3_prime;
  return Monomial::from_mask(image);
}

}  // namespace sparsesym
