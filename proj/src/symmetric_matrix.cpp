#include "sparsesym/symmetric_matrix.hpp"

#include <bit>
#include <functional>
#include <stdexcept>

#include "sparsesym/determinant.hpp"
#include "sparsesym/errors.hpp"

namespace sparsesym {

SparseSymmetricMatrix build_matrix(const Graph& g) {
  VariableLayout layout(g.n());
  const int n = g.n();
  PolyMatrix matrix(n, n);
  VarMask zero_vars = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      const VariableId v = layout.x(i, j);
      if (i == j || g.has_edge(i, j)) {
        matrix(i - 1, j - 1) = Polynomial::variable(v);
        matrix(j - 1, i - 1) = Polynomial::variable(v);
      } else {
        zero_vars |= VarMask{1} << v.index;
      }
    }
  }
  return SparseSymmetricMatrix{layout, g, std::move(matrix), zero_vars};
}

SparseSymmetricMatrix build_generic(int n) { return build_matrix(Graph::complete(n)); }

std::vector<std::pair<int, int>> minor_index_order(int n) {
  std::vector<std::pair<int, int>> order;
  for (int i = 1; i <= n; ++i) order.emplace_back(i, i);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) order.emplace_back(k, l);
  return order;
}

std::vector<MinorGenerator> minor_generators(const SparseSymmetricMatrix& m) {
  MinorEngine engine(m.matrix);
  std::vector<MinorGenerator> out;
  for (auto [k, l] : minor_index_order(m.layout.n())) out.push_back({k, l, engine.cofactor(k, l)});
  return out;
}

std::vector<std::vector<int>> simple_paths(const Graph& g, int k, int l, std::size_t path_cap) {
  if (k < 1 || l < 1 || k > g.n() || l > g.n() || k == l) {
    throw std::invalid_argument("simple_paths needs distinct end points in [1, n]");
  }
  std::vector<std::vector<int>> paths;
  std::vector<int> current{k};
  std::function<void(int, std::uint64_t)> extend = [&](int v, std::uint64_t used) {
    for (std::uint64_t nb = g.neighbors(v) & ~used; nb != 0; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      current.push_back(w);
      if (w == l) {
        if (paths.size() >= path_cap) {
          throw ResourceLimit("more than " + std::to_string(path_cap) + " paths between " +
                              std::to_string(k) + " and " + std::to_string(l));
        }
        paths.push_back(current);
      } else {
        extend(w, used | std::uint64_t{1} << w);
      }
      current.pop_back();
    }
  };
  extend(k, std::uint64_t{1} << k);
  return paths;
}

Polynomial path_determinant_rhs(const Graph& g, int k, int l, std::size_t path_cap) {
  if (k >= l) throw std::invalid_argument("path_determinant_rhs requires k < l");
  const SparseSymmetricMatrix xg = build_matrix(g);
  MinorEngine engine(xg.matrix);
  Polynomial total;
  for (const auto& path : simple_paths(g, k, l, path_cap)) {
    std::uint64_t vertices = 0;
    Monomial xp;
    for (std::size_t i = 0; i < path.size(); ++i) {
      vertices |= std::uint64_t{1} << path[i];
      if (i > 0) xp = xp * Monomial::variable(xg.layout.x(path[i - 1], path[i]));
    }
    const Polynomial principal = engine.principal_minor_without(vertices);
    const int sign = (path.size() - 1) % 2 == 0 ? 1 : -1;
    total.add_scaled(principal, sign, xp);
  }
  return total;
}

}  // namespace sparsesym
