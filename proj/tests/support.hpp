#pragma once

#include <gmpxx.h>

#include <random>
#include <vector>

#include "sparsesym/graph.hpp"
#include "sparsesym/monomial_ideal.hpp"
#include "sparsesym/poly_matrix.hpp"
#include "sparsesym/polynomial.hpp"
#include "sparsesym/variables.hpp"

namespace testing {

using namespace sparsesym;

inline std::vector<Graph> all_graphs(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) out.push_back(Graph::from_mask(n, mask));
  return out;
}

inline Graph random_graph(int n, std::mt19937_64& rng) {
  const int pairs = n * (n - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << pairs) - 1);
  return Graph::from_mask(n, bits(rng));
}

inline std::vector<Graph> random_graphs(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(n, rng));
  return out;
}

inline Polynomial x(const VariableLayout& layout, int i, int j) { return Polynomial::variable(layout.x(i, j)); }

inline Polynomial t(const VariableLayout& layout) { return Polynomial::variable(layout.t()); }

inline Monomial mono(const VariableLayout& layout, std::initializer_list<std::pair<int, int>> vars) {
  Monomial m;
  for (auto [i, j] : vars) m = m * Monomial::variable(layout.x(i, j));
  return m;
}

/// Exact value of p at a rational point indexed by VariableId.
inline mpq_class evaluate(const Polynomial& p, const std::vector<mpq_class>& point) {
  mpq_class sum = 0;
  for (const auto& [m, c] : p.terms()) {
    mpq_class term = c;
    for (std::size_t v = 0; v < point.size(); ++v) {
      const int e = m.exponent(VariableId{static_cast<int>(v)});
      for (int k = 0; k < e; ++k) term *= point[v];
    }
    sum += term;
  }
  return sum;
}

/// Fraction-free elimination over Z.
inline mpz_class integer_bareiss(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Square-free monomials of degree d in num_vars variables lying in the ideal,
/// counted without the library's enumeration helpers.
inline long long brute_sqfree_count(const SquarefreeMonomialIdeal& ideal, int d, int num_vars) {
  long long count = 0;
  for (VarMask m = 0; m < (VarMask{1} << num_vars); ++m) {
    if (__builtin_popcountll(m) != d) continue;
    bool member = false;
    for (VarMask g : ideal.generators()) member = member || (g & m) == g;
    if (member) ++count;
  }
  return count;
}

}  // namespace testing
