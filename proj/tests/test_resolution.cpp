#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "sparsesym/betti.hpp"
#include "sparsesym/complex.hpp"
#include "sparsesym/errors.hpp"
#include "sparsesym/hilbert.hpp"
#include "sparsesym/modp.hpp"
#include "sparsesym/monomial_ideal.hpp"
#include "sparsesym/symmetric_matrix.hpp"
#include "sparsesym/weight_order.hpp"
#include "support.hpp"

using namespace sparsesym;

namespace {

const GradedComplex& generic_complex(int n) {
  static std::map<int, GradedComplex> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, jozefiak_complex(n)).first;
  return it->second;
}

GradedComplex pruned(const Graph& g) {
  return prune(specialize(generic_complex(g.n()), Substitution::zeros_of(g)));
}

std::string e(int i, int j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }

using Square = std::vector<std::vector<Polynomial>>;

Square zero_square(int n) { return Square(n, std::vector<Polynomial>(n)); }

Square product(const Square& a, const Square& b) {
  const std::size_t n = a.size();
  Square out(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
  return out;
}

Square generic_matrix(int n) {
  const VariableLayout layout(n);
  Square xm = zero_square(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) xm[i - 1][j - 1] = testing::x(layout, i, j);
  return xm;
}

// Basis of F2 as n x n matrices, in the order E_ii - E_11 (i = 2..n), then
// E_12, E_21, E_13, E_31, ...
std::vector<std::pair<std::string, Square>> f2_basis(int n) {
  std::vector<std::pair<std::string, Square>> out;
  for (int i = 2; i <= n; ++i) {
    Square m = zero_square(n);
    m[i - 1][i - 1] = 1;
    m[0][0] = -1;
    out.emplace_back(e(i, i) + "-" + e(1, 1), m);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Square a = zero_square(n), b = zero_square(n);
      a[i - 1][j - 1] = 1;
      b[j - 1][i - 1] = 1;
      out.emplace_back(e(i, j), a);
      out.emplace_back(e(j, i), b);
    }
  return out;
}

// Coordinates of a matrix class modulo antisymmetric matrices on E_ij, i <= j,
// principal first.
std::vector<Polynomial> quotient_coordinates(const Square& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) out.push_back(m[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.push_back(m[i][j] + m[j][i]);
  return out;
}

// Coordinates of a traceless matrix in the F2 basis.
std::vector<Polynomial> traceless_coordinates(const Square& m) {
  const int n = static_cast<int>(m.size());
  std::vector<Polynomial> out;
  for (int i = 1; i < n; ++i) out.push_back(m[i][i]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      out.push_back(m[i][j]);
      out.push_back(m[j][i]);
    }
  return out;
}

bool divisible_by_t(const PolyMatrix& m, std::size_t col, VariableId t) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m(r, col).is_zero() && !m(r, col).divisible_by(t)) return false;
  return true;
}

bool is_signed_variable(const Polynomial& p) {
  if (!p.is_term()) return false;
  const auto& [m, c] = *p.terms().begin();
  return m.degree() == 1 && (c == 1 || c == -1);
}

std::array<std::size_t, 3> column_counts(const GradedComplex& c) {
  return {c.differential(1).cols(), c.differential(2).cols(), c.differential(3).cols()};
}

}  // namespace

TEST_CASE("generic complex shape and labels") {
  const GradedComplex& c2 = generic_complex(2);
  CHECK(c2.differential(1).rows() == 1);
  CHECK(c2.differential(1).cols() == 3);
  CHECK(c2.differential(2).rows() == 3);
  CHECK(c2.differential(2).cols() == 3);
  CHECK(c2.differential(3).rows() == 3);
  CHECK(c2.differential(3).cols() == 1);
  for (int n = 2; n <= 5; ++n) {
    const GradedComplex& c = generic_complex(n);
    CHECK(c.module(1).twists == std::vector<int>(n * (n + 1) / 2, n - 1));
    CHECK(c.module(2).twists == std::vector<int>(n * n - 1, n));
    CHECK(c.module(3).twists == std::vector<int>(n * (n - 1) / 2, n + 1));
    std::vector<std::string> f1, f2, f3;
    for (int i = 1; i <= n; ++i) f1.push_back(e(i, i));
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        f1.push_back(e(i, j));
        f3.push_back(e(i, j) + "-" + e(j, i));
      }
    for (const auto& [label, unused] : f2_basis(n)) f2.push_back(label);
    CHECK(c.module(1).labels == f1);
    CHECK(c.module(2).labels == f2);
    CHECK(c.module(3).labels == f3);
  }
}

TEST_CASE("generic complex matches the matrix definitions") {
  for (int n = 2; n <= 5; ++n) {
    const GradedComplex& c = generic_complex(n);
    const Square xm = generic_matrix(n);
    const SparseSymmetricMatrix generic = build_generic(n);
    const auto cofactors = minor_generators(generic);
    for (std::size_t k = 0; k < cofactors.size(); ++k) CHECK(c.differential(1)(0, k) == cofactors[k].value);
    const auto basis = f2_basis(n);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      const auto coords = quotient_coordinates(product(xm, basis[col].second));
      for (std::size_t r = 0; r < coords.size(); ++r) CHECK(c.differential(2)(r, col) == coords[r]);
    }
    std::size_t col = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j, ++col) {
        Square a = zero_square(n);
        a[i - 1][j - 1] = 1;
        a[j - 1][i - 1] = -1;
        const auto coords = traceless_coordinates(product(a, xm));
        for (std::size_t r = 0; r < coords.size(); ++r) CHECK(c.differential(3)(r, col) == coords[r]);
      }
  }
}

TEST_CASE("generic complex is a complex with signed-variable entries") {
  for (int n = 2; n <= 6; ++n) {
    const GradedComplex& c = generic_complex(n);
    CHECK_FALSE(find_nonzero_composition(c).has_value());
    for (int i = 2; i <= 3; ++i) {
      const PolyMatrix& d = c.differential(i);
      for (std::size_t r = 0; r < d.rows(); ++r)
        for (std::size_t col = 0; col < d.cols(); ++col)
          if (!d(r, col).is_zero()) CHECK(is_signed_variable(d(r, col)));
    }
  }
}

TEST_CASE("index helpers") {
  CHECK(sym_index(3, 1, 1) == 0);
  CHECK(sym_index(3, 2, 3) == 5);
  CHECK(traceless_diag_index(3, 2) == 0);
  CHECK(matrix_unit_index(3, 1, 2) == 2);
  CHECK(matrix_unit_index(3, 2, 1) == 3);
  CHECK(matrix_unit_index(3, 2, 3) == 6);
  CHECK(alternating_index(3, 2, 3) == 2);
}

TEST_CASE("tampered complexes are rejected before probing") {
  const GradedComplex& c = generic_complex(3);
  std::vector<FreeModule> modules;
  for (int i = 0; i <= 3; ++i) modules.push_back(c.module(i));
  std::vector<PolyMatrix> maps{c.differential(1), c.differential(2), c.differential(3)};
  for (std::size_t r = 0; r < maps[1].rows(); ++r) {
    if (!maps[1](r, 0).is_zero()) {
      maps[1](r, 0) = -maps[1](r, 0);
      break;
    }
  }
  const GradedComplex tampered(3, modules, maps);
  const auto witness = find_nonzero_composition(tampered);
  REQUIRE(witness.has_value());
  CHECK(witness->map == 1);
  CHECK_THROWS_AS(require_complex(tampered), ContractViolation);
  CHECK_THROWS_AS(exactness_probe(tampered, kDefaultPrime, 10, 1), ContractViolation);
}

TEST_CASE("homogenization") {
  std::mt19937_64 rng(17);
  for (int n = 2; n <= 5; ++n) {
    const GradedComplex& c = generic_complex(n);
    const VariableLayout layout(n);
    std::vector<Graph> graphs = testing::random_graphs(n, 8, 100 + n);
    graphs.push_back(Graph::edgeless(n));
    graphs.push_back(Graph::complete(n));
    for (const Graph& g : graphs) {
      const GradedComplex h = homogenize(c, g);
      CHECK(specialize(h, Substitution::t_equals(1)).same_entries(c));
      CHECK_FALSE(find_nonzero_composition(h).has_value());
      for (int i = 2; i <= 3; ++i)
        for (std::size_t col = 0; col < h.differential(i).cols(); ++col)
          CHECK_FALSE(divisible_by_t(h.differential(i), col, layout.t()));
      const WeightVector wg = WeightVector::for_graph(layout, g);
      const CompositeWeightOrder by_weight({wg});
      const GradedComplex at_zero = specialize(h, Substitution::t_equals(0));
      int top = 0;
      for (std::size_t k = 0; k < c.differential(1).cols(); ++k)
        top = std::max(top, weighted_degree(c.differential(1)(0, k), wg));
      CHECK(top == 2 * (n - 1));
      for (std::size_t k = 0; k < c.differential(1).cols(); ++k) {
        const Polynomial& cof = c.differential(1)(0, k);
        CHECK(at_zero.differential(1)(0, k) == initial_form(cof, by_weight, false));
        if (weighted_degree(cof, wg) == top) CHECK(h.module(1).twists[k] == top);
      }
    }
  }
}

TEST_CASE("block structure") {
  for (int n = 2; n <= 5; ++n) {
    const GradedComplex& c = generic_complex(n);
    const VariableLayout layout(n);
    std::vector<Graph> graphs = testing::random_graphs(n, 10, 200 + n);
    graphs.push_back(Graph::edgeless(n));
    graphs.push_back(Graph::complete(n));
    for (const Graph& g : graphs) {
      const BlockStructure b = block_structure(c, g);
      const bool connected = connected_components(g).size() == 1;
      for (int i = 1; i <= 3; ++i) {
        if (connected) CHECK(b.small[i].empty());
        const Substitution z = Substitution::zeros_of(g);
        auto sub = [&](const PolyMatrix& m, const Substitution& s) {
          return m.map([&](const Polynomial& p) {
            if (s.kind == Substitution::Kind::t_value) return p.substitute(layout.t(), s.t_value);
            return p.substitute_zero(s.vars);
          });
        };
        CHECK(sub(b.block_c(i), z).is_zero());
        CHECK(sub(b.block_b(i), Substitution::t_equals(0)).is_zero());
        if (i >= 2) CHECK(sub(b.block_d(i), Substitution::t_equals(0)) == sub(b.block_d(i), z));
      }
    }
    const BlockStructure b = block_structure(c, Graph::complete(n));
    for (std::size_t r = 0; r < b.gamma2.rows(); ++r)
      for (std::size_t col = 0; col < b.gamma2.cols(); ++col)
        for (const auto& [m, coeff] : b.gamma2(r, col).terms())
          CHECK((m.support() & layout.diagonal_mask()) == 0);
    CHECK(b.gamma2.rows() == static_cast<std::size_t>(n));
    CHECK(b.delta2.rows() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(b.gamma3.rows() == static_cast<std::size_t>(n - 1));
    CHECK(b.delta3.rows() == static_cast<std::size_t>(n * (n - 1)));
    for (std::size_t r = 0; r < b.gamma3.rows(); ++r)
      for (std::size_t col = 0; col < b.gamma3.cols(); ++col)
        for (const auto& [m, coeff] : b.gamma3(r, col).terms()) CHECK((m.support() & layout.diagonal_mask()) == 0);
    for (std::size_t r = 0; r < b.delta3.rows(); ++r) {
      int diagonal = 0;
      for (std::size_t col = 0; col < b.delta3.cols(); ++col)
        for (const auto& [m, coeff] : b.delta3(r, col).terms())
          diagonal += std::popcount(m.support() & layout.diagonal_mask());
      CHECK(diagonal == 1);
    }
  }
}

TEST_CASE("specialization") {
  const GradedComplex& c = generic_complex(4);
  CHECK(specialize(c, Substitution::identity()).same_entries(c));
  for (const Graph& g : testing::all_graphs(4)) {
    const GradedComplex s = specialize(c, Substitution::zeros_of(g));
    CHECK_FALSE(find_nonzero_composition(s).has_value());
    const auto order = minor_index_order(4);
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto [a, b] = order[k];
      const bool vanishes = a != b && simple_paths(g, a, b, kDefaultPathCap).empty();
      CHECK(s.differential(1).column_is_zero(k) == vanishes);
    }
  }
}

TEST_CASE("pruning") {
  const GradedComplex p2 = pruned(Graph::edgeless(2));
  const VariableLayout l2(2);
  CHECK(p2.differential(1).cols() == 2);
  CHECK(p2.differential(1)(0, 0) == testing::x(l2, 2, 2));
  CHECK(p2.differential(1)(0, 1) == testing::x(l2, 1, 1));
  CHECK(column_counts(p2) == std::array<std::size_t, 3>{2, 1, 0});
  CHECK(betti_table(p2).get(1, 1) == 2);
  CHECK(betti_table(p2).get(2, 2) == 1);

  for (int n = 2; n <= 5; ++n) {
    const std::vector<Graph> graphs = n <= 4 ? testing::all_graphs(n) : testing::random_graphs(n, 60, 5);
    for (const Graph& g : graphs) {
      const long long d = d_invariant(g);
      const GradedComplex s = specialize(generic_complex(n), Substitution::zeros_of(g));
      const GradedComplex p = prune(s);
      const auto counts = column_counts(p);
      CHECK(counts[0] == static_cast<std::size_t>(n * (n + 1) / 2 - d));
      CHECK(counts[1] == static_cast<std::size_t>(n * n - 1 - 2 * d));
      CHECK(counts[2] == static_cast<std::size_t>(n * (n - 1) / 2 - d));
      CHECK(counts[1] == counts[0] - 1 + counts[2]);
      CHECK_FALSE(find_nonzero_composition(p).has_value());
      if (d == 0) CHECK(p.same_entries(s));
      CHECK(betti_table(p) == betti_formula(n, d).table);
    }
  }
}

TEST_CASE("betti tables") {
  const BettiTable k2 = betti_table(pruned(Graph::complete(2)));
  CHECK(k2.get(0, 0) == 1);
  CHECK(k2.get(1, 1) == 3);
  CHECK(k2.get(2, 2) == 3);
  CHECK(k2.get(3, 3) == 1);
  const BettiTable two = betti_table(pruned(Graph(4, {{1, 2}, {3, 4}})));
  CHECK(two.total(1) == 6);
  CHECK(two.total(2) == 7);
  CHECK(two.total(3) == 2);
  CHECK(two.get(1, 3) == 6);
  CHECK(two.get(2, 4) == 7);
  CHECK(two.get(3, 5) == 2);
  const BettiTable e3 = betti_table(pruned(Graph::edgeless(3)));
  CHECK(e3.total(1) == 3);
  CHECK(e3.total(2) == 2);
  CHECK(e3.total(3) == 0);
  CHECK(e3.projective_dimension() == 2);
  CHECK(e3.regularity() == 1);
}

TEST_CASE("betti formula") {
  const BettiReport connected = betti_formula(4, 0);
  CHECK(connected.height == 3);
  CHECK(connected.cohen_macaulay);
  CHECK(connected.perfect);
  CHECK(connected.projective_dimension == 3);
  CHECK(connected.regularity == 3);
  CHECK(connected.reduced);
  const BettiReport r = betti_formula(5, 8);
  CHECK(r.table.total(1) == 7);
  CHECK(r.table.total(2) == 8);
  CHECK(r.table.total(3) == 2);
  CHECK_FALSE(r.cohen_macaulay);
  CHECK(r.height == 2);
  const BettiReport edgeless = betti_formula(4, 6);
  CHECK(edgeless.cohen_macaulay);
  CHECK(edgeless.projective_dimension == 2);
  CHECK(edgeless.height == 2);
  CHECK_THROWS_AS(betti_formula(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(betti_formula(4, -1), std::invalid_argument);
}

TEST_CASE("Hilbert series, degree and codimension") {
  const Graph path(3, {{1, 2}, {2, 3}});
  const HilbertSeriesData hs = hilbert_series(betti_table(pruned(path)), path.surviving_variables());
  CHECK(hs.codimension == 3);
  CHECK(hs.degree == 4);
  CHECK(hs.denominator_exponent == 5);
  const Graph split(4, {{1, 2}, {3, 4}});
  const HilbertSeriesData hs2 = hilbert_series(betti_table(pruned(split)), split.surviving_variables());
  CHECK(hs2.codimension == 2);
  CHECK(hs2.degree == 4);
  const HilbertSeriesData hs3 = hilbert_series(betti_table(pruned(Graph::edgeless(2))), 2);
  CHECK(hs3.codimension == 2);
  CHECK(hs3.degree == 1);

  for (int n = 2; n <= 5; ++n) {
    const std::vector<Graph> graphs = n <= 4 ? testing::all_graphs(n) : testing::random_graphs(n, 30, 9);
    for (const Graph& g : graphs) {
      const BettiTable b = betti_table(pruned(g));
      const int vars = g.surviving_variables();
      VarMask universe = VariableLayout(n).diagonal_mask();
      for (const Edge& edge : g.edges()) universe |= VarMask{1} << VariableLayout(n).x(edge.u, edge.v).index;
      const FaceVector f = face_vector(initial_ideal_of_minors(g, spanning_forest(g)), universe);
      for (int d = 0; d <= 2 * n; ++d) {
        Integer from_betti = 0;
        for (const auto& [key, value] : b.entries()) {
          const Integer term = polynomial_ring_hf(vars, d - key.second) * Integer(static_cast<long>(value));
          from_betti += key.first % 2 == 0 ? term : Integer(-term);
        }
        CHECK(from_betti == hilbert_from_faces(f, d));
      }
    }
  }
}

TEST_CASE("characteristic numbers") {
  const CharacteristicNumbers c = characteristic_numbers(3, 0, true);
  CHECK(c.two_hyperplanes == 4);
  REQUIRE(c.three_hyperplanes.has_value());
  CHECK(*c.three_hyperplanes == 4);
  const CharacteristicNumbers d = characteristic_numbers(4, 4, false);
  CHECK(d.two_hyperplanes == 5);
  CHECK_FALSE(d.three_hyperplanes.has_value());
  CHECK_THROWS_AS(characteristic_numbers(2, 0, true), std::invalid_argument);
  for (long long n = 3; n <= 50; ++n) {
    const CharacteristicNumbers e = characteristic_numbers(static_cast<int>(n), 0, true);
    CHECK(*e.three_hyperplanes == (n - 1) * (n - 2) * (5 * n - 3) / 6);
  }
}

TEST_CASE("exactness probes") {
  const ProbeResult k3 = exactness_probe(pruned(Graph(3, {{1, 2}, {2, 3}})), kDefaultPrime, 10, 1);
  CHECK(k3.verdict == ProbeVerdict::pass);
  CHECK(k3.sizes == std::array<std::size_t, 3>{6, 8, 3});
  CHECK(k3.ranks == std::array<std::size_t, 3>{1, 5, 3});
  const ProbeResult e3 = exactness_probe(pruned(Graph::edgeless(3)), kDefaultPrime, 10, 1);
  CHECK(e3.verdict == ProbeVerdict::pass);
  CHECK(e3.sizes == std::array<std::size_t, 3>{3, 2, 0});
  CHECK(e3.ranks == std::array<std::size_t, 3>{1, 2, 0});
  CHECK_THROWS_AS(exactness_probe(pruned(Graph::edgeless(3)), 91, 10, 1), std::invalid_argument);
  const ProbeResult again = exactness_probe(pruned(Graph::complete(4)), 101, 10, 42);
  CHECK(again.verdict == ProbeVerdict::pass);
  CHECK(std::string(to_string(ProbeVerdict::inconclusive)) == "inconclusive");
}
