#include "sparsesym/complex.hpp"

#include <random>
#include <stdexcept>

#include "sparsesym/determinant.hpp"
#include "sparsesym/errors.hpp"
#include "sparsesym/modp.hpp"
#include "sparsesym/symmetric_matrix.hpp"
#include "sparsesym/weight_order.hpp"

namespace sparsesym {

namespace {

std::size_t pair_rank(int n, int i, int j) {
  // Position of (i, j), i < j, in lexicographic order.
  return static_cast<std::size_t>((i - 1) * n - (i - 1) * i / 2 + (j - i - 1));
}

std::string unit(int i, int j) { return "E_" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace

GradedComplex::GradedComplex(int n, std::vector<FreeModule> modules, std::vector<PolyMatrix> maps)
    : n_(n), modules_(std::move(modules)), maps_(std::move(maps)) {
  if (modules_.size() != maps_.size() + 1) throw std::invalid_argument("complex needs one more module than maps");
  for (const auto& m : modules_)
    if (m.labels.size() != m.twists.size()) throw std::invalid_argument("label and twist counts differ");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    PolyMatrix& d = maps_[i];
    if (d.rows() != modules_[i].rank() || d.cols() != modules_[i + 1].rank()) {
      throw std::invalid_argument("differential " + std::to_string(i + 1) + " has the wrong shape");
    }
    d.set_row_twists(modules_[i].twists);
    d.set_col_twists(modules_[i + 1].twists);
  }
}

bool GradedComplex::same_entries(const GradedComplex& other) const {
  if (maps_.size() != other.maps_.size()) return false;
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    const PolyMatrix& a = maps_[i];
    const PolyMatrix& b = other.maps_[i];
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c)
        if (a(r, c) != b(r, c)) return false;
  }
  return true;
}

std::optional<CompositionWitness> find_nonzero_composition(const GradedComplex& c) {
  for (int i = 1; i < c.length(); ++i) {
    const PolyMatrix product = c.differential(i) * c.differential(i + 1);
    for (std::size_t r = 0; r < product.rows(); ++r)
      for (std::size_t col = 0; col < product.cols(); ++col)
        if (!product(r, col).is_zero()) return CompositionWitness{i, r, col};
  }
  return std::nullopt;
}

void require_complex(const GradedComplex& c) {
  if (auto w = find_nonzero_composition(c)) {
    throw ContractViolation("d_" + std::to_string(w->map) + " * d_" + std::to_string(w->map + 1) +
                            " is nonzero at (" + std::to_string(w->row) + "," + std::to_string(w->col) + ")");
  }
}

std::size_t sym_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j) return static_cast<std::size_t>(i - 1);
  return static_cast<std::size_t>(n) + pair_rank(n, i, j);
}

std::size_t traceless_diag_index(int /*n*/, int i) { return static_cast<std::size_t>(i - 2); }

std::size_t matrix_unit_index(int n, int i, int j) {
  const std::size_t base = static_cast<std::size_t>(n - 1);
  if (i < j) return base + 2 * pair_rank(n, i, j);
  return base + 2 * pair_rank(n, j, i) + 1;
}

std::size_t alternating_index(int n, int i, int j) { return pair_rank(n, i, j); }

GradedComplex jozefiak_complex(int n) {
  if (n < 2) throw std::invalid_argument("jozefiak_complex requires n >= 2");
  const SparseSymmetricMatrix x = build_generic(n);
  const VariableLayout& layout = x.layout;
  auto var = [&](int i, int j) { return Polynomial::variable(layout.x(i, j)); };

  const std::size_t r1 = static_cast<std::size_t>(n) * (n + 1) / 2;
  const std::size_t r2 = static_cast<std::size_t>(n) * n - 1;
  const std::size_t r3 = static_cast<std::size_t>(n) * (n - 1) / 2;

  FreeModule f0{{0}, {"1"}};
  FreeModule f1{std::vector<int>(r1, n - 1), std::vector<std::string>(r1)};
  FreeModule f2{std::vector<int>(r2, n), std::vector<std::string>(r2)};
  FreeModule f3{std::vector<int>(r3, n + 1), std::vector<std::string>(r3)};
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) f1.labels[sym_index(n, i, j)] = unit(i, j);
  for (int i = 2; i <= n; ++i) f2.labels[traceless_diag_index(n, i)] = unit(i, i) + "-" + unit(1, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) f2.labels[matrix_unit_index(n, i, j)] = unit(i, j);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) f3.labels[alternating_index(n, i, j)] = unit(i, j) + "-" + unit(j, i);

  // d_1: signed cofactors, principal first.
  PolyMatrix d1(1, r1);
  for (const auto& minor : minor_generators(x)) d1(0, sym_index(n, minor.k, minor.l)) = minor.value;

  // d_2 on E_ii - E_11 and on E_ij.
  PolyMatrix d2(r1, r2);
  for (int i = 2; i <= n; ++i) {
    const std::size_t col = traceless_diag_index(n, i);
    for (int k = 1; k <= n; ++k)
      if (k != i) d2(sym_index(n, 1, k), col) -= var(1, k);
    for (int k = 2; k <= i; ++k) d2(sym_index(n, k, i), col) += var(k, i);
    for (int k = i + 1; k <= n; ++k) d2(sym_index(n, i, k), col) += var(i, k);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const std::size_t col = matrix_unit_index(n, i, j);
      for (int k = 1; k <= j; ++k) d2(sym_index(n, k, j), col) += var(k, i);
      for (int k = j + 1; k <= n; ++k) d2(sym_index(n, j, k), col) += var(k, i);
    }
  }

  // d_3 on E_ij - E_ji, i < j.
  PolyMatrix d3(r2, r3);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const std::size_t col = alternating_index(n, i, j);
      if (i > 1) d3(traceless_diag_index(n, i), col) += var(i, j);
      d3(traceless_diag_index(n, j), col) -= var(i, j);
      d3(matrix_unit_index(n, i, j), col) += var(j, j);
      d3(matrix_unit_index(n, j, i), col) -= var(i, i);
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        d3(matrix_unit_index(n, i, k), col) += var(j, k);
        d3(matrix_unit_index(n, j, k), col) -= var(i, k);
      }
    }
  }

  GradedComplex complex(n, {f0, f1, f2, f3}, {d1, d2, d3});
  require_complex(complex);
  return complex;
}

GradedComplex homogenize(const GradedComplex& c, const Graph& g) {
  if (c.n() != g.n()) throw std::invalid_argument("complex and graph sizes differ");
  const VariableLayout layout = c.layout();
  const WeightVector w = WeightVector::for_graph(layout, g);
  const VariableId t = layout.t();

  // Multiplies every term of p by the t-power bringing its weight to `target`.
  auto lift = [&](const Polynomial& p, int shift, int target) {
    Polynomial out;
    for (const auto& [m, coeff] : p.terms()) {
      const int gap = target - shift - weight_of(m, w);
      if (gap < 0) throw std::logic_error("homogenization target below a term weight");
      out += Polynomial::term(m * Monomial::variable(t, gap), coeff);
    }
    return out;
  };

  std::vector<FreeModule> modules{c.module(0)};
  std::vector<PolyMatrix> maps;
  std::vector<int> row_degrees = c.module(0).twists;
  for (int i = 1; i <= c.length(); ++i) {
    const PolyMatrix& d = c.differential(i);
    PolyMatrix h(d.rows(), d.cols());
    std::vector<int> col_degrees(d.cols(), 0);
    for (std::size_t col = 0; col < d.cols(); ++col) {
      bool any = false;
      int target = 0;
      for (std::size_t r = 0; r < d.rows(); ++r) {
        if (d(r, col).is_zero()) continue;
        const int deg = weighted_degree(d(r, col), w) + row_degrees[r];
        target = any ? std::max(target, deg) : deg;
        any = true;
      }
      col_degrees[col] = target;
      for (std::size_t r = 0; r < d.rows(); ++r)
        if (!d(r, col).is_zero()) h(r, col) = lift(d(r, col), row_degrees[r], target);
    }
    modules.push_back(FreeModule{col_degrees, c.module(i).labels});
    maps.push_back(std::move(h));
    row_degrees = col_degrees;
  }
  return GradedComplex(c.n(), std::move(modules), std::move(maps));
}

Substitution Substitution::zeros_of(const Graph& g) {
  const VariableLayout layout(g.n());
  VarMask z = 0;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.has_edge(i, j)) z |= VarMask{1} << layout.x(i, j).index;
  return {Kind::zero_vars, 0, z};
}

GradedComplex specialize(const GradedComplex& c, const Substitution& sub) {
  const VariableId t = c.layout().t();
  auto apply = [&](const Polynomial& p) -> Polynomial {
    switch (sub.kind) {
      case Substitution::Kind::identity: return p;
      case Substitution::Kind::t_value: return p.substitute(t, sub.t_value);
      case Substitution::Kind::zero_vars: return p.substitute_zero(sub.vars);
    }
    return p;
  };
  std::vector<FreeModule> modules;
  std::vector<PolyMatrix> maps;
  for (int i = 0; i <= c.length(); ++i) modules.push_back(c.module(i));
  for (int i = 1; i <= c.length(); ++i) maps.push_back(c.differential(i).map(apply));
  return GradedComplex(c.n(), std::move(modules), std::move(maps));
}

GradedComplex prune(const GradedComplex& c) {
  std::vector<FreeModule> modules{c.module(0)};
  std::vector<PolyMatrix> maps;
  std::vector<std::size_t> kept_rows(c.module(0).rank());
  for (std::size_t r = 0; r < kept_rows.size(); ++r) kept_rows[r] = r;

  for (int i = 1; i <= c.length(); ++i) {
    const PolyMatrix& d = c.differential(i);
    std::vector<std::size_t> all_cols(d.cols());
    for (std::size_t k = 0; k < all_cols.size(); ++k) all_cols[k] = k;
    const PolyMatrix cropped = d.select(kept_rows, all_cols);
    std::vector<std::size_t> kept_cols;
    for (std::size_t k = 0; k < cropped.cols(); ++k)
      if (!cropped.column_is_zero(k)) kept_cols.push_back(k);
    std::vector<std::size_t> local_rows(kept_rows.size());
    for (std::size_t k = 0; k < local_rows.size(); ++k) local_rows[k] = k;
    maps.push_back(cropped.select(local_rows, kept_cols));

    FreeModule next;
    for (auto k : kept_cols) {
      next.twists.push_back(c.module(i).twists[k]);
      next.labels.push_back(c.module(i).labels[k]);
    }
    modules.push_back(std::move(next));
    kept_rows = kept_cols;
  }
  return GradedComplex(c.n(), std::move(modules), std::move(maps));
}

PolyMatrix BlockStructure::block_a(int i) const {
  return homogenized.differential(i).select(small[i - 1], small[i]);
}
PolyMatrix BlockStructure::block_b(int i) const {
  return homogenized.differential(i).select(small[i - 1], full[i]);
}
PolyMatrix BlockStructure::block_c(int i) const {
  return homogenized.differential(i).select(full[i - 1], small[i]);
}
PolyMatrix BlockStructure::block_d(int i) const {
  return homogenized.differential(i).select(full[i - 1], full[i]);
}

BlockStructure block_structure(const GradedComplex& generic, const Graph& g) {
  const int n = generic.n();
  GradedComplex h = homogenize(generic, g);
  std::array<std::vector<std::size_t>, 4> small;
  std::array<std::vector<std::size_t>, 4> full;
  full[0] = {0};
  for (int i = 1; i <= 3; ++i) {
    const int top = 2 * (n - 1) + 2 * (i - 1);
    const auto& twists = h.module(i).twists;
    for (std::size_t k = 0; k < twists.size(); ++k) (twists[k] == top ? full[i] : small[i]).push_back(k);
  }

  auto range = [](std::size_t from, std::size_t to) {
    std::vector<std::size_t> out;
    for (std::size_t k = from; k < to; ++k) out.push_back(k);
    return out;
  };
  const auto n_sz = static_cast<std::size_t>(n);
  const PolyMatrix& d2 = generic.differential(2);
  const PolyMatrix& d3 = generic.differential(3);
  PolyMatrix gamma2 = d2.select(range(0, n_sz), range(n_sz - 1, d2.cols()));
  PolyMatrix delta2 = d2.select(range(n_sz, d2.rows()), range(n_sz - 1, d2.cols()));
  PolyMatrix gamma3 = d3.select(range(0, n_sz - 1), range(0, d3.cols()));
  PolyMatrix delta3 = d3.select(range(n_sz - 1, d3.rows()), range(0, d3.cols()));
  return BlockStructure{std::move(h), std::move(small), std::move(full),
                        std::move(gamma2), std::move(delta2), std::move(gamma3), std::move(delta3)};
}

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::pass: return "pass";
    case ProbeVerdict::fail: return "fail";
    case ProbeVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ProbeResult exactness_probe(const GradedComplex& c, std::uint64_t prime, int trials, std::uint64_t seed) {
  if (!is_prime(prime) || prime > (std::uint64_t{1} << 62)) {
    throw std::invalid_argument("probe modulus " + std::to_string(prime) + " is not a usable prime");
  }
  if (c.length() != 3) throw std::invalid_argument("exactness_probe expects a length-three complex");
  require_complex(c);

  ProbeResult result;
  for (int i = 1; i <= 3; ++i) result.sizes[i - 1] = c.differential(i).cols();
  const auto [b1, b2, b3] = result.sizes;
  // 1 - b1 + b2 - b3 = 0 is forced by exactness of a resolution of R / I, I != 0.
  if (b1 == 0 || b2 + 1 != b1 + b3) {
    result.verdict = ProbeVerdict::fail;
    return result;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, prime - 1);
  const std::size_t vars = static_cast<std::size_t>(c.layout().num_vars());
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::uint64_t> point(vars);
    for (auto& v : point) v = dist(rng);
    for (int i = 1; i <= 3; ++i) {
      result.ranks[i - 1] = rank_mod_p(evaluate_mod_p(c.differential(i), point, prime), prime);
    }
    result.trials_used = trial + 1;
    const auto [r1, r2, r3] = result.ranks;
    if (r1 == 1 && r2 == b1 - 1 && r3 == b2 - r2 && r3 == b3) {
      result.verdict = ProbeVerdict::pass;
      return result;
    }
  }
  result.verdict = ProbeVerdict::inconclusive;
  return result;
}

}  // namespace sparsesym
