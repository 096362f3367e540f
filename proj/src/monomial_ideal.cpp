#include "sparsesym/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "sparsesym/errors.hpp"
#include "sparsesym/hilbert.hpp"
#include "sparsesym/symmetric_matrix.hpp"
#include "sparsesym/weight_order.hpp"

namespace sparsesym {

namespace {

VarMask var_bit(VariableId v) { return VarMask{1} << v.index; }

}  // namespace

SquarefreeMonomialIdeal::SquarefreeMonomialIdeal(std::vector<VarMask> generators) {
  std::sort(generators.begin(), generators.end(),
            [](VarMask a, VarMask b) { return std::popcount(a) < std::popcount(b) || (std::popcount(a) == std::popcount(b) && a < b); });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (VarMask g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [g](VarMask h) { return (h & ~g) == 0; });
    if (!redundant) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
}

SquarefreeMonomialIdeal SquarefreeMonomialIdeal::from_monomials(const std::vector<Monomial>& generators) {
  std::vector<VarMask> masks;
  for (const Monomial& m : generators) {
    if (!m.is_squarefree()) throw std::invalid_argument("generator is not square-free");
    masks.push_back(m.support());
  }
  return SquarefreeMonomialIdeal(std::move(masks));
}

std::vector<Monomial> SquarefreeMonomialIdeal::monomials() const {
  std::vector<Monomial> out;
  for (VarMask g : generators_) out.push_back(Monomial::from_mask(g));
  return out;
}

bool SquarefreeMonomialIdeal::contains(VarMask monomial) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [monomial](VarMask g) { return (g & ~monomial) == 0; });
}

VarMask SquarefreeMonomialIdeal::support() const {
  VarMask s = 0;
  for (VarMask g : generators_) s |= g;
  return s;
}

std::vector<VarMask> it_generator_list(const Graph& g, const Forest& t) {
  if (!t.spans(g)) throw std::invalid_argument("forest does not span the graph");
  const int n = g.n();
  const VariableLayout layout(n);
  const VarMask diag = layout.diagonal_mask();
  std::vector<VarMask> out;
  for (int i = 1; i <= n; ++i) out.push_back(diag & ~var_bit(layout.x(i, i)));
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      const auto path = tree_path(t, k, l);
      if (!path) {
        out.push_back((diag & ~var_bit(layout.x(k, k)) & ~var_bit(layout.x(l, l))) |
                      var_bit(layout.x(k, l)));
        continue;
      }
      VarMask m = diag;
      for (std::size_t i = 0; i < path->size(); ++i) {
        m &= ~var_bit(layout.x((*path)[i], (*path)[i]));
        if (i > 0) m |= var_bit(layout.x((*path)[i - 1], (*path)[i]));
      }
      out.push_back(m);
    }
  }
  return out;
}

SquarefreeMonomialIdeal it_generators(const Graph& g, const Forest& t) {
  return SquarefreeMonomialIdeal(it_generator_list(g, t));
}

SquarefreeMonomialIdeal diagonal_ideal(int n) {
  const Graph g = Graph::edgeless(n);
  return it_generators(g, spanning_forest(g));
}

SquarefreeMonomialIdeal substitute_ideal(const SquarefreeMonomialIdeal& ideal, VarMask z) {
  std::vector<VarMask> kept;
  for (VarMask g : ideal.generators())
    if ((g & z) == 0) kept.push_back(g);
  return SquarefreeMonomialIdeal(std::move(kept));
}

FaceVector face_vector(const SquarefreeMonomialIdeal& ideal, int num_vars) {
  if (num_vars < 0 || num_vars > kMaxVariables) throw std::invalid_argument("variable count out of range");
  const VarMask universe = num_vars == 64 ? ~VarMask{0} : (VarMask{1} << num_vars) - 1;
  return face_vector(ideal, universe);
}

FaceVector face_vector(const SquarefreeMonomialIdeal& ideal, VarMask universe) {
  if (std::popcount(universe) <= kSubsetEnumerationLimit) return face_vector_by_enumeration(ideal, universe);
  return face_vector_by_inclusion_exclusion(ideal, universe);
}

namespace {

// Generators as masks over the compressed universe (bit i = i-th variable of
// the universe). Generators leaving the universe are rejected.
std::vector<std::uint32_t> compress(const SquarefreeMonomialIdeal& ideal, VarMask universe) {
  std::vector<int> position(kMaxVariables, -1);
  int next = 0;
  for (VarMask u = universe; u != 0; u &= u - 1) position[std::countr_zero(u)] = next++;
  std::vector<std::uint32_t> out;
  for (VarMask g : ideal.generators()) {
    if ((g & ~universe) != 0) throw std::invalid_argument("generator uses a variable outside the universe");
    std::uint32_t c = 0;
    for (VarMask s = g; s != 0; s &= s - 1) c |= std::uint32_t{1} << position[std::countr_zero(s)];
    out.push_back(c);
  }
  return out;
}

}  // namespace

FaceVector face_vector_by_enumeration(const SquarefreeMonomialIdeal& ideal, VarMask universe) {
  const int vars = std::popcount(universe);
  if (vars > kSubsetEnumerationLimit + 4) {
    throw ResourceLimit("subset enumeration over " + std::to_string(vars) + " variables");
  }
  const auto gens = compress(ideal, universe);
  const std::size_t total = std::size_t{1} << vars;
  // in_ideal[mask] after an upward closure over single-bit extensions.
  std::vector<std::uint8_t> in_ideal(total, 0);
  for (auto g : gens) in_ideal[g] = 1;
  for (int b = 0; b < vars; ++b) {
    const std::size_t bitb = std::size_t{1} << b;
    for (std::size_t mask = 0; mask < total; ++mask)
      if (mask & bitb) in_ideal[mask] |= in_ideal[mask ^ bitb];
  }
  std::vector<long long> counts(vars + 1, 0);
  for (std::size_t mask = 0; mask < total; ++mask)
    if (!in_ideal[mask]) ++counts[std::popcount(mask)];
  FaceVector f;
  for (long long c : counts) f.counts.emplace_back(static_cast<long>(c));
  return f;
}

FaceVector face_vector_by_inclusion_exclusion(const SquarefreeMonomialIdeal& ideal, VarMask universe) {
  const int vars = std::popcount(universe);
  for (VarMask g : ideal.generators())
    if ((g & ~universe) != 0) throw std::invalid_argument("generator uses a variable outside the universe");
  const auto& gens = ideal.generators();
  if (gens.size() > 30) {
    throw ResourceLimit("inclusion-exclusion over " + std::to_string(gens.size()) + " generators");
  }
  // signed[s] = sum over nonempty generator subsets whose lcm has s variables
  // of (-1)^{|subset|+1}.
  std::vector<long long> signed_by_size(vars + 1, 0);
  std::function<void(std::size_t, VarMask, int)> walk = [&](std::size_t i, VarMask lcm, int parity) {
    if (i == gens.size()) {
      if (parity != 0) signed_by_size[std::popcount(lcm)] += parity;
      return;
    }
    walk(i + 1, lcm, parity);
    walk(i + 1, lcm | gens[i], parity == 0 ? 1 : -parity);
  };
  walk(0, 0, 0);
  FaceVector f;
  for (int d = 0; d <= vars; ++d) {
    Integer inside = 0;
    for (int s = 0; s <= d; ++s)
      if (signed_by_size[s] != 0) inside += Integer(static_cast<long>(signed_by_size[s])) * binomial(vars - s, d - s);
    f.counts.push_back(binomial(vars, d) - inside);
  }
  return f;
}

int ideal_height(const SquarefreeMonomialIdeal& ideal) {
  if (ideal.is_zero()) return 0;
  const auto& gens = ideal.generators();
  for (VarMask g : gens)
    if (g == 0) throw std::invalid_argument("the unit ideal has no minimal primes");
  int best = std::popcount(ideal.support());
  std::function<void(VarMask, int)> search = [&](VarMask chosen, int size) {
    if (size >= best) return;
    // Greedy packing of pairwise disjoint uncovered generators bounds the rest.
    VarMask packed = 0;
    int lower = 0;
    VarMask branch = 0;
    for (VarMask g : gens) {
      if (g & chosen) continue;
      if (branch == 0 || std::popcount(g) < std::popcount(branch)) branch = g;
      if ((g & packed) == 0) {
        packed |= g;
        ++lower;
      }
    }
    if (branch == 0) {
      best = size;
      return;
    }
    if (size + lower >= best) return;
    for (VarMask s = branch; s != 0; s &= s - 1) search(chosen | (s & -s), size + 1);
  };
  search(0, 0);
  return best;
}

SquarefreeMonomialIdeal initial_ideal_of_minors(const Graph& g, const Forest& t, MinorMatrix which) {
  const SparseSymmetricMatrix m = which == MinorMatrix::generic ? build_generic(g.n()) : build_matrix(g);
  const auto order = CompositeWeightOrder::for_forest(m.layout, g, t);
  std::vector<Monomial> leads;
  for (const auto& minor : minor_generators(m)) {
    if (minor.value.is_zero()) continue;
    const Polynomial in = initial_form(minor.value, order, false);
    if (!in.is_term()) {
      throw ContractViolation("weight-initial form of minor (" + std::to_string(minor.k) + "," +
                              std::to_string(minor.l) + ") has " + std::to_string(in.size()) +
                              " terms: " + to_string(in, m.layout));
    }
    const Monomial lead = in.terms().begin()->first;
    if (!lead.is_squarefree()) {
      throw ContractViolation("initial term of minor (" + std::to_string(minor.k) + "," +
                              std::to_string(minor.l) + ") is not square-free");
    }
    leads.push_back(lead);
  }
  return SquarefreeMonomialIdeal::from_monomials(leads);
}

}  // namespace sparsesym
