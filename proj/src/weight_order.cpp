#include "sparsesym/weight_order.hpp"

#include <bit>
#include <stdexcept>

namespace sparsesym {

WeightVector::WeightVector(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw std::invalid_argument("weight vector longer than the variable limit");
  }
  for (int w : weights_)
    if (w < 0) throw std::invalid_argument("weights must be nonnegative");
}

WeightVector WeightVector::for_graph(const VariableLayout& layout, const Graph& g) {
  if (g.n() != layout.n()) throw std::invalid_argument("graph and layout sizes differ");
  std::vector<int> w(layout.num_vars(), 1);
  for (int i = 0; i < layout.num_matrix_vars(); ++i) {
    const auto [a, b] = layout.indices(VariableId{i});
    w[i] = (a == b || g.has_edge(a, b)) ? 2 : 1;
  }
  return WeightVector(std::move(w));
}

WeightVector WeightVector::diagonal(const VariableLayout& layout) {
  return for_graph(layout, Graph::edgeless(layout.n()));
}

int weight_of(const Monomial& m, const WeightVector& w) {
  int total = 0;
  for (VarMask s = m.support(); s != 0; s &= s - 1) {
    const VariableId v{std::countr_zero(s)};
    if (static_cast<std::size_t>(v.index) >= w.size()) {
      throw std::invalid_argument("monomial uses a variable without weight");
    }
    total += m.exponent(v) * w[v];
  }
  return total;
}

int weighted_degree(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) throw std::invalid_argument("weighted degree of the zero polynomial");
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const int x = weight_of(m, w);
    if (first || x > best) best = x;
    first = false;
  }
  return best;
}

CompositeWeightOrder::CompositeWeightOrder(std::vector<WeightVector> weights)
    : weights_(std::move(weights)) {}

CompositeWeightOrder CompositeWeightOrder::for_forest(const VariableLayout& layout, const Graph& g,
                                                      const Forest& t) {
  if (!t.spans(g)) throw std::invalid_argument("forest does not span the graph");
  return CompositeWeightOrder({WeightVector::for_graph(layout, g),
                               WeightVector::for_graph(layout, t.as_graph()),
                               WeightVector::diagonal(layout)});
}

std::strong_ordering CompositeWeightOrder::compare_weights(const Monomial& a, const Monomial& b) const {
  for (const WeightVector& w : weights_) {
    if (auto c = weight_of(a, w) <=> weight_of(b, w); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < kMaxVariables; ++i) {
    const VariableId v{i};
    if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering CompositeWeightOrder::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = compare_weights(a, b); c != 0) return c;
  return compare_grlex(a, b);
}

Polynomial initial_form(const Polynomial& p, const CompositeWeightOrder& order, bool use_tiebreak) {
  if (p.is_zero()) throw std::invalid_argument("initial form of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (best == nullptr || order.compare(*best, m) < 0) best = &m;
  }
  if (use_tiebreak) return Polynomial::term(*best, p.coefficient(*best));
  Polynomial out;
  for (const auto& [m, c] : p.terms())
    if (order.compare_weights(m, *best) == 0) out += Polynomial::term(m, c);
  return out;
}

Monomial leading_monomial(const Polynomial& p, const CompositeWeightOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms())
    if (best == nullptr || order.compare(*best, m) < 0) best = &m;
  return *best;
}

}  // namespace sparsesym
