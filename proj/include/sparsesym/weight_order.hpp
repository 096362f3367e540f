#pragma once

#include <vector>

#include "sparsesym/graph.hpp"
#include "sparsesym/polynomial.hpp"

namespace sparsesym {

/// Nonnegative integer weight per variable.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> weights);

  /// 2 on the diagonal and on edges of g, 1 on non-edges; t has weight 1.
  static WeightVector for_graph(const VariableLayout& layout, const Graph& g);
  /// for_graph of the edgeless graph.
  static WeightVector diagonal(const VariableLayout& layout);

  int operator[](VariableId v) const { return weights_[v.index]; }
  std::size_t size() const { return weights_.size(); }

 private:
  std::vector<int> weights_;
};

/// Weighted degree of m.
int weight_of(const Monomial& m, const WeightVector& w);

/// Largest weighted degree among the terms of p (p nonzero).
int weighted_degree(const Polynomial& p, const WeightVector& w);

/// Sequence of weight vectors compared in order, refined by graded
/// lexicographic order on the variable indices (lower index = larger variable).
class CompositeWeightOrder {
 public:
  explicit CompositeWeightOrder(std::vector<WeightVector> weights);

  /// The order <_{T,G}: w_G first, then w_T, then w_diag.
  static CompositeWeightOrder for_forest(const VariableLayout& layout, const Graph& g,
                                         const Forest& t);

  const std::vector<WeightVector>& weights() const { return weights_; }

  /// Compares by the weight sequence only.
  std::strong_ordering compare_weights(const Monomial& a, const Monomial& b) const;
  /// Total monomial order: weights, then graded lex.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

 private:
  std::vector<WeightVector> weights_;
};

/// Graded lexicographic comparison with x_0 > x_1 > ... .
std::strong_ordering compare_grlex(const Monomial& a, const Monomial& b);

/// Initial form of a nonzero p. With the tie-break this is the single leading
/// term; without it, the sum of all terms maximal for the weight sequence.
Polynomial initial_form(const Polynomial& p, const CompositeWeightOrder& order, bool use_tiebreak);

/// Leading monomial for the tie-broken order.
Monomial leading_monomial(const Polynomial& p, const CompositeWeightOrder& order);

}  // namespace sparsesym
