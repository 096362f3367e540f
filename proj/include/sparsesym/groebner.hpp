#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sparsesym/monomial_ideal.hpp"
#include "sparsesym/weight_order.hpp"

namespace sparsesym {

/// Remainder of multivariate division of p by gens for the tie-broken order:
/// no term of the result is divisible by a leading monomial of gens. The first
/// applicable generator in list order is used at each step.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                       const CompositeWeightOrder& order);

struct GroebnerReport {
  bool is_groebner = false;
  std::size_t pairs_total = 0;
  std::size_t pairs_skipped = 0;  // coprime leading monomials
  /// First S-pair (generator indices) with nonzero remainder.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  Polynomial witness_remainder;

  explicit operator bool() const { return is_groebner; }
};

inline constexpr std::size_t kDefaultPairCap = 5000;

/// Checks that every S-polynomial of gens reduces to zero. Verification only:
/// no basis completion. Throws ResourceLimit when C(|gens|, 2) > pair_cap.
GroebnerReport buchberger_check(const std::vector<Polynomial>& gens, const CompositeWeightOrder& order,
                                std::size_t pair_cap = kDefaultPairCap);

/// Number of square-free monomials of degree d in the first num_vars
/// variables that lie in the ideal, by exhaustive enumeration.
Integer sqfree_count(const SquarefreeMonomialIdeal& ideal, int d, int num_vars);

}  // namespace sparsesym
