#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include "sparsesym/variables.hpp"

namespace sparsesym {

inline constexpr int kMaxVariables = 64;

/// Exponent vector over at most kMaxVariables variables.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VariableId v, int exponent = 1);
  /// Square-free monomial with the variables of `mask`.
  static Monomial from_mask(VarMask mask);

  int exponent(VariableId v) const { return exps_[v.index]; }
  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;
  VarMask support() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (support() & other.support()) == 0; }

  /// Storage order only (lexicographic on raw exponents); not a monomial order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

}  // namespace sparsesym
