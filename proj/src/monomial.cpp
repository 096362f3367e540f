#include "sparsesym/monomial.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace sparsesym {

Monomial Monomial::variable(VariableId v, int exponent) {
  if (v.index < 0 || v.index >= kMaxVariables) throw std::invalid_argument("variable index out of range");
  if (exponent < 0 || exponent > 255) throw std::invalid_argument("exponent out of range");
  Monomial m;
  m.exps_[v.index] = static_cast<std::uint8_t>(exponent);
  return m;
}

Monomial Monomial::from_mask(VarMask mask) {
  Monomial m;
  for (; mask != 0; mask &= mask - 1) m.exps_[std::countr_zero(mask)] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
}

VarMask Monomial::support() const {
  VarMask mask = 0;
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] != 0) mask |= VarMask{1} << i;
  return mask;
}

bool Monomial::divides(const Monomial& other) const {
  for (int i = 0; i < kMaxVariables; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVariables; ++i) {
    const int e = exps_[i] + other.exps_[i];
    if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial out;
  for (int i = 0; i < kMaxVariables; ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::invalid_argument("monomial division is not exact");
    out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - divisor.exps_[i]);
  }
  return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial out;
  for (int i = 0; i < kMaxVariables; ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return out;
}

}  // namespace sparsesym
