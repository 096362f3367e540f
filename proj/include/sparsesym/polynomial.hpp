#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "sparsesym/monomial.hpp"

namespace sparsesym {

using Rational = mpq_class;

/// Sparse polynomial over Q. Terms with zero coefficient are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit scalars read naturally
  Polynomial(int constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial variable(VariableId v) { return term(Monomial::variable(v), 1); }
  static Polynomial term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  /// Single term with any nonzero coefficient.
  bool is_term() const { return terms_.size() == 1; }
  int total_degree() const;
  VarMask support() const;
  /// Every term is divisible by v (false for the zero polynomial).
  bool divisible_by(VariableId v) const;
  /// Coefficient of m (zero when absent).
  Rational coefficient(const Monomial& m) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  /// Adds c * m * other in place.
  void add_scaled(const Polynomial& other, const Rational& c, const Monomial& m);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend Polynomial operator*(const Monomial& m, const Polynomial& p);

  /// Drops every term containing a variable of `vars`.
  Polynomial substitute_zero(VarMask vars) const;
  /// Replaces v by the constant `value`.
  Polynomial substitute(VariableId v, const Rational& value) const;

  bool operator==(const Polynomial&) const = default;

 private:
  void insert(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Human-readable rendering such as "x_1_1*x_2_2 - x_1_2^2".
std::string to_string(const Polynomial& p, const VariableLayout& layout);

}  // namespace sparsesym
