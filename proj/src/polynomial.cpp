#include "sparsesym/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace sparsesym {

namespace {

// GMP leaves fractions built from numerator and denominator unreduced.
Rational canonical(const Rational& q) {
  Rational out = q;
  out.canonicalize();
  return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, canonical(constant));
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
  Polynomial p;
  if (c != 0) p.terms_.emplace(m, canonical(c));
  return p;
}

void Polynomial::insert(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

VarMask Polynomial::support() const {
  VarMask mask = 0;
  for (const auto& [m, c] : terms_) mask |= m.support();
  return mask;
}

bool Polynomial::divisible_by(VariableId v) const {
  if (terms_.empty()) return false;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == 0) return false;
  return true;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) insert(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) insert(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

void Polynomial::add_scaled(const Polynomial& other, const Rational& c, const Monomial& m) {
  if (c == 0) return;
  const Rational factor = canonical(c);
  for (const auto& [om, oc] : other.terms_) insert(om * m, oc * factor);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.insert(ma * mb, ca * cb);
  return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  const Rational factor = canonical(c);
  Polynomial out = p;
  for (auto& [m, coeff] : out.terms_) coeff *= factor;
  return out;
}

Polynomial operator*(const Monomial& m, const Polynomial& p) {
  Polynomial out;
  for (const auto& [pm, c] : p.terms_) out.terms_.emplace_hint(out.terms_.end(), pm * m, c);
  return out;
}

Polynomial Polynomial::substitute_zero(VarMask vars) const {
  Polynomial out;
  for (const auto& [m, c] : terms_)
    if ((m.support() & vars) == 0) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

Polynomial Polynomial::substitute(VariableId v, const Rational& value) const {
  Polynomial out;
  const Monomial unit = Monomial::variable(v);
  const Rational factor = canonical(value);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Rational coeff = c;
    for (int e = m.exponent(v); e > 0; --e) {
      rest = rest / unit;
      coeff *= factor;
    }
    out.insert(rest, coeff);
  }
  return out;
}

std::string to_string(const Polynomial& p, const VariableLayout& layout) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest total degree first for readability.
  std::vector<std::pair<Monomial, Rational>> terms(p.terms().rbegin(), p.terms().rend());
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() > b.first.degree(); });
  for (const auto& [m, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string vars;
    for (int i = 0; i < layout.num_vars(); ++i) {
      const int e = m.exponent(VariableId{i});
      if (e == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += layout.name(VariableId{i});
      if (e > 1) vars += "^" + std::to_string(e);
    }
    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << "*" << vars;
    }
  }
  return out.str();
}

}  // namespace sparsesym
