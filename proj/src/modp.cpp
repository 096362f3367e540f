#include "sparsesym/modp.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "sparsesym/errors.hpp"

namespace sparsesym {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  for (; e != 0; e >>= 1) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::invalid_argument("zero has no inverse");
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  const std::uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
  if (d == 0) throw RetryWithNewPrime("denominator divisible by the probe prime");
  const std::uint64_t a = mpz_fdiv_ui(num.get_mpz_t(), p);
  return mul_mod(a, inv_mod(d, p), p);
}

std::uint64_t evaluate_mod_p(const Polynomial& poly, std::span<const std::uint64_t> point,
                             std::uint64_t prime) {
  if (prime < 2 || prime > (std::uint64_t{1} << 62)) throw std::invalid_argument("prime out of range");
  std::uint64_t total = 0;
  for (const auto& [m, c] : poly.terms()) {
    std::uint64_t value = reduce_mod(c, prime);
    for (VarMask s = m.support(); s != 0; s &= s - 1) {
      const int v = std::countr_zero(s);
      if (static_cast<std::size_t>(v) >= point.size()) {
        throw std::invalid_argument("evaluation point does not assign every variable");
      }
      value = mul_mod(value, pow_mod(point[v], m.exponent(VariableId{v}), prime), prime);
    }
    total = (total + value) % prime;
  }
  return total;
}

ModMatrix evaluate_mod_p(const PolyMatrix& m, std::span<const std::uint64_t> point,
                         std::uint64_t prime) {
  ModMatrix out(m.rows(), std::vector<std::uint64_t>(m.cols(), 0));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = evaluate_mod_p(m(r, c), point, prime);
  return out;
}

std::size_t rank_mod_p(ModMatrix m, std::uint64_t prime) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    const std::uint64_t inv = inv_mod(m[rank][c], prime);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const std::uint64_t factor = mul_mod(m[r][c], inv, prime);
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = (m[r][k] + prime - mul_mod(factor, m[rank][k], prime)) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace sparsesym
