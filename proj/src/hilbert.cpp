#include "sparsesym/hilbert.hpp"

#include <stdexcept>

namespace sparsesym {

Integer binomial(long long m, long long k) {
  if (m < 0 || k < 0 || k > m) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
  return out;
}

Integer polynomial_ring_hf(long long vars, long long d) {
  if (d < 0) return 0;
  if (vars == 0) return d == 0 ? 1 : 0;
  return binomial(vars - 1 + d, vars - 1);
}

Integer hilbert_from_faces(const FaceVector& f, long long d) {
  if (d < 0) return 0;
  if (d == 0) return f.counts.empty() ? Integer(0) : f.counts[0];
  Integer total = 0;
  for (std::size_t i = 1; i < f.counts.size(); ++i) total += f.counts[i] * binomial(d - 1, static_cast<long long>(i) - 1);
  return total;
}

Integer hf_closed_form(int n, long long d) {
  if (n < 2) throw std::invalid_argument("hf_closed_form requires n >= 2");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  const long long c2 = static_cast<long long>(n) * (n - 1) / 2;        // C(n, 2)
  const long long c2p = static_cast<long long>(n) * (n + 1) / 2;       // C(n+1, 2)
  return binomial(c2 + d, c2p - 1) + Integer(n - 1) * binomial(c2 - 1 + d, c2p - 2) +
         Integer(static_cast<long>(c2)) * binomial(c2 - 2 + d, c2p - 3);
}

Integer hf_recursion(int n, long long d) {
  if (n < 2) throw std::invalid_argument("hf_recursion requires n >= 2");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  const long long vars = static_cast<long long>(n) * (n + 1) / 2;
  const long long shift = d - (n - 1);

  // HF(R/I) = HF(R/I_1) - HF(R/(x_kk, x_ll))(d-n+1) for each off-diagonal
  // generator removed, C(n, 2) times, leaving J.
  Integer correction = 0;
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) correction += polynomial_ring_hf(vars - 2, shift);

  // HF(R/J) = HF(R/J_1) - HF(R/(x_11))(d-n+1), ..., down to J_{n-1}, which is
  // principal: HF(R/J_{n-1}) = HF(R) - HF(R)(d-n+1).
  for (int j = 1; j <= n - 1; ++j) correction += polynomial_ring_hf(vars - 1, shift);
  const Integer quotient_j = polynomial_ring_hf(vars, d) - polynomial_ring_hf(vars, shift);

  const Integer quotient_i = quotient_j - correction;
  return polynomial_ring_hf(vars, d) - quotient_i;
}

}  // namespace sparsesym
