#pragma once

#include "sparsesym/monomial_ideal.hpp"

namespace sparsesym {

/// C(m, k), zero unless 0 <= k <= m.
Integer binomial(long long m, long long k);

/// HF of a polynomial ring in `vars` variables in degree d (zero for d < 0).
Integer polynomial_ring_hf(long long vars, long long d);

/// HF(R / I_Delta)(d) = sum_i f_{i-1} C(d-1, i-1).
Integer hilbert_from_faces(const FaceVector& f, long long d);

/// HF(I_{n-1}(X))(d), closed three-binomial form.
Integer hf_closed_form(int n, long long d);

/// HF(I)(d) by peeling the generators of I one short exact sequence at a time:
/// off-diagonal generators first, then the diagonal products in index order.
Integer hf_recursion(int n, long long d);

}  // namespace sparsesym
