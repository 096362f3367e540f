#pragma once

#include "sparsesym/graph.hpp"
#include "sparsesym/monomial.hpp"

namespace sparsesym {

/// Degree-preserving bijection from the square-free monomials of I to those of
/// I_T. Throws std::invalid_argument when m is not a square-free element of I.
Monomial bijection_fd(const Graph& g, const Forest& t, const Monomial& m);

}  // namespace sparsesym
