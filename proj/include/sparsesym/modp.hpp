#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sparsesym/poly_matrix.hpp"

namespace sparsesym {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue modulo the prime p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t p);

/// Residue of a rational; throws RetryWithNewPrime when p divides the denominator.
std::uint64_t reduce_mod(const Rational& q, std::uint64_t p);

/// Evaluates p at `point` (indexed by VariableId) modulo `prime`. Every
/// variable occurring in p must be covered by `point`.
std::uint64_t evaluate_mod_p(const Polynomial& p, std::span<const std::uint64_t> point,
                             std::uint64_t prime);

using ModMatrix = std::vector<std::vector<std::uint64_t>>;

ModMatrix evaluate_mod_p(const PolyMatrix& m, std::span<const std::uint64_t> point,
                         std::uint64_t prime);

/// Rank over F_p by Gaussian elimination (the argument is consumed).
std::size_t rank_mod_p(ModMatrix m, std::uint64_t prime);

}  // namespace sparsesym
