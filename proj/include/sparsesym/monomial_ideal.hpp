#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "sparsesym/graph.hpp"
#include "sparsesym/monomial.hpp"

namespace sparsesym {

using Integer = mpz_class;

/// Square-free monomial ideal stored as its minimal generators (bitmasks).
class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal() = default;
  /// Removes duplicates and non-minimal generators.
  explicit SquarefreeMonomialIdeal(std::vector<VarMask> generators);
  /// Throws std::invalid_argument for a monomial that is not square-free.
  static SquarefreeMonomialIdeal from_monomials(const std::vector<Monomial>& generators);

  const std::vector<VarMask>& generators() const { return generators_; }
  std::vector<Monomial> monomials() const;
  std::size_t size() const { return generators_.size(); }
  bool is_zero() const { return generators_.empty(); }
  /// Membership of a square-free monomial given by its support.
  bool contains(VarMask monomial) const;
  VarMask support() const;

  bool operator==(const SquarefreeMonomialIdeal&) const = default;

 private:
  std::vector<VarMask> generators_;  // sorted
};

/// Generators of I_T, one per index pair, in minor order: n products of n-1
/// diagonal variables, then one generator per pair k < l (different trees of
/// T, or a path of T).
std::vector<VarMask> it_generator_list(const Graph& g, const Forest& t);
SquarefreeMonomialIdeal it_generators(const Graph& g, const Forest& t);
/// I: the ideal I_T for the edgeless forest.
SquarefreeMonomialIdeal diagonal_ideal(int n);

/// Sets the variables of z to zero: drops generators meeting z.
SquarefreeMonomialIdeal substitute_ideal(const SquarefreeMonomialIdeal& ideal, VarMask z);

/// counts[i] = number of square-free degree-i monomials outside the ideal,
/// i.e. f_{i-1} of the Stanley-Reisner complex.
struct FaceVector {
  std::vector<Integer> counts;

  /// f_{dim}, dim >= -1.
  const Integer& f(int dim) const { return counts.at(dim + 1); }
  bool operator==(const FaceVector&) const = default;
};

inline constexpr int kSubsetEnumerationLimit = 24;

/// Face vector over the first num_vars variables. Subset enumeration up to
/// kSubsetEnumerationLimit variables, inclusion-exclusion above.
FaceVector face_vector(const SquarefreeMonomialIdeal& ideal, int num_vars);
/// Face vector over the variables of `universe`.
FaceVector face_vector(const SquarefreeMonomialIdeal& ideal, VarMask universe);
FaceVector face_vector_by_enumeration(const SquarefreeMonomialIdeal& ideal, VarMask universe);
FaceVector face_vector_by_inclusion_exclusion(const SquarefreeMonomialIdeal& ideal, VarMask universe);

/// Minimum vertex cover of the generator hypergraph (the height). Zero for the
/// zero ideal; throws std::invalid_argument for the unit ideal.
int ideal_height(const SquarefreeMonomialIdeal& ideal);

enum class MinorMatrix { generic, sparse };

/// Initial ideal of the submaximal minors of X (generic) or X_G (sparse) for
/// the order <_{T,G}. Throws ContractViolation when the weight-initial form of
/// a minor has more than one term.
SquarefreeMonomialIdeal initial_ideal_of_minors(const Graph& g, const Forest& t,
                                                MinorMatrix which = MinorMatrix::sparse);

}  // namespace sparsesym
