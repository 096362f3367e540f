#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sparsesym/graph.hpp"
#include "sparsesym/poly_matrix.hpp"

namespace sparsesym {

/// Free module of a graded complex: one twist and one basis label per summand.
struct FreeModule {
  std::vector<int> twists;
  std::vector<std::string> labels;

  std::size_t rank() const { return twists.size(); }
  bool operator==(const FreeModule&) const = default;
};

/// Length-three complex F3 -> F2 -> F1 -> F0 = R of free modules over
/// K[x_ij][t]. Differential i maps F_i to F_{i-1}; its matrix has one column
/// per summand of F_i. Empty modules are allowed.
class GradedComplex {
 public:
  GradedComplex(int n, std::vector<FreeModule> modules, std::vector<PolyMatrix> maps);

  int n() const { return n_; }
  VariableLayout layout() const { return VariableLayout(n_); }
  /// F_i for i = 0..3.
  const FreeModule& module(int i) const { return modules_.at(i); }
  /// d_i for i = 1..3.
  const PolyMatrix& differential(int i) const { return maps_.at(i - 1); }
  int length() const { return static_cast<int>(maps_.size()); }

  /// Same matrices, ignoring twists and labels.
  bool same_entries(const GradedComplex& other) const;

 private:
  int n_;
  std::vector<FreeModule> modules_;
  std::vector<PolyMatrix> maps_;
};

/// Position of a nonzero entry of d_i * d_{i+1}.
struct CompositionWitness {
  int map = 0;  // i
  std::size_t row = 0;
  std::size_t col = 0;
};

/// First nonzero entry of a consecutive composition, if any.
std::optional<CompositionWitness> find_nonzero_composition(const GradedComplex& c);
/// Throws ContractViolation when some composition is nonzero.
void require_complex(const GradedComplex& c);

/// Basis positions in the free modules of the generic complex.
std::size_t sym_index(int n, int i, int j);                 // E_ij, i <= j, in F1
std::size_t traceless_diag_index(int n, int i);             // E_ii - E_11, i > 1, in F2
std::size_t matrix_unit_index(int n, int i, int j);         // E_ij, i != j, in F2
std::size_t alternating_index(int n, int i, int j);         // E_ij - E_ji, i < j, in F3

/// The resolution L(X) of R/I_{n-1}(X) with twists n-1, n, n+1. The
/// composition-zero property is checked on construction.
GradedComplex jozefiak_complex(int n);

/// Homogenization of the generic complex with respect to w_G and t (weight
/// one). Twists of the result are w_G-degrees.
GradedComplex homogenize(const GradedComplex& c, const Graph& g);

/// Entrywise substitution.
struct Substitution {
  enum class Kind { identity, t_value, zero_vars };
  Kind kind = Kind::identity;
  int t_value = 0;
  VarMask vars = 0;

  static Substitution identity() { return {}; }
  static Substitution t_equals(int value) { return {Kind::t_value, value, 0}; }
  /// Z := 0 for the non-edges of g.
  static Substitution zeros_of(const Graph& g);
};

GradedComplex specialize(const GradedComplex& c, const Substitution& sub);

/// Deletes zero columns of d_1 with the matching rows of d_2, then the zero
/// columns this leaves in d_2 with the rows of d_3, then zero columns of d_3.
GradedComplex prune(const GradedComplex& c);

/// Split of the homogenized complex into summands of the top w_G-degree
/// 2(n-1) + 2(i-1) ("full") and of smaller degree ("small"), with the blocks
/// [d_i]^h = (A_i B_i; C_i D_i): rows small/full of F_{i-1}, columns small/full of F_i.
struct BlockStructure {
  GradedComplex homogenized;
  std::array<std::vector<std::size_t>, 4> small;
  std::array<std::vector<std::size_t>, 4> full;

  PolyMatrix block_a(int i) const;
  PolyMatrix block_b(int i) const;
  PolyMatrix block_c(int i) const;
  PolyMatrix block_d(int i) const;

  // Blocks of the unhomogenized generic complex. Gamma_2: rows E_ii of d_2 by
  // the columns E_ij; Delta_2: rows E_ij (i < j) by the columns E_ij.
  // Gamma_3: rows E_ii - E_11 of d_3; Delta_3: the remaining rows.
  PolyMatrix gamma2;
  PolyMatrix delta2;
  PolyMatrix gamma3;
  PolyMatrix delta3;
};

BlockStructure block_structure(const GradedComplex& generic, const Graph& g);

enum class ProbeVerdict { pass, fail, inconclusive };

const char* to_string(ProbeVerdict v);

struct ProbeResult {
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  std::array<std::size_t, 3> sizes{};  // columns of d_1, d_2, d_3
  std::array<std::size_t, 3> ranks{};  // ranks at the last evaluated point
  int trials_used = 0;
};

/// Evidence for exactness: ranks of the differentials at random points mod
/// `prime`. Passes when some point gives rank d_1 = 1, rank d_2 = cols d_1 - 1
/// and rank d_3 = cols d_2 - rank d_2 = cols d_3. Fails only when the column
/// counts make exactness impossible. Throws ContractViolation when a
/// composition is nonzero and std::invalid_argument for a non-prime.
ProbeResult exactness_probe(const GradedComplex& c, std::uint64_t prime, int trials, std::uint64_t seed);

}  // namespace sparsesym
