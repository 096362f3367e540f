#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "sparsesym/complex.hpp"

namespace sparsesym {

/// Graded Betti numbers beta_{i,j}; absent entries are zero.
class BettiTable {
 public:
  long long get(int i, int j) const;
  void add(int i, int j, long long count);
  /// sum over j of beta_{i,j}.
  long long total(int i) const;
  /// Largest i with a nonzero entry.
  int projective_dimension() const;
  /// max over nonzero entries of j - i.
  int regularity() const;
  const std::map<std::pair<int, int>, long long>& entries() const { return entries_; }

  bool operator==(const BettiTable&) const = default;

 private:
  std::map<std::pair<int, int>, long long> entries_;
};

/// Counts summands of each F_i by twist, with beta_{0,0} = 1.
BettiTable betti_table(const GradedComplex& c);

struct BettiReport {
  BettiTable table;
  int regularity = 0;            // of the ideal: n - 1
  int projective_dimension = 0;  // of R / I
  bool reduced = true;
  bool cohen_macaulay = false;
  int height = 0;
  bool perfect = false;
};

/// Closed-form Betti table of R / I_{n-1}(X_G) from n and D_G.
BettiReport betti_formula(int n, long long d);

struct HilbertSeriesData {
  std::vector<long long> numerator;          // coefficient of t^k at index k
  int denominator_exponent = 0;              // N_G
  std::vector<long long> reduced_numerator;  // after cancelling (1 - t)^codimension
  int codimension = 0;
  long long degree = 0;
};

/// Hilbert series of R_G / I from a resolution-shaped Betti table. Throws
/// ContractViolation when the power of (1 - t) dividing the numerator differs
/// from the codimension the table predicts.
HilbertSeriesData hilbert_series(const BettiTable& b, int n_g);

struct CharacteristicNumbers {
  long long two_hyperplanes = 0;                 // (n-1)^2 - D_G
  std::optional<long long> three_hyperplanes;    // connected graphs only
};

CharacteristicNumbers characteristic_numbers(int n, long long d, bool connected);

}  // namespace sparsesym
