#include "sparsesym/betti.hpp"

#include <stdexcept>
#include <string>

#include "sparsesym/errors.hpp"

namespace sparsesym {

long long BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, int j, long long count) {
  if (count < 0) throw std::invalid_argument("Betti numbers are nonnegative");
  if (count == 0) return;
  entries_[{i, j}] += count;
}

long long BettiTable::total(int i) const {
  long long sum = 0;
  for (const auto& [key, value] : entries_)
    if (key.first == i) sum += value;
  return sum;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [key, value] : entries_) p = std::max(p, key.first);
  return p;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [key, value] : entries_) r = std::max(r, key.second - key.first);
  return r;
}

BettiTable betti_table(const GradedComplex& c) {
  BettiTable table;
  table.add(0, 0, 1);
  for (int i = 1; i <= c.length(); ++i)
    for (int twist : c.module(i).twists) table.add(i, twist, 1);
  return table;
}

BettiReport betti_formula(int n, long long d) {
  if (n < 2) throw std::invalid_argument("betti_formula requires n >= 2");
  const long long c2 = static_cast<long long>(n) * (n - 1) / 2;
  const long long c2p = static_cast<long long>(n) * (n + 1) / 2;
  if (d < 0 || d > c2) {
    throw std::invalid_argument("D_G = " + std::to_string(d) + " outside [0, " + std::to_string(c2) + "]");
  }
  BettiReport report;
  report.table.add(0, 0, 1);
  report.table.add(1, n - 1, c2p - d);
  report.table.add(2, n, static_cast<long long>(n) * n - 1 - 2 * d);
  report.table.add(3, n + 1, c2 - d);
  report.regularity = n - 1;
  report.projective_dimension = d == c2 ? 2 : 3;
  report.reduced = true;
  report.cohen_macaulay = d == 0 || d == c2;
  report.height = d == 0 ? 3 : 2;
  report.perfect = report.cohen_macaulay;
  return report;
}

HilbertSeriesData hilbert_series(const BettiTable& b, int n_g) {
  if (n_g < 1) throw std::invalid_argument("ambient variable count must be positive");
  HilbertSeriesData data;
  data.denominator_exponent = n_g;
  for (const auto& [key, value] : b.entries()) {
    const auto [i, j] = key;
    if (j < 0) throw std::invalid_argument("negative twist in Betti table");
    if (data.numerator.size() <= static_cast<std::size_t>(j)) data.numerator.resize(j + 1, 0);
    data.numerator[j] += (i % 2 == 0 ? 1 : -1) * value;
  }

  // Divide by (1 - t) while it divides: remainder is the value at t = 1.
  std::vector<long long> current = data.numerator;
  int codim = 0;
  auto value_at_one = [](const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  while (!current.empty() && value_at_one(current) == 0) {
    // p(t) = (1 - t) q(t)  =>  q_k = sum_{m <= k} p_m.
    std::vector<long long> q(current.size() - 1, 0);
    long long running = 0;
    for (std::size_t k = 0; k + 1 < current.size(); ++k) {
      running += current[k];
      q[k] = running;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    current = std::move(q);
    ++codim;
  }
  if (current.empty()) throw ContractViolation("Hilbert series numerator vanishes identically");
  if (codim > n_g) throw ContractViolation("codimension exceeds the number of variables");

  // Predicted codimension from the resolution shape: beta_{1,n-1} = C(n+1,2) - D.
  int gen_degree = -1;
  long long beta1 = 0;
  for (const auto& [key, value] : b.entries()) {
    if (key.first != 1) continue;
    if (gen_degree >= 0 && key.second != gen_degree) {
      throw ContractViolation("Betti table is not of resolution shape");
    }
    gen_degree = key.second;
    beta1 = value;
  }
  if (gen_degree >= 0) {
    const long long n = gen_degree + 1;
    const long long d = n * (n + 1) / 2 - beta1;
    const int expected = d == 0 ? 3 : 2;
    if (codim != expected) {
      throw ContractViolation("numerator divisible by (1-t)^" + std::to_string(codim) + ", expected (1-t)^" +
                              std::to_string(expected));
    }
  }

  data.codimension = codim;
  data.reduced_numerator = current;
  data.degree = value_at_one(current);
  return data;
}

CharacteristicNumbers characteristic_numbers(int n, long long d, bool connected) {
  if (n < 3) throw std::invalid_argument("characteristic numbers need n >= 3");
  const long long m = n - 1;
  CharacteristicNumbers out;
  out.two_hyperplanes = m * m - d;
  if (connected) {
    const long long c3 = static_cast<long long>(n + 1) * n * (n - 1) / 6;
    out.three_hyperplanes = m * m * m - c3;
  }
  return out;
}

}  // namespace sparsesym
