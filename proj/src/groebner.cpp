#include "sparsesym/groebner.hpp"

#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "sparsesym/errors.hpp"

namespace sparsesym {

namespace {

constexpr std::size_t kMaxWeights = 6;

// Sort key realizing CompositeWeightOrder::compare as a lexicographic tuple:
// weights, total degree, then raw exponents (grlex tie-break).
struct TermKey {
  std::array<int, kMaxWeights + 1> rank{};
  Monomial monomial;

  auto operator<=>(const TermKey&) const = default;
};

class KeyMaker {
 public:
  explicit KeyMaker(const CompositeWeightOrder& order) : order_(order) {
    if (order.weights().size() > kMaxWeights) throw std::invalid_argument("too many weight vectors");
  }

  TermKey operator()(const Monomial& m) const {
    TermKey key;
    std::size_t i = 0;
    for (const auto& w : order_.weights()) key.rank[i++] = weight_of(m, w);
    key.rank[kMaxWeights] = m.degree();
    key.monomial = m;
    return key;
  }

 private:
  const CompositeWeightOrder& order_;
};

using Working = std::map<TermKey, Rational>;

void accumulate(Working& w, const TermKey& key, const Rational& c) {
  auto [it, inserted] = w.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) w.erase(it);
  }
}

struct Divisor {
  Monomial lead;
  Rational lead_coeff;
  std::vector<std::pair<Monomial, Rational>> terms;
};

Divisor make_divisor(const Polynomial& g, const CompositeWeightOrder& order) {
  if (g.is_zero()) throw std::invalid_argument("zero generator");
  Divisor d;
  d.lead = leading_monomial(g, order);
  d.lead_coeff = g.coefficient(d.lead);
  d.terms.assign(g.terms().begin(), g.terms().end());
  return d;
}

Polynomial reduce(const Polynomial& p, const std::vector<Divisor>& divisors, const KeyMaker& key) {
  Working work;
  for (const auto& [m, c] : p.terms()) work.emplace(key(m), c);
  Polynomial remainder;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Monomial lead = top->first.monomial;
    const Rational coeff = top->second;
    const Divisor* hit = nullptr;
    for (const auto& d : divisors) {
      if (d.lead.divides(lead)) {
        hit = &d;
        break;
      }
    }
    if (hit == nullptr) {
      remainder += Polynomial::term(lead, coeff);
      work.erase(top);
      continue;
    }
    const Monomial shift = lead / hit->lead;
    const Rational factor = coeff / hit->lead_coeff;
    for (const auto& [m, c] : hit->terms) accumulate(work, key(m * shift), -factor * c);
  }
  return remainder;
}

}  // namespace

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& gens,
                       const CompositeWeightOrder& order) {
  std::vector<Divisor> divisors;
  for (const auto& g : gens) divisors.push_back(make_divisor(g, order));
  return reduce(p, divisors, KeyMaker(order));
}

GroebnerReport buchberger_check(const std::vector<Polynomial>& gens, const CompositeWeightOrder& order,
                                std::size_t pair_cap) {
  const std::size_t m = gens.size();
  GroebnerReport report;
  report.pairs_total = m * (m - (m > 0 ? 1 : 0)) / 2;
  if (report.pairs_total > pair_cap) {
    throw ResourceLimit(std::to_string(report.pairs_total) + " S-pairs exceed the cap of " +
                        std::to_string(pair_cap));
  }
  std::vector<Divisor> divisors;
  for (const auto& g : gens) divisors.push_back(make_divisor(g, order));
  const KeyMaker key(order);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const Divisor& a = divisors[i];
      const Divisor& b = divisors[j];
      if (a.lead.coprime(b.lead)) {
        ++report.pairs_skipped;
        continue;
      }
      const Monomial l = a.lead.lcm(b.lead);
      Polynomial s;
      s.add_scaled(gens[i], 1 / a.lead_coeff, l / a.lead);
      s.add_scaled(gens[j], -1 / b.lead_coeff, l / b.lead);
      Polynomial r = reduce(s, divisors, key);
      if (!r.is_zero()) {
        report.witness = std::make_pair(i, j);
        report.witness_remainder = std::move(r);
        return report;
      }
    }
  }
  report.is_groebner = true;
  return report;
}

Integer sqfree_count(const SquarefreeMonomialIdeal& ideal, int d, int num_vars) {
  if (num_vars < 0 || num_vars > 40) throw std::invalid_argument("sqfree_count supports up to 40 variables");
  if (d < 0 || d > num_vars) throw std::invalid_argument("degree outside [0, num_vars]");
  if (d == 0) return ideal.contains(0) ? 1 : 0;
  long long count = 0;
  std::uint64_t subset = (std::uint64_t{1} << d) - 1;
  const std::uint64_t limit = std::uint64_t{1} << num_vars;
  while (subset < limit) {
    if (ideal.contains(subset)) ++count;
    const std::uint64_t c = subset & (~subset + 1);
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return Integer(static_cast<long>(count));
}

}  // namespace sparsesym
