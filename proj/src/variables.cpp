#include "sparsesym/variables.hpp"

#include <cstdio>
#include <stdexcept>

namespace sparsesym {

VariableLayout::VariableLayout(int n) : n_(n) {
  // C(n+1, 2) + 1 variables must fit a 64-bit mask.
  if (n < 1 || n > 10) {
    throw std::invalid_argument("variable layout supports 1 <= n <= 10, got " + std::to_string(n));
  }
}

VariableId VariableLayout::x(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n_) {
    throw std::invalid_argument("variable index (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside [1, " + std::to_string(n_) + "]");
  }
  if (i == j) return VariableId{i - 1};
  // Pairs (a, b), a < b, preceding (i, j) in lexicographic order.
  const int before = (i - 1) * n_ - (i - 1) * i / 2;
  return VariableId{n_ + before + (j - i - 1)};
}

std::pair<int, int> VariableLayout::indices(VariableId v) const {
  if (v.index < 0 || v.index >= num_matrix_vars()) {
    throw std::invalid_argument("not a matrix variable: index " + std::to_string(v.index));
  }
  if (v.index < n_) return {v.index + 1, v.index + 1};
  int rest = v.index - n_;
  for (int i = 1; i < n_; ++i) {
    const int row = n_ - i;
    if (rest < row) return {i, i + 1 + rest};
    rest -= row;
  }
  throw std::logic_error("unreachable variable index");
}

std::string VariableLayout::name(VariableId v) const {
  if (is_t(v)) return "t";
  const auto [i, j] = indices(v);
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

VariableId VariableLayout::parse(const std::string& name) const {
  if (name == "t") return t();
  int i = 0;
  int j = 0;
  char tail = 0;
  if (std::sscanf(name.c_str(), "x_%d_%d%c", &i, &j, &tail) != 2) {
    throw std::invalid_argument("unknown variable name '" + name + "'");
  }
  return x(i, j);
}

}  // namespace sparsesym
