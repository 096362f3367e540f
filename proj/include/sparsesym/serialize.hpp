#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

#include "sparsesym/betti.hpp"
#include "sparsesym/complex.hpp"
#include "sparsesym/graph.hpp"
#include "sparsesym/monomial_ideal.hpp"
#include "sparsesym/rational_matrix.hpp"

namespace sparsesym {

using Json = nlohmann::ordered_json;

/// Malformed input with a 1-based source position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Text format: first line "n", then one "i j" (1 <= i < j <= n) per
/// non-empty line. JSON format: {"n": int, "edges": [[i, j], ...]}.
Graph parse_graph(std::string_view text);

/// Edge list in either graph format, or a bare JSON list [[i, j], ...].
/// When the input names a vertex count it must equal n.
std::vector<Edge> parse_edge_list(std::string_view text, int n);

/// "p/q" or "p".
Rational parse_rational(const std::string& text);

Json monomial_to_json(const Monomial& m, const VariableLayout& layout);
Monomial monomial_from_json(const Json& j, const VariableLayout& layout);

/// [{"coeff": "p/q", "monomial": {"x_i_j": exp, "t": exp}}, ...]
Json polynomial_to_json(const Polynomial& p, const VariableLayout& layout);
Polynomial polynomial_from_json(const Json& j, const VariableLayout& layout);

Json ideal_to_json(const SquarefreeMonomialIdeal& ideal, const VariableLayout& layout);

/// {"betti": {"i,j": count}}
Json betti_to_json(const BettiTable& b);
std::string betti_to_tsv(const BettiTable& b);
/// Table with rows j - i and columns i, Macaulay2 style.
std::string betti_to_text(const BettiTable& b);

/// {"matrices": [...], "twists": [[...], [...], [...]], "basis_labels": [...]}
Json complex_to_json(const GradedComplex& c);

/// {"n": int, "entries": [["p/q", ...], ...]}
RationalMatrix rational_matrix_from_json(const Json& j);
Json rational_matrix_to_json(const RationalMatrix& a);

}  // namespace sparsesym
