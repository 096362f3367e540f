#include "sparsesym/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sparsesym {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

std::size_t first_non_space(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  return i;
}

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("invalid JSON", line, column);
  }
}

// Integers on one line, with the column at which each starts.
std::vector<std::pair<long long, int>> tokens(const std::string& line, int line_no) {
  std::vector<std::pair<long long, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '-' || line[i] == '+') ++i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(line[start])))) {
      throw ParseError("expected an integer", line_no, static_cast<int>(start) + 1);
    }
    if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
      throw ParseError("unexpected character '" + std::string(1, line[i]) + "'", line_no, static_cast<int>(i) + 1);
    }
    try {
      out.emplace_back(std::stoll(line.substr(start, i - start)), static_cast<int>(start) + 1);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", line_no, static_cast<int>(start) + 1);
    }
  }
  return out;
}

struct RawGraph {
  std::optional<int> n;
  std::vector<Edge> edges;
};

RawGraph parse_text(std::string_view text, bool require_n) {
  RawGraph raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::vector<std::pair<Edge, std::pair<int, int>>> positioned;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto toks = tokens(line, line_no);
    if (toks.empty()) continue;
    if (!raw.n && require_n) {
      if (toks.size() != 1) throw ParseError("first line must hold the vertex count n", line_no, toks[1].second);
      if (toks[0].first < 2 || toks[0].first > Graph::kMaxVertices) {
        throw ParseError("vertex count must lie in [2, " + std::to_string(Graph::kMaxVertices) + "]", line_no,
                         toks[0].second);
      }
      raw.n = static_cast<int>(toks[0].first);
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("expected an edge \"i j\"", line_no, toks.size() > 2 ? toks[2].second : toks[0].second);
    }
    const long long i = toks[0].first;
    const long long j = toks[1].first;
    if (raw.n) {
      if (i < 1 || i > *raw.n) throw ParseError("vertex outside [1, n]", line_no, toks[0].second);
      if (j < 1 || j > *raw.n) throw ParseError("vertex outside [1, n]", line_no, toks[1].second);
    }
    if (i >= j) throw ParseError("edge must satisfy i < j", line_no, toks[0].second);
    const Edge e{static_cast<int>(i), static_cast<int>(j)};
    for (const auto& [seen, pos] : positioned) {
      if (seen == e) {
        throw ParseError("duplicate edge (first seen at line " + std::to_string(pos.first) + ")", line_no,
                         toks[0].second);
      }
    }
    positioned.push_back({e, {line_no, toks[0].second}});
    raw.edges.push_back(e);
  }
  if (require_n && !raw.n) throw ParseError("missing vertex count", std::max(line_no, 1), 1);
  return raw;
}

std::vector<Edge> edges_from_json(const Json& list) {
  if (!list.is_array()) throw ParseError("\"edges\" must be a list of [i, j] pairs", 1, 1);
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const Json& e = list[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw ParseError("edge #" + std::to_string(k + 1) + " is not a pair of integers", 1, 1);
    }
    const long long i = e[0].get<long long>();
    const long long j = e[1].get<long long>();
    if (i >= j) throw ParseError("edge #" + std::to_string(k + 1) + " must satisfy i < j", 1, 1);
    if (i < 1 || j > Graph::kMaxVertices) throw ParseError("edge #" + std::to_string(k + 1) + " out of range", 1, 1);
    edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  }
  return edges;
}

RawGraph parse_any(std::string_view text, bool require_n) {
  const std::size_t start = first_non_space(text);
  if (start < text.size() && (text[start] == '{' || text[start] == '[')) {
    const Json j = parse_json(text);
    RawGraph raw;
    if (j.is_array()) {
      if (require_n) throw ParseError("graph JSON must be an object with \"n\" and \"edges\"", 1, 1);
      raw.edges = edges_from_json(j);
      return raw;
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("missing integer \"n\"", 1, 1);
    raw.n = j["n"].get<int>();
    raw.edges = j.contains("edges") ? edges_from_json(j["edges"]) : std::vector<Edge>{};
    return raw;
  }
  return parse_text(text, require_n);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  RawGraph raw = parse_any(text, true);
  try {
    return Graph(*raw.n, std::move(raw.edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::vector<Edge> parse_edge_list(std::string_view text, int n) {
  // Text input may omit the leading vertex count.
  const std::size_t start = first_non_space(text);
  RawGraph raw;
  if (start < text.size() && (text[start] == '{' || text[start] == '[')) {
    raw = parse_any(text, false);
  } else {
    // A lone integer on the first non-empty line is the vertex count.
    bool counted = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      const auto toks = tokens(line, ++line_no);
      if (toks.empty()) continue;
      counted = toks.size() == 1;
      break;
    }
    raw = parse_text(text, counted);
  }
  if (raw.n && *raw.n != n) throw ParseError("forest vertex count differs from the graph", 1, 1);
  for (const Edge& e : raw.edges)
    if (e.v > n) throw ParseError("forest edge outside [1, n]", 1, 1);
  return raw.edges;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

Json monomial_to_json(const Monomial& m, const VariableLayout& layout) {
  Json out = Json::object();
  for (int i = 0; i < layout.num_vars(); ++i) {
    const int e = m.exponent(VariableId{i});
    if (e != 0) out[layout.name(VariableId{i})] = e;
  }
  return out;
}

Monomial monomial_from_json(const Json& j, const VariableLayout& layout) {
  if (!j.is_object()) throw std::invalid_argument("monomial must be a JSON object");
  Monomial m;
  for (const auto& [name, exp] : j.items()) {
    if (!exp.is_number_integer() || exp.get<int>() < 0) throw std::invalid_argument("bad exponent for " + name);
    m = m * Monomial::variable(layout.parse(name), exp.get<int>());
  }
  return m;
}

Json polynomial_to_json(const Polynomial& p, const VariableLayout& layout) {
  Json out = Json::array();
  // Reverse storage order: x11-heavy terms first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json term;
    term["coeff"] = it->second.get_str();
    term["monomial"] = monomial_to_json(it->first, layout);
    out.push_back(std::move(term));
  }
  return out;
}

Polynomial polynomial_from_json(const Json& j, const VariableLayout& layout) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON list of terms");
  Polynomial p;
  for (const Json& term : j) {
    if (!term.contains("coeff") || !term["coeff"].is_string()) throw std::invalid_argument("term without coeff");
    const Monomial m = term.contains("monomial") ? monomial_from_json(term["monomial"], layout) : Monomial{};
    p += Polynomial::term(m, parse_rational(term["coeff"].get<std::string>()));
  }
  return p;
}

Json ideal_to_json(const SquarefreeMonomialIdeal& ideal, const VariableLayout& layout) {
  Json out = Json::array();
  for (const Monomial& m : ideal.monomials()) out.push_back(monomial_to_json(m, layout));
  return out;
}

Json betti_to_json(const BettiTable& b) {
  Json table = Json::object();
  for (const auto& [key, value] : b.entries())
    table[std::to_string(key.first) + "," + std::to_string(key.second)] = value;
  Json out;
  out["betti"] = std::move(table);
  return out;
}

std::string betti_to_tsv(const BettiTable& b) {
  std::ostringstream out;
  out << "i\tj\tbeta\n";
  for (const auto& [key, value] : b.entries()) out << key.first << '\t' << key.second << '\t' << value << '\n';
  return out.str();
}

std::string betti_to_text(const BettiTable& b) {
  const int pdim = b.projective_dimension();
  const int reg = b.regularity();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{""};
  std::vector<std::string> totals{"total:"};
  for (int i = 0; i <= pdim; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(b.total(i)));
  }
  rows.push_back(header);
  rows.push_back(totals);
  for (int r = 0; r <= reg; ++r) {
    std::vector<std::string> row{std::to_string(r) + ":"};
    for (int i = 0; i <= pdim; ++i) {
      const long long v = b.get(i, i + r);
      row.push_back(v == 0 ? "." : std::to_string(v));
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(pdim + 2, 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  }
  return out.str();
}

Json complex_to_json(const GradedComplex& c) {
  const VariableLayout layout = c.layout();
  Json matrices = Json::array();
  Json twists = Json::array();
  Json labels = Json::array();
  for (int i = 1; i <= c.length(); ++i) {
    const PolyMatrix& d = c.differential(i);
    Json rows = Json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t col = 0; col < d.cols(); ++col) row.push_back(polynomial_to_json(d(r, col), layout));
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
    twists.push_back(c.module(i).twists);
    labels.push_back(c.module(i).labels);
  }
  Json out;
  out["matrices"] = std::move(matrices);
  out["twists"] = std::move(twists);
  out["basis_labels"] = std::move(labels);
  return out;
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw std::invalid_argument("matrix JSON needs an integer \"n\"");
  }
  const long long n = j["n"].get<long long>();
  if (n < 1 || n > 20) throw std::invalid_argument("matrix size must lie in [1, 20]");
  const Json& rows = j.at("entries");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("\"entries\" needs n rows");
  std::vector<Rational> entries;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("each row needs n entries");
    for (const Json& e : row) {
      if (e.is_string()) {
        entries.push_back(parse_rational(e.get<std::string>()));
      } else if (e.is_number_integer()) {
        entries.emplace_back(e.get<long>());
      } else {
        throw std::invalid_argument("matrix entries must be \"p/q\" strings");
      }
    }
  }
  return RationalMatrix(static_cast<std::size_t>(n), std::move(entries));
}

Json rational_matrix_to_json(const RationalMatrix& a) {
  Json out;
  out["n"] = a.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(a(i, j).get_str());
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

}  // namespace sparsesym
