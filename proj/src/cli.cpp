#include "sparsesym/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "sparsesym/betti.hpp"
#include "sparsesym/bijection.hpp"
#include "sparsesym/complex.hpp"
#include "sparsesym/determinant.hpp"
#include "sparsesym/errors.hpp"
#include "sparsesym/graph.hpp"
#include "sparsesym/groebner.hpp"
#include "sparsesym/hilbert.hpp"
#include "sparsesym/modp.hpp"
#include "sparsesym/monomial_ideal.hpp"
#include "sparsesym/rational_matrix.hpp"
#include "sparsesym/serialize.hpp"
#include "sparsesym/symmetric_matrix.hpp"
#include "sparsesym/weight_order.hpp"

namespace sparsesym::cli {
namespace {

struct Config {
  std::string command;
  std::string check;
  std::string graph_path;
  std::string forest_path;
  std::string matrix_path;
  std::string out = "json";
  std::string method = "both";
  std::string stage = "pruned";
  std::string minors = "sparse";
  std::uint64_t prime = kDefaultPrime;
  int trials = 10;
  std::uint64_t seed = 1;
  int dmax = -1;
  int k = 0;
  int l = 0;
  int size = 0;
  int characteristic = 0;
  std::size_t path_cap = kDefaultPathCap;
  std::size_t pair_cap = kDefaultPairCap;
  int subset_cap = kSubsetEnumerationLimit;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Graph load_graph(const Config& cfg) {
  const std::string text = read_file(cfg.graph_path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw std::invalid_argument(cfg.graph_path + ":" + e.what());
  }
}

Forest load_forest(const Config& cfg, const Graph& g) {
  if (cfg.forest_path.empty()) return spanning_forest(g);
  const std::string text = read_file(cfg.forest_path);
  std::vector<Edge> edges;
  try {
    edges = parse_edge_list(text, g.n());
  } catch (const ParseError& e) {
    throw std::invalid_argument(cfg.forest_path + ":" + e.what());
  }
  try {
    return Forest(g, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(cfg.forest_path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json edge_json(int k, int l) { return Json::array({k, l}); }

VarMask surviving_mask(const Graph& g) {
  const VariableLayout layout(g.n());
  VarMask mask = layout.diagonal_mask();
  for (const Edge& e : g.edges()) mask |= VarMask{1} << layout.x(e.u, e.v).index;
  return mask;
}

GradedComplex pruned_complex(const Graph& g) {
  return prune(specialize(jozefiak_complex(g.n()), Substitution::zeros_of(g)));
}

std::optional<std::pair<int, int>> first_difference(const BettiTable& a, const BettiTable& b) {
  std::map<std::pair<int, int>, long long> keys = a.entries();
  keys.insert(b.entries().begin(), b.entries().end());
  for (const auto& [key, unused] : keys) {
    if (a.get(key.first, key.second) != b.get(key.first, key.second)) return key;
  }
  return std::nullopt;
}

// Hilbert function of R_G / I in degree d read off a Betti table.
Integer hf_from_betti(const BettiTable& b, int n_vars, long long d) {
  Integer sum = 0;
  for (const auto& [key, value] : b.entries()) {
    const Integer term = polynomial_ring_hf(n_vars, d - key.second) * Integer(static_cast<long>(value));
    if (key.first % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

Json check_betti(const Graph& g) {
  const BettiTable formula = betti_formula(g.n(), d_invariant(g)).table;
  const BettiTable pruned = betti_table(pruned_complex(g));
  Json j;
  const auto diff = first_difference(formula, pruned);
  j["passed"] = !diff.has_value();
  j["formula"] = betti_to_json(formula)["betti"];
  j["prune"] = betti_to_json(pruned)["betti"];
  if (diff) {
    j["witness"] = {{"i", diff->first},
                    {"j", diff->second},
                    {"formula", formula.get(diff->first, diff->second)},
                    {"prune", pruned.get(diff->first, diff->second)}};
  }
  return j;
}

Json check_gb(const Graph& g, const Forest& t, std::size_t pair_cap) {
  const VariableLayout layout(g.n());
  const CompositeWeightOrder order = CompositeWeightOrder::for_forest(layout, g, t);
  auto run = [&](const SparseSymmetricMatrix& m) {
    std::vector<Polynomial> gens;
    std::vector<std::pair<int, int>> labels;
    for (const MinorGenerator& mg : minor_generators(m)) {
      if (mg.value.is_zero()) continue;
      gens.push_back(mg.value);
      labels.emplace_back(mg.k, mg.l);
    }
    const GroebnerReport r = buchberger_check(gens, order, pair_cap);
    Json j;
    j["passed"] = r.is_groebner;
    j["generators"] = gens.size();
    j["pairs_total"] = r.pairs_total;
    j["pairs_skipped"] = r.pairs_skipped;
    if (r.witness) {
      const auto [a, b] = *r.witness;
      j["witness"] = {{"s_pair", Json::array({edge_json(labels[a].first, labels[a].second),
                                              edge_json(labels[b].first, labels[b].second)})},
                      {"remainder", polynomial_to_json(r.witness_remainder, layout)}};
    }
    return j;
  };
  Json j;
  j["generic"] = run(build_generic(g.n()));
  j["sparse"] = run(build_matrix(g));
  j["passed"] = j["generic"]["passed"].get<bool>() && j["sparse"]["passed"].get<bool>();
  return j;
}

Json check_exactness(const Graph& g, const Config& cfg) {
  const GradedComplex c = pruned_complex(g);
  Json j;
  j["prime"] = cfg.prime;
  j["seed"] = cfg.seed;
  if (const auto w = find_nonzero_composition(c)) {
    j["passed"] = false;
    j["witness"] = {{"composition", std::to_string(w->map) + "," + std::to_string(w->map + 1)},
                    {"row", w->row},
                    {"col", w->col}};
    return j;
  }
  const ProbeResult r = exactness_probe(c, cfg.prime, cfg.trials, cfg.seed);
  j["passed"] = r.verdict == ProbeVerdict::pass;
  j["verdict"] = to_string(r.verdict);
  j["sizes"] = r.sizes;
  j["ranks"] = r.ranks;
  j["trials_used"] = r.trials_used;
  return j;
}

Json check_bijection(const Graph& g, const Forest& t, int subset_cap) {
  const VariableLayout layout(g.n());
  const int vars = layout.num_matrix_vars();
  if (vars > subset_cap || vars > 30) {
    throw ResourceLimit("bijection check enumerates 2^" + std::to_string(vars) +
                        " monomials; the subset cap is 2^" + std::to_string(subset_cap));
  }
  const SquarefreeMonomialIdeal source = diagonal_ideal(g.n());
  const SquarefreeMonomialIdeal target = it_generators(g, t);
  std::vector<long long> source_count(vars + 1, 0);
  std::vector<long long> target_count(vars + 1, 0);
  std::vector<long long> image_count(vars + 1, 0);
  std::unordered_set<VarMask> images;
  Json j;
  auto fail = [&](VarMask m, const Monomial& image, const char* reason) {
    j["passed"] = false;
    j["witness"] = {{"monomial", monomial_to_json(Monomial::from_mask(m), layout)},
                    {"image", monomial_to_json(image, layout)},
                    {"reason", reason}};
    return j;
  };
  const VarMask end = VarMask{1} << vars;
  for (VarMask m = 0; m < end; ++m) {
    const int deg = std::popcount(m);
    if (target.contains(m)) ++target_count[deg];
    if (!source.contains(m)) continue;
    ++source_count[deg];
    const Monomial image = bijection_fd(g, t, Monomial::from_mask(m));
    if (!image.is_squarefree()) return fail(m, image, "image is not square-free");
    if (image.degree() != deg) return fail(m, image, "degree changed");
    if (!target.contains(image.support())) return fail(m, image, "image outside the target ideal");
    if (!images.insert(image.support()).second) return fail(m, image, "not injective");
    ++image_count[deg];
  }
  for (int d = 0; d <= vars; ++d) {
    if (image_count[d] != target_count[d] || source_count[d] != target_count[d]) {
      j["passed"] = false;
      j["witness"] = {{"degree", d},
                      {"source", source_count[d]},
                      {"target", target_count[d]},
                      {"reason", "not surjective"}};
      return j;
    }
  }
  j["passed"] = true;
  j["counts"] = source_count;
  return j;
}

Json check_hilbert(const Graph& g, const Forest& t, int dmax) {
  const int n = g.n();
  const VariableLayout layout(n);
  const int vars = layout.num_matrix_vars();
  const FaceVector generic_faces = face_vector(diagonal_ideal(n), vars);
  const FaceVector forest_faces = face_vector(it_generators(g, t), vars);
  Json j;
  j["dmax"] = dmax;
  j["passed"] = true;
  if (!(generic_faces == forest_faces)) {
    j["passed"] = false;
    for (std::size_t i = 0; i < generic_faces.counts.size(); ++i) {
      if (generic_faces.counts[i] != forest_faces.counts[i]) {
        j["witness"] = {{"face_dimension", static_cast<int>(i) - 1},
                        {"generic", integer_json(generic_faces.counts[i])},
                        {"forest", integer_json(forest_faces.counts[i])}};
        break;
      }
    }
    return j;
  }
  for (int d = 0; d <= dmax; ++d) {
    const Integer closed = hf_closed_form(n, d);
    const Integer recursion = hf_recursion(n, d);
    const Integer faces = polynomial_ring_hf(vars, d) - hilbert_from_faces(generic_faces, d);
    if (closed != recursion || closed != faces) {
      j["passed"] = false;
      j["witness"] = {{"degree", d},
                      {"closed_form", integer_json(closed)},
                      {"recursion", integer_json(recursion)},
                      {"faces", integer_json(faces)}};
      return j;
    }
  }
  const BettiTable betti = betti_table(pruned_complex(g));
  const FaceVector sparse_faces = face_vector(initial_ideal_of_minors(g, t), surviving_mask(g));
  for (int d = 0; d <= dmax; ++d) {
    const Integer from_faces = hilbert_from_faces(sparse_faces, d);
    const Integer from_betti = hf_from_betti(betti, g.surviving_variables(), d);
    if (from_faces != from_betti) {
      j["passed"] = false;
      j["witness"] = {{"degree", d},
                      {"sparse_faces", integer_json(from_faces)},
                      {"sparse_betti", integer_json(from_betti)}};
      return j;
    }
  }
  return j;
}

Json pathdet_pair(MinorEngine& engine, const Graph& g, int k, int l, std::size_t path_cap, bool polys) {
  const Polynomial lhs = engine.cofactor(k, l);
  const Polynomial rhs = path_determinant_rhs(g, k, l, path_cap);
  Json j;
  j["k"] = k;
  j["l"] = l;
  j["paths"] = simple_paths(g, k, l, path_cap).size();
  j["equal"] = lhs == rhs;
  if (polys || lhs != rhs) {
    const VariableLayout layout(g.n());
    j["lhs"] = polynomial_to_json(lhs, layout);
    j["rhs"] = polynomial_to_json(rhs, layout);
  }
  return j;
}

Json check_pathdet(const Graph& g, std::size_t path_cap) {
  MinorEngine engine(build_matrix(g).matrix);
  Json j;
  j["pairs"] = 0;
  for (int k = 1; k <= g.n(); ++k) {
    for (int l = k + 1; l <= g.n(); ++l) {
      Json pair = pathdet_pair(engine, g, k, l, path_cap, false);
      j["pairs"] = j["pairs"].get<int>() + 1;
      if (!pair["equal"].get<bool>()) {
        j["passed"] = false;
        j["witness"] = std::move(pair);
        return j;
      }
    }
  }
  j["passed"] = true;
  return j;
}

Json check_invariants(const Graph& g, const Forest& t) {
  const int n = g.n();
  const bool connected = connected_components(g).size() == 1;
  const HilbertSeriesData hs = hilbert_series(betti_table(pruned_complex(g)), g.surviving_variables());
  const int height = ideal_height(initial_ideal_of_minors(g, t));
  const long long expected_degree = connected ? binomial(n + 1, 3).get_si() : d_invariant(g);
  const int expected_codim = connected ? 3 : 2;
  Json j;
  j["connected"] = connected;
  j["codim"] = hs.codimension;
  j["degree"] = hs.degree;
  j["height"] = height;
  j["expected"] = {{"codim", expected_codim}, {"degree", expected_degree}, {"height", expected_codim}};
  j["passed"] = hs.codimension == expected_codim && hs.degree == expected_degree && height == expected_codim;
  return j;
}

int finish(std::ostream& out, std::ostream& err, const Json& report, const std::string& what) {
  emit(out, report);
  if (report["passed"].get<bool>()) return kExitOk;
  err << what << " failed";
  if (report.contains("witness")) err << "; witness " << report["witness"].dump();
  err << '\n';
  return kExitVerificationFailed;
}

int cmd_betti(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg);
  BettiTable table;
  if (cfg.method == "formula") {
    table = betti_formula(g.n(), d_invariant(g)).table;
  } else if (cfg.method == "prune") {
    table = betti_table(pruned_complex(g));
  } else {
    const Json report = check_betti(g);
    if (!report["passed"].get<bool>()) return finish(out, err, report, "betti formula/prune agreement");
    table = betti_formula(g.n(), d_invariant(g)).table;
  }
  if (cfg.out == "json") {
    emit(out, betti_to_json(table));
  } else if (cfg.out == "tsv") {
    out << betti_to_tsv(table);
  } else {
    out << betti_to_text(table);
  }
  return kExitOk;
}

int cmd_init_ideal(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Forest t = load_forest(cfg, g);
  const MinorMatrix which = cfg.minors == "generic" ? MinorMatrix::generic : MinorMatrix::sparse;
  emit(out, ideal_to_json(initial_ideal_of_minors(g, t, which), VariableLayout(g.n())));
  return kExitOk;
}

int cmd_resolution(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const GradedComplex generic = jozefiak_complex(g.n());
  if (cfg.stage == "generic") {
    emit(out, complex_to_json(generic));
  } else if (cfg.stage == "homogenized") {
    emit(out, complex_to_json(homogenize(generic, g)));
  } else if (cfg.stage == "specialized") {
    emit(out, complex_to_json(specialize(generic, Substitution::zeros_of(g))));
  } else {
    emit(out, complex_to_json(prune(specialize(generic, Substitution::zeros_of(g)))));
  }
  return kExitOk;
}

int cmd_degree(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const HilbertSeriesData hs = hilbert_series(betti_table(pruned_complex(g)), g.surviving_variables());
  Json j;
  j["codim"] = hs.codimension;
  j["degree"] = hs.degree;
  emit(out, j);
  return kExitOk;
}

int cmd_height(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Forest t = load_forest(cfg, g);
  Json j;
  j["height"] = ideal_height(initial_ideal_of_minors(g, t));
  emit(out, j);
  return kExitOk;
}

int cmd_char_numbers(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const bool connected = connected_components(g).size() == 1;
  const CharacteristicNumbers c = characteristic_numbers(g.n(), d_invariant(g), connected);
  Json j;
  j["two_hyperplanes"] = c.two_hyperplanes;
  j["three_hyperplanes"] = c.three_hyperplanes ? Json(*c.three_hyperplanes) : Json(nullptr);
  emit(out, j);
  return kExitOk;
}

int cmd_hilbert(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const Forest t = load_forest(cfg, g);
  const int dmax = cfg.dmax >= 0 ? cfg.dmax : 2 * g.n();
  const FaceVector faces = face_vector(initial_ideal_of_minors(g, t), surviving_mask(g));
  const HilbertSeriesData hs = hilbert_series(betti_table(pruned_complex(g)), g.surviving_variables());
  Json values = Json::array();
  for (int d = 0; d <= dmax; ++d) values.push_back(integer_json(hilbert_from_faces(faces, d)));
  Json j;
  j["variables"] = g.surviving_variables();
  j["hilbert_function"] = std::move(values);
  j["numerator"] = hs.numerator;
  j["reduced_numerator"] = hs.reduced_numerator;
  j["codim"] = hs.codimension;
  j["degree"] = hs.degree;
  emit(out, j);
  return kExitOk;
}

int cmd_path_det(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg);
  if (cfg.k == 0 && cfg.l == 0) return finish(out, err, check_pathdet(g, cfg.path_cap), "path determinant identity");
  int k = std::min(cfg.k, cfg.l);
  int l = std::max(cfg.k, cfg.l);
  if (k < 1 || l > g.n() || k == l) throw std::invalid_argument("--k and --l must be distinct vertices in [1, n]");
  MinorEngine engine(build_matrix(g).matrix);
  Json report = pathdet_pair(engine, g, k, l, cfg.path_cap, true);
  report["passed"] = report["equal"];
  return finish(out, err, report, "path determinant identity");
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(cfg);
  const Forest t = load_forest(cfg, g);
  const int dmax = cfg.dmax >= 0 ? cfg.dmax : 2 * g.n();
  auto run = [&](const std::string& name) -> Json {
    if (name == "betti") return check_betti(g);
    if (name == "gb") return check_gb(g, t, cfg.pair_cap);
    if (name == "exactness") return check_exactness(g, cfg);
    if (name == "bijection") return check_bijection(g, t, cfg.subset_cap);
    if (name == "hilbert") return check_hilbert(g, t, dmax);
    if (name == "pathdet") return check_pathdet(g, cfg.path_cap);
    return check_invariants(g, t);
  };
  if (cfg.check != "all") return finish(out, err, run(cfg.check), "verify " + cfg.check);
  Json checks = Json::object();
  bool passed = true;
  std::string failed;
  for (const char* name : {"betti", "gb", "exactness", "bijection", "hilbert", "pathdet", "invariants"}) {
    checks[name] = run(name);
    if (!checks[name]["passed"].get<bool>()) {
      passed = false;
      if (failed.empty()) failed = name;
    }
  }
  Json report;
  report["passed"] = passed;
  report["checks"] = std::move(checks);
  if (!passed) report["witness"] = {{"check", failed}, {"detail", report["checks"][failed].value("witness", Json())}};
  return finish(out, err, report, "verify all");
}

int cmd_primality(const Config& cfg, std::ostream& out) {
  const Graph g = load_graph(cfg);
  const int k = cfg.size == 0 ? g.n() - 1 : cfg.size;
  if (k < 1 || k > g.n()) throw std::invalid_argument("--size must lie in [1, n]");
  Json j;
  j["size"] = k;
  j["characteristic"] = cfg.characteristic;
  j["verdict"] = to_string(primality_verdict(g, k, cfg.characteristic));
  emit(out, j);
  return kExitOk;
}

int cmd_prin_regular(const Config& cfg, std::ostream& out, std::ostream& err) {
  Json input;
  const std::string text = read_file(cfg.matrix_path);
  try {
    input = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(cfg.matrix_path + ": invalid JSON at byte " + std::to_string(e.byte));
  }
  const PrincipalRegularityReport r = principally_regular_check(rational_matrix_from_json(input));
  Json j;
  j["principally_regular"] = r.principally_regular;
  j["condition_holds"] = r.condition_holds ? Json(*r.condition_holds) : Json(nullptr);
  j["diagonal"] = r.diagonal;
  j["passed"] = r.implication_holds;
  return finish(out, err, j, "principal regularity implication");
}

int dispatch(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.out != "json" && cfg.command != "betti") {
    throw std::invalid_argument("--out " + cfg.out + " is only available for betti");
  }
  if (cfg.command == "betti") return cmd_betti(cfg, out, err);
  if (cfg.command == "init-ideal") return cmd_init_ideal(cfg, out);
  if (cfg.command == "resolution") return cmd_resolution(cfg, out);
  if (cfg.command == "degree") return cmd_degree(cfg, out);
  if (cfg.command == "height") return cmd_height(cfg, out);
  if (cfg.command == "char-numbers") return cmd_char_numbers(cfg, out);
  if (cfg.command == "hilbert") return cmd_hilbert(cfg, out);
  if (cfg.command == "path-det") return cmd_path_det(cfg, out, err);
  if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  if (cfg.command == "primality") return cmd_primality(cfg, out);
  return cmd_prin_regular(cfg, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Minors, resolutions and invariants of sparse generic symmetric matrices", "sparsesym"};
  app.require_subcommand(1);

  auto graph_options = [&](CLI::App* sc, bool forest) {
    sc->add_option("--graph", cfg.graph_path, "Graph file: text (n, then \"i j\" lines) or JSON")->required();
    if (forest) sc->add_option("--forest", cfg.forest_path, "Spanning forest edge list (default: BFS forest)");
    sc->add_option("--out", cfg.out, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));
  };
  auto probe_options = [&](CLI::App* sc) {
    sc->add_option("--prime", cfg.prime, "Probe prime")->check(CLI::PositiveNumber);
    sc->add_option("--trials", cfg.trials, "Probe points")->check(CLI::Range(1, 1000));
    sc->add_option("--seed", cfg.seed, "Probe RNG seed");
  };
  auto dmax_option = [&](CLI::App* sc) {
    sc->add_option("--dmax", cfg.dmax, "Largest degree compared (default 2n)")->check(CLI::Range(0, 1000));
  };
  auto path_cap_option = [&](CLI::App* sc) {
    sc->add_option("--path-cap", cfg.path_cap, "Largest number of simple paths enumerated per pair");
  };

  CLI::App* betti = app.add_subcommand("betti", "Graded Betti numbers of R_G / I_{n-1}(X_G)");
  graph_options(betti, false);
  betti->add_option("--method", cfg.method, "formula, prune, or both (must agree)")
      ->check(CLI::IsMember({"formula", "prune", "both"}));

  CLI::App* init = app.add_subcommand("init-ideal", "Initial ideal of the submaximal minors");
  graph_options(init, true);
  init->add_option("--minors", cfg.minors, "Minors of the generic or the sparse matrix")
      ->check(CLI::IsMember({"generic", "sparse"}));

  CLI::App* resolution = app.add_subcommand("resolution", "Resolution matrices");
  graph_options(resolution, false);
  resolution->add_option("--stage", cfg.stage, "generic, homogenized, specialized or pruned")
      ->check(CLI::IsMember({"generic", "homogenized", "specialized", "pruned"}));

  graph_options(app.add_subcommand("degree", "Codimension and degree"), false);
  graph_options(app.add_subcommand("height", "Height of the initial ideal"), true);
  graph_options(app.add_subcommand("char-numbers", "Characteristic numbers"), false);

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function and series");
  graph_options(hilbert, true);
  dmax_option(hilbert);

  CLI::App* path_det = app.add_subcommand("path-det", "Cofactors as sums over paths");
  graph_options(path_det, false);
  path_det->add_option("--k", cfg.k, "First vertex (omit --k and --l to check every pair)");
  path_det->add_option("--l", cfg.l, "Second vertex");
  path_cap_option(path_det);

  CLI::App* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("check", cfg.check, "gb, exactness, bijection, hilbert, pathdet, betti, invariants or all")
      ->required()
      ->check(CLI::IsMember({"gb", "exactness", "bijection", "hilbert", "pathdet", "betti", "invariants", "all"}));
  graph_options(verify, true);
  probe_options(verify);
  dmax_option(verify);
  path_cap_option(verify);
  verify->add_option("--pair-cap", cfg.pair_cap, "Largest number of S-pairs checked");
  verify->add_option("--subset-cap", cfg.subset_cap, "Largest number of variables enumerated over")
      ->check(CLI::Range(1, 30));

  CLI::App* primality = app.add_subcommand("primality", "Primality of an ideal of minors from the graph");
  graph_options(primality, false);
  primality->add_option("--size", cfg.size, "Minor size k (default n - 1)");
  primality->add_option("--char", cfg.characteristic, "Field characteristic, 0 or a prime");

  CLI::App* prin = app.add_subcommand("prin-regular", "Check a symmetric rational matrix");
  prin->add_option("--matrix", cfg.matrix_path, "JSON {\"n\": int, \"entries\": [[\"p/q\", ...], ...]}")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out, err);
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const ContractViolation& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const RetryWithNewPrime& e) {
    err << "error: " << e.what() << "; choose another --prime\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sparsesym::cli
