#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sparsesym/cli.hpp"
#include "sparsesym/complex.hpp"
#include "sparsesym/serialize.hpp"
#include "support.hpp"

using namespace sparsesym;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const fs::path dir = fs::temp_directory_path() / ("sparsesym-cli-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream(path) << content;
  return path.string();
}

std::string graph_file(const Graph& g) {
  std::ostringstream text;
  text << g.n() << '\n';
  for (const Edge& e : g.edges()) text << e.u << ' ' << e.v << '\n';
  static int counter = 0;
  return write_temp("g" + std::to_string(counter++) + ".txt", text.str());
}

Json parse(const std::string& s) { return Json::parse(s); }

}  // namespace

TEST_CASE("documented command outputs") {
  const Result betti = run({"betti", "--graph", graph_file(Graph::edgeless(3))});
  CHECK(betti.code == 0);
  CHECK(parse(betti.out) == Json::parse(R"({"betti": {"0,0": 1, "1,2": 3, "2,3": 2}})"));
  const Result degree = run({"degree", "--graph", graph_file(Graph(3, {{1, 2}, {2, 3}}))});
  CHECK(degree.code == 0);
  CHECK(parse(degree.out) == Json::parse(R"({"codim": 3, "degree": 4})"));
  const Result all = run({"verify", "all", "--graph", graph_file(Graph::complete(3))});
  CHECK(all.code == 0);
  CHECK(parse(all.out)["passed"] == true);
}

TEST_CASE("formula and pruning agree through the command line") {
  for (int n = 2; n <= 4; ++n) {
    for (const Graph& g : testing::random_graphs(n, 6, 50 + n)) {
      const std::string path = graph_file(g);
      const Result formula = run({"betti", "--graph", path, "--method", "formula"});
      const Result pruned = run({"betti", "--graph", path, "--method", "prune"});
      CHECK(formula.code == 0);
      CHECK(formula.out == pruned.out);
      CHECK(run({"betti", "--graph", path}).out == formula.out);
    }
  }
}

TEST_CASE("every check passes on small graphs") {
  for (const Graph& g : {Graph::edgeless(4), Graph(4, {{1, 2}, {3, 4}}), Graph(5, {{1, 2}, {2, 3}, {4, 5}}),
                         Graph::complete(4)}) {
    const Result r = run({"verify", "all", "--graph", graph_file(g)});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
  }
}

TEST_CASE("output is deterministic") {
  const std::string path = graph_file(Graph(4, {{1, 2}, {2, 3}}));
  for (const char* cmd : {"betti", "resolution", "hilbert", "init-ideal", "height"}) {
    CHECK(run({cmd, "--graph", path}).out == run({cmd, "--graph", path}).out);
  }
  const std::vector<std::string> probe{"verify", "exactness", "--graph", path, "--seed", "9"};
  CHECK(run(probe).out == run(probe).out);
}

TEST_CASE("graph file errors carry positions") {
  const Result bad_vertex = run({"betti", "--graph", write_temp("bad1.txt", "3\n1 2\n1 4\n")});
  CHECK(bad_vertex.code == 2);
  CHECK(bad_vertex.err.find(":3:3:") != std::string::npos);
  const Result bad_token = run({"betti", "--graph", write_temp("bad2.txt", "3\n1 x\n")});
  CHECK(bad_token.code == 2);
  CHECK(bad_token.err.find(":2:3:") != std::string::npos);
  const Result dup = run({"betti", "--graph", write_temp("bad3.txt", "3\n1 2\n\n1 2\n")});
  CHECK(dup.code == 2);
  CHECK(dup.err.find(":4:1:") != std::string::npos);
  const Result order = run({"betti", "--graph", write_temp("bad4.txt", "3\n2 1\n")});
  CHECK(order.code == 2);
  const Result json = run({"betti", "--graph", write_temp("bad5.json", "{\"n\": 3,\n \"edges\": [[1, 2],]}")});
  CHECK(json.code == 2);
  CHECK(json.err.find(":2:") != std::string::npos);
  CHECK(run({"betti", "--graph", "/nonexistent/graph.txt"}).code == 2);
  CHECK(run({"betti", "--graph", write_temp("empty.txt", "")}).code == 2);
  CHECK(run({"betti", "--graph", write_temp("big.txt", "11\n")}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"betti"}).code == 2);
  CHECK(run({"verify", "everything", "--graph", graph_file(Graph::complete(3))}).code == 2);
  CHECK(run({"degree", "--graph", graph_file(Graph::complete(3)), "--out", "tsv"}).code == 2);
  CHECK(run({"char-numbers", "--graph", graph_file(Graph::complete(2))}).code == 2);
  CHECK(run({"path-det", "--graph", graph_file(Graph::complete(3)), "--k", "2", "--l", "2"}).code == 2);
  const Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("betti") != std::string::npos);
}

TEST_CASE("resource caps exit with status 3") {
  const std::string path = graph_file(Graph::complete(4));
  const Result pairs = run({"verify", "gb", "--graph", path, "--pair-cap", "3"});
  CHECK(pairs.code == 3);
  CHECK(pairs.err.find("resource limit") != std::string::npos);
  CHECK(run({"verify", "bijection", "--graph", path, "--subset-cap", "5"}).code == 3);
  CHECK(run({"path-det", "--graph", path, "--path-cap", "1"}).code == 3);
}

TEST_CASE("inconclusive probes are verification failures") {
  const Result r = run({"verify", "exactness", "--graph", graph_file(Graph::complete(3)), "--prime", "2",
                        "--trials", "1", "--seed", "3"});
  const Json report = parse(r.out);
  CHECK(report["passed"] == (report["verdict"] == "pass"));
  CHECK(r.code == (report["passed"] == true ? 0 : 1));
  if (r.code == 1) CHECK(r.err.find("verify exactness failed") != std::string::npos);
  CHECK(run({"verify", "exactness", "--graph", graph_file(Graph::complete(3)), "--prime", "91"}).code == 2);
}

TEST_CASE("output formats") {
  const std::string path = graph_file(Graph(4, {{1, 2}, {3, 4}}));
  const Result tsv = run({"betti", "--graph", path, "--out", "tsv"});
  CHECK(tsv.out == "i\tj\tbeta\n0\t0\t1\n1\t3\t6\n2\t4\t7\n3\t5\t2\n");
  const Result text = run({"betti", "--graph", path, "--out", "text"});
  CHECK(text.out ==
        "       0 1 2 3\n"
        "total: 1 6 7 2\n"
        "    0: 1 . . .\n"
        "    1: . . . .\n"
        "    2: . 6 7 2\n");
}

TEST_CASE("forest override") {
  const std::string k3 = graph_file(Graph::complete(3));
  const std::string forest = write_temp("forest.txt", "2 3\n1 3\n");
  const Result r = run({"init-ideal", "--graph", k3, "--forest", forest});
  CHECK(r.code == 0);
  const Json ideal = parse(r.out);
  CHECK(ideal.size() == 6);
  const Json forest_json = Json::parse(R"([{"x_1_2": 1, "x_1_3": 1}])");
  bool found_13_23 = false;
  for (const Json& m : ideal) found_13_23 = found_13_23 || m == Json::parse(R"({"x_1_3": 1, "x_2_3": 1})");
  CHECK(found_13_23);
  CHECK(run({"verify", "all", "--graph", k3, "--forest", forest}).code == 0);
  CHECK(run({"verify", "bijection", "--graph", k3, "--forest", write_temp("f2.json", "[[1, 2], [1, 3]]")}).code == 0);
  CHECK(run({"height", "--graph", k3, "--forest", write_temp("f3.txt", "3\n1 2\n")}).code == 2);
  CHECK(run({"height", "--graph", k3, "--forest", write_temp("f4.txt", "4\n1 2\n1 3\n")}).code == 2);
  CHECK(run({"height", "--graph", k3, "--forest", write_temp("f5.txt", "1 2\n2 3\n1 3\n")}).code == 2);
}

TEST_CASE("other commands") {
  const std::string path = graph_file(Graph(3, {{1, 2}, {2, 3}}));
  const Json res = parse(run({"resolution", "--graph", path}).out);
  CHECK(res["matrices"].size() == 3);
  CHECK(res["twists"] == Json::parse("[[2,2,2,2,2,2],[3,3,3,3,3,3,3,3],[4,4,4]]"));
  CHECK(res["basis_labels"][2] == Json::parse(R"(["E_1_2-E_2_1", "E_1_3-E_3_1", "E_2_3-E_3_2"])"));
  const Json generic = parse(run({"resolution", "--graph", path, "--stage", "homogenized"}).out);
  CHECK(generic["matrices"][1].size() == 6);
  CHECK(parse(run({"height", "--graph", path}).out) == Json::parse(R"({"height": 3})"));
  CHECK(parse(run({"char-numbers", "--graph", path}).out) ==
        Json::parse(R"({"two_hyperplanes": 4, "three_hyperplanes": 4})"));
  CHECK(parse(run({"char-numbers", "--graph", graph_file(Graph(4, {{1, 2}, {3, 4}}))}).out) ==
        Json::parse(R"({"two_hyperplanes": 5, "three_hyperplanes": null})"));
  const Json hf = parse(run({"hilbert", "--graph", path, "--dmax", "3"}).out);
  CHECK(hf["hilbert_function"] == Json::parse("[1, 5, 9, 13]"));
  CHECK(hf["degree"] == 4);
  const Result pair = run({"path-det", "--graph", path, "--k", "3", "--l", "1"});
  CHECK(pair.code == 0);
  CHECK(parse(pair.out)["rhs"] == Json::parse(R"([{"coeff": "1", "monomial": {"x_1_2": 1, "x_2_3": 1}}])"));
  CHECK(run({"path-det", "--graph", path}).code == 0);
  CHECK(parse(run({"primality", "--graph", path, "--size", "3"}).out)["verdict"] == "prime");
  const std::string matrix = write_temp("m.json", R"({"n": 2, "entries": [["2", "1"], ["1", "1"]]})");
  const Json pr = parse(run({"prin-regular", "--matrix", matrix}).out);
  CHECK(pr["principally_regular"] == true);
  CHECK(pr["condition_holds"] == false);
  CHECK(run({"prin-regular", "--matrix", write_temp("m2.json", R"({"n": 2, "entries": [["1/0"]]})")}).code == 2);
}

TEST_CASE("serialization") {
  const VariableLayout layout(3);
  const Polynomial p = Rational(-1, 2) * testing::x(layout, 1, 2) * testing::x(layout, 1, 2) +
                       Rational(3) * testing::x(layout, 1, 1) * testing::t(layout);
  const Json j = polynomial_to_json(p, layout);
  CHECK(polynomial_from_json(j, layout) == p);
  CHECK(polynomial_from_json(Json::parse(j.dump()), layout) == p);
  CHECK(j[0]["coeff"] == "3");
  CHECK(j[1]["coeff"] == "-1/2");
  CHECK(j[1]["monomial"] == Json::parse(R"({"x_1_2": 2})"));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);

  const Graph g = parse_graph(R"({"n": 4, "edges": [[1, 2], [3, 4]]})");
  CHECK(g == Graph(4, {{1, 2}, {3, 4}}));
  CHECK(parse_graph("4\r\n1 2\r\n\r\n3 4\r\n") == g);
  try {
    parse_graph("4\n1 2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK(parse_edge_list("1 2\n", 3) == std::vector<Edge>{{1, 2}});
  CHECK(parse_edge_list("3\n1 2\n", 3) == std::vector<Edge>{{1, 2}});
  CHECK_THROWS_AS(parse_edge_list("4\n1 2\n", 3), ParseError);

  BettiTable b;
  b.add(0, 0, 1);
  b.add(1, 2, 3);
  CHECK(betti_to_json(b).dump() == R"({"betti":{"0,0":1,"1,2":3}})");

  const RationalMatrix m = rational_matrix_from_json(Json::parse(R"({"n": 2, "entries": [["1/2", "0"], ["0", 3]]})"));
  CHECK(m(0, 0) == Rational(1, 2));
  CHECK(m(1, 1) == 3);
  CHECK(rational_matrix_from_json(rational_matrix_to_json(m)) == m);

  const Json complex = complex_to_json(jozefiak_complex(2));
  CHECK(complex["matrices"][0] == Json::parse(
                                      R"([[[{"coeff": "1", "monomial": {"x_2_2": 1}}],
                                           [{"coeff": "1", "monomial": {"x_1_1": 1}}],
                                           [{"coeff": "-1", "monomial": {"x_1_2": 1}}]]])"));
}
