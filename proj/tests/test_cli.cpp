#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/cli.hpp"
#include "wordrep/split_decider.hpp"

using namespace wordrep;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("represents and word-graph") {
  const std::string c5 = "Dhc";  // cycle 0-1-2-3-4-0
  auto r = run_cli({"represents", "1521324354", c5});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run_cli({"--fail-on-negative", "represents", "1 2 3 4 5", c5});
  CHECK(r.code == 1);
  CHECK(r.out == "false\n");

  r = run_cli({"word-graph", "1521324354"});
  CHECK(r.code == 0);
  CHECK(r.out.find(c5) != std::string::npos);

  r = run_cli({"represents", "zz", c5});
  CHECK(r.code == 2);
}

TEST_CASE("decide routes and exit codes") {
  auto r = run_cli({"decide", to_graph6(t_graph(6))});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: non-representable") != std::string::npos);
  CHECK(r.out.find("split-decider") != std::string::npos);

  r = run_cli({"--fail-on-negative", "decide", to_graph6(t_graph(6))});
  CHECK(r.code == 1);

  r = run_cli({"decide", "Dhc"});  // C5: not split, exhaustive route
  CHECK(r.code == 0);
  CHECK(r.out.find("status: representable") != std::string::npos);
  CHECK(r.out.find("exhaustive-search") != std::string::npos);

  r = run_cli({"decide", "not-a-graph6***"});
  CHECK(r.code == 2);

  r = run_cli({"nonsense"});
  CHECK(r.code == 2);

  // edge-list input
  r = run_cli({"decide", "3\n0 1\n1 2\n0 2\n"});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: representable") != std::string::npos);

  // forced input formats
  r = run_cli({"--edges", "decide", "3\n0 1\n"});
  CHECK(r.code == 0);
  r = run_cli({"--graph6", "decide", "3\n0 1\n"});
  CHECK(r.code == 2);

  // raw mode skips the reduction but keeps the verdict
  r = run_cli({"decide", "--raw", to_graph6(t_graph(1))});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: non-representable") != std::string::npos);
  r = run_cli({"decide", "--raw", "Dhc"});  // C5 is not split
  CHECK(r.code == 2);

  // the exhaustive-search guard and its override
  Graph c13(13);
  for (int i = 0; i < 13; ++i) c13.add_edge(i, (i + 1) % 13);
  r = run_cli({"decide", to_graph6(c13)});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: unknown-guarded") != std::string::npos);
  r = run_cli({"decide", "--force", to_graph6(c13)});
  CHECK(r.code == 0);
  CHECK(r.out.find("status: representable") != std::string::npos);
}

TEST_CASE("json decide emits a re-verifiable witness") {
  auto r = run_cli({"--json", "decide", to_graph6(k_triangle(4))});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["status"] == "representable");
  REQUIRE(j.contains("witness"));

  // Rebuild the witness from the JSON and re-verify it independently.
  const Graph reduced = parse_graph6(j["witness"]["reduced_graph6"].get<std::string>());
  SplitWitness w;
  w.graph = reduced;
  const auto part = split_partition(reduced);
  REQUIRE(part.has_value());
  w.partition = *part;
  for (const auto& v : j["witness"]["order"]) w.order.order.push_back(v.get<int>());
  for (const auto& e : j["witness"]["assignment"]) {
    TypedVertex tv;
    tv.vertex = e["vertex"].get<int>();
    tv.cls.type = e["type"] == "AB" ? VertexType::AB : VertexType::C;
    tv.cls.a = e["a"].get<int>();
    tv.cls.b = e["b"].get<int>();
    w.assignment.push_back(tv);
  }
  CHECK(is_semi_transitive(orientation_of_witness(w)).ok);
}

TEST_CASE("json decide emits a re-verifiable orientation; output is stable across runs") {
  auto r = run_cli({"--json", "decide", "Dhc"});  // C5, exhaustive route
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("orientation"));
  const Graph c5 = parse_graph6("Dhc");
  Orientation o(c5);
  for (const auto& e : j["orientation"]["edges"]) o.direct(e[0].get<int>(), e[1].get<int>());
  CHECK(o.complete());
  CHECK(is_semi_transitive(o).ok);

  const auto again = run_cli({"--json", "decide", "Dhc"});
  CHECK(again.out == r.out);
}

TEST_CASE("catalog subcommands") {
  auto r = run_cli({"catalog", "list"});
  CHECK(r.code == 0);
  CHECK(r.out.find("T5") != std::string::npos);

  r = run_cli({"catalog", "get", "T5"});
  CHECK(r.code == 0);
  CHECK(r.out.find(to_graph6(t_graph(5))) != std::string::npos);
  CHECK(r.out.find("edges:") != std::string::npos);

  r = run_cli({"catalog", "get", "NOPE"});
  CHECK(r.code == 2);
}

TEST_CASE("enumerate subcommand") {
  auto r = run_cli({"--json", "enumerate", "--clique-size", "3"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["total_candidates"] == 8);
  CHECK(j["minimal"].empty());

  r = run_cli({"enumerate", "--clique-size", "3", "--emit-all"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\t') == 8);  // one verdict line per candidate

  r = run_cli({"enumerate", "--clique-size", "3", "--caps", "2=1"});
  CHECK(r.code == 2);  // below the provable cap
}

TEST_CASE("glue and threshold subcommands") {
  auto r = run_cli({"glue", to_graph6(k_prime(4)), "0,1,2,3", to_graph6(m_graph(4)), "0,1,2,3"});
  CHECK(r.code == 0);
  CHECK(are_isomorphic(parse_graph6(r.out.substr(0, r.out.find('\n'))), b_graph(4)));

  r = run_cli({"threshold", "random", "10", "7"});
  REQUIRE(r.code == 0);
  std::string g6 = r.out.substr(0, r.out.find('\n'));
  r = run_cli({"threshold", "check", g6});
  CHECK(r.code == 0);
  CHECK(r.out.find("threshold: yes") != std::string::npos);
  CHECK(r.out.find("sequence: *") != std::string::npos);

  r = run_cli({"threshold", "check", "Ch"});  // P4 is not threshold
  CHECK(r.code == 0);
  CHECK(r.out.find("threshold: no") != std::string::npos);
}
