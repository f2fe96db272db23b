#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/enumeration.hpp"
#include "wordrep/split_decider.hpp"

using namespace wordrep;

namespace {

EnumReport run_enum(int m, int jobs) {
  EnumConfig cfg;
  cfg.clique_size = m;
  cfg.jobs = jobs;
  return find_minimal_nonrep(cfg);
}

}  // namespace

TEST_CASE("candidate stream") {
  EnumConfig zero;
  zero.clique_size = 4;
  zero.caps = {0, 0};
  std::vector<Graph> got;
  for_each_candidate(zero, [&](const Graph& g) {
    got.push_back(g);
    return true;
  });
  REQUIRE(got.size() == 1);
  CHECK(got[0] == testutil::complete_graph(4));

  EnumConfig four;
  four.clique_size = 4;
  CHECK(default_caps(4) == std::vector<int>{5, 3});
  CHECK(candidate_count(four) == 945);  // C(6,<=5) * C(4,<=3)
  std::uint64_t streamed = 0;
  for_each_candidate(four, [&](const Graph&) {
    ++streamed;
    return true;
  });
  CHECK(streamed == 945);

  EnumConfig five;
  five.clique_size = 5;
  CHECK(default_caps(5) == std::vector<int>{6, 6, 3});
  CHECK(candidate_count(five) == 18696704u);  // C(10,<=6)^2 * C(5,<=3) = 848*848*26

  EnumConfig bad;
  bad.clique_size = 7;
  CHECK_THROWS_AS(candidate_count(bad), std::invalid_argument);
}

TEST_CASE("is_minimal_nonrep") {
  CHECK(is_minimal_nonrep(t_graph(1)));
  CHECK_FALSE(is_minimal_nonrep(testutil::complete_graph(5)));
  // deleting clique vertex 5 of b_graph(5) leaves b_graph(4), still
  // non-representable
  CHECK_FALSE(is_minimal_nonrep(b_graph(5)));
  CHECK(is_minimal_nonrep(b_graph(4)) == is_minimal_nonrep(b_graph(4)));  // deterministic
}

TEST_CASE("clique size 3 has no minimal non-representable graphs") {
  const auto report = run_enum(3, 1);
  CHECK(report.minimal.empty());
  CHECK(report.total_candidates == 8);
  CHECK(report.representable == 8);
  CHECK(report.non_representable == 0);
}

TEST_CASE("clique size 4 reproduces T1..T4; reports are worker-count independent") {
  const auto report = run_enum(4, 1);
  REQUIRE(report.minimal.size() == 4);
  CHECK(report.cap_violations == 0);
  for (int i = 1; i <= 4; ++i) {
    bool found = false;
    for (const auto& g : report.minimal) found |= are_isomorphic(g, t_graph(i));
    CHECK_MESSAGE(found, "T", i, " missing from the m=4 report");
  }
  // every reported graph satisfies the minimality predicate it was built from
  for (const auto& g : report.minimal) CHECK(is_minimal_nonrep(g));

  const auto parallel = run_enum(4, 4);
  CHECK(parallel.total_candidates == report.total_candidates);
  CHECK(parallel.representable == report.representable);
  CHECK(parallel.non_representable == report.non_representable);
  CHECK(parallel.cap_violations == report.cap_violations);
  REQUIRE(parallel.minimal_forms.size() == report.minimal_forms.size());
  for (size_t i = 0; i < parallel.minimal_forms.size(); ++i)
    CHECK(parallel.minimal_forms[i] == report.minimal_forms[i]);
  CHECK(parallel.minimal_graph6 == report.minimal_graph6);

  // caps below the provable caps would lose minimal graphs
  EnumConfig tight;
  tight.clique_size = 4;
  tight.caps = {3, 2};
  CHECK_THROWS_AS(find_minimal_nonrep(tight), std::invalid_argument);
}

TEST_CASE("every non-representable m=4 candidate contains a minimal obstruction") {
  const auto report = run_enum(4, 1);
  EnumConfig cfg;
  cfg.clique_size = 4;
  std::vector<Graph> nonrep;
  find_minimal_nonrep(cfg, [&](const Graph& g, bool rep) {
    if (!rep) nonrep.push_back(g);
  });
  CHECK(nonrep.size() == report.non_representable);
  for (const auto& g : nonrep) {
    bool contains = false;
    for (const auto& mg : report.minimal)
      if (contains_induced(g, mg)) {
        contains = true;
        break;
      }
    CHECK(contains);
  }
}

TEST_CASE("emitted verdicts agree with the structural decider on a sample") {
  EnumConfig cfg;
  cfg.clique_size = 4;
  std::mt19937_64 rng(606);
  std::vector<std::pair<Graph, bool>> picked;
  find_minimal_nonrep(cfg, [&](const Graph& g, bool rep) {
    if (rng() % 16 == 0) picked.emplace_back(g, rep);
  });
  for (const auto& [g, rep] : picked) {
    const auto part = split_partition(g);
    REQUIRE(part.has_value());
    CHECK(decide(g, *part).representable == rep);
  }
}

TEST_CASE("report serialization") {
  const auto report = run_enum(3, 1);
  const std::string text = to_string(report);
  CHECK(text.find("wordrep enumeration report, format 1") == 0);
  CHECK(text.find("minimal_count: 0") != std::string::npos);
  CHECK(text.find("total_candidates: 8") != std::string::npos);
}
