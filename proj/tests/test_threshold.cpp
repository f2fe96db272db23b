#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/orientation.hpp"
#include "wordrep/split_decider.hpp"
#include "wordrep/threshold.hpp"

using namespace wordrep;

namespace {

const BuildStep I = BuildStep::Isolated;
const BuildStep D = BuildStep::Dominating;

// Exhausts every strip order (not just the lowest-id-first policy).
bool threshold_by_brute_force(const Graph& g, VertexSet live) {
  const int alive = set_size(live);
  if (alive <= 1) return true;
  WORDREP_FOR_SET(v, live) {
    const int d = set_size(g.neighbors(v) & live);
    if (d == 0 || d == alive - 1)
      if (threshold_by_brute_force(g, live & ~vbit(v))) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("build") {
  CHECK(build({I, D, D}) == testutil::complete_graph(3));
  const Graph star = build({I, I, D});
  CHECK(star.edge_count() == 2);
  CHECK(star.degree(2) == 2);
  CHECK(build({I, I, I, I}).edge_count() == 0);
  CHECK_THROWS_AS(build({}), std::invalid_argument);
  CHECK(to_string(BuildSequence{I, I, D, I, D}) == "*IDID");
  CHECK(build(parse_build_sequence("*IDID")) == build({I, I, D, I, D}));
  CHECK_THROWS_AS(parse_build_sequence("IDID"), std::invalid_argument);
}

TEST_CASE("is_threshold") {
  // star K_{1,4}
  Graph star(5);
  for (int leaf = 1; leaf < 5; ++leaf) star.add_edge(0, leaf);
  const auto seq = is_threshold(star);
  REQUIRE(seq.has_value());
  CHECK(are_isomorphic(build(*seq), star));

  // P4 is the smallest non-threshold graph here; verify against the
  // exhaustive strip oracle.
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(threshold_by_brute_force(p4, p4.vertex_mask()));
  CHECK_FALSE(is_threshold(p4).has_value());

  const auto k5seq = is_threshold(testutil::complete_graph(5));
  REQUIRE(k5seq.has_value());
  for (size_t i = 1; i < k5seq->size(); ++i) CHECK((*k5seq)[i] == D);
}

TEST_CASE("reduction_certificate") {
  CHECK(reduction_certificate(testutil::complete_graph(3)).size() == 2);

  const Graph g = build({I, I, D, I, D});
  const auto cert = reduction_certificate(g);
  REQUIRE(cert.size() == 4);
  VertexSet live = g.vertex_mask();
  for (const auto& s : cert) {
    // the named twin really is a twin in the current graph
    CHECK((g.neighbors(s.removed) & live & ~vbit(s.twin)) == (g.neighbors(s.twin) & live & ~vbit(s.removed)));
    CHECK(g.has_edge(s.removed, s.twin) == s.adjacent);
    live &= ~vbit(s.removed);
  }
  CHECK(set_size(live) == 1);

  CHECK_THROWS_AS(reduction_certificate(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}})),
                  std::invalid_argument);
}

TEST_CASE("random_threshold determinism and representability") {
  CHECK(random_threshold(1, 42).vertex_count() == 1);
  CHECK(random_threshold(12, 7) == random_threshold(12, 7));
  std::mt19937_64 seeds(1);
  for (int t = 0; t < 500; ++t) {
    const Graph g = random_threshold(2 + static_cast<int>(seeds() % 11), seeds());
    const auto seq = is_threshold(g);
    REQUIRE(seq.has_value());
    CHECK(are_isomorphic(build(*seq), g));
    CHECK(split_partition(g).has_value());
  }
  // Threshold graphs are representable: structural decider and the exhaustive
  // oracle agree on a sample.
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_threshold(2 + static_cast<int>(seeds() % 9), seeds());
    const auto part = split_partition(g);
    REQUIRE(part.has_value());
    CHECK(decide(g, *part).representable);
    CHECK(find_semi_transitive(g).has_value());
    CHECK_FALSE(reduction_certificate(g).empty());
  }
}
