#include <random>

#include "doctest.h"
#include "test_util.hpp"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/gluing.hpp"

using namespace wordrep;

TEST_CASE("glue basics") {
  const Graph k3 = testutil::complete_graph(3);
  CHECK(are_isomorphic(glue({k3, k3, {0, 1, 2}, {0, 1, 2}}), k3));

  // gluing two edges at a single shared vertex gives P3, representable
  const Graph k2 = testutil::complete_graph(2);
  const Graph p3 = glue({k2, k2, {0}, {0}});
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(decide_graph(p3).representable());

  // the headline example: K'4 + M4 glued over the 4-clique is B4
  CHECK(are_isomorphic(glue({k_prime(4), m_graph(4), {0, 1, 2, 3}, {0, 1, 2, 3}}), b_graph(4)));

  CHECK_THROWS_AS(glue({k3, k3, {0, 1}, {0, 1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(glue({k3, k3, {0, 0}, {1, 1}}), std::invalid_argument);
  const Graph p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(glue({p4, p4, {0, 2}, {0, 2}}), std::invalid_argument);  // not a clique
}

TEST_CASE("glue size and degree arithmetic") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const int k = 1 + static_cast<int>(rng() % 4);
    const Graph g1 = testutil::random_split_instance(4 + static_cast<int>(rng() % 2), 3, rng);
    const Graph g2 = testutil::random_split_instance(4 + static_cast<int>(rng() % 2), 3, rng);
    std::vector<int> c1, c2;
    for (int i = 0; i < k; ++i) {
      c1.push_back(i);
      c2.push_back(i);
    }
    const Graph g = glue({g1, g2, c1, c2});
    CHECK(g.vertex_count() == g1.vertex_count() + g2.vertex_count() - k);
    for (int i = 0; i < k; ++i)
      CHECK(g.degree(c1[static_cast<size_t>(i)]) ==
            g1.degree(c1[static_cast<size_t>(i)]) + g2.degree(c2[static_cast<size_t>(i)]) - (k - 1));
  }
}

TEST_CASE("gluing a non-representable part keeps the result non-representable") {
  // a_graph(4) glued with an ear over one of its clique edges
  const Graph host = a_graph(4);
  const Graph g = glue({host, k_prime(2), {0, 1}, {0, 1}});
  CHECK(contains_induced(g, a_graph(4)));
  CHECK_FALSE(decide_graph(g, g.vertex_count()).representable());
}

TEST_CASE("glue_ear_experiment: the glue verdict depends on where the ear lands") {
  const auto mid = glue_ear_experiment(5, 4);
  CHECK_FALSE(mid.representable);
  CHECK(mid.obstruction_verified);  // the listed vertices induce a_graph(5)
  CHECK(mid.contains_a4);           // and a 4-apex obstruction embeds too
  CHECK(contains_induced(mid.glued, a_graph(4)));

  const auto low = glue_ear_experiment(5, 2);
  CHECK(low.representable);
  REQUIRE(low.witness.has_value());

  const auto high = glue_ear_experiment(5, 5);
  CHECK(high.representable);

  CHECK_THROWS_AS(glue_ear_experiment(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(glue_ear_experiment(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(glue_ear_experiment(5, 6), std::invalid_argument);
}

TEST_CASE("glue_word_experiment word checks and glue identity") {
  for (int n = 4; n <= 5; ++n) {
    const auto rep = glue_word_experiment(n);
    CHECK(rep.k_prime_ok);
    CHECK(rep.m_ok);
    CHECK(rep.glue_is_b);
    CHECK(rep.b_non_representable);
    CHECK(rep.all_ok());
  }
  CHECK_THROWS_AS(glue_word_experiment(3), std::invalid_argument);
}
