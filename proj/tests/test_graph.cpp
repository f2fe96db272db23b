#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"
#include "wordrep/graph.hpp"

using namespace wordrep;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Independent split recognizer: tries every bipartition.
bool split_by_brute_force(const Graph& g) {
  const int n = g.vertex_count();
  for (VertexSet c = 0; c < (VertexSet{1} << n); ++c)
    if (is_clique(g, c) && is_independent_set(g, g.vertex_mask() & ~c)) return true;
  return false;
}

// Isomorphism by trying all vertex permutations.
bool iso_by_brute_force(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  std::vector<int> perm(static_cast<size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

Graph random_split_graph(int m, int independents, std::mt19937_64& rng) {
  Graph g = complete_graph(m + independents);
  // Rebuild: clique 0..m-1, each extra vertex attached to a random proper
  // subset of the clique.
  Graph h(m + independents);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) h.add_edge(i, j);
  std::uniform_int_distribution<int> deg(0, m - 1);
  for (int v = m; v < m + independents; ++v) {
    const int d = deg(rng);
    auto picks = random_perm(m, rng);
    for (int t = 0; t < d; ++t) h.add_edge(v, picks[static_cast<size_t>(t)]);
  }
  (void)g;
  return h;
}

}  // namespace

TEST_CASE("from_edge_list basics") {
  const Graph c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(c5.vertex_count() == 5);
  CHECK(c5.edge_count() == 5);
  for (int i = 0; i < 5; ++i) CHECK(c5.degree(i) == 2);

  const Graph single = Graph::from_edge_list(1, {});
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  const Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(is_clique(k4, k4.vertex_mask()));

  // duplicates collapse
  CHECK(Graph::from_edge_list(2, {{0, 1}, {1, 0}}).edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edge_list(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(64, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("graph6 round trip and pinned encodings") {
  // Hand-encoded per the published format: 'D' = 63+5, payload bits all zero.
  const Graph edgeless5 = parse_graph6("D??");
  CHECK(edgeless5.vertex_count() == 5);
  CHECK(edgeless5.edge_count() == 0);

  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(parse_graph6("D~{") == complete_graph(5));

  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("D?"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS(parse_graph6("D??\x01"), std::invalid_argument);  // invalid byte
  CHECK_THROWS_AS(parse_graph6("~~~~"), std::invalid_argument);   // order too large

  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 14), rng);
    const std::string s = to_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(to_graph6(parse_graph6(s)) == s);
  }
  // 63 vertices uses the long order form.
  Graph big(63);
  big.add_edge(0, 62);
  const std::string enc = to_graph6(big);
  CHECK(enc.substr(0, 4) == std::string{'~', '?', '?', '~'});
  CHECK(parse_graph6(enc) == big);
}

TEST_CASE("edge list text round trip") {
  const Graph c5 = cycle(5);
  CHECK(parse_edge_list_text(to_edge_list_text(c5)) == c5);
  CHECK(parse_edge_list_text("3\n0 1\n") == Graph::from_edge_list(3, {{0, 1}}));
  CHECK_THROWS_AS(parse_edge_list_text("3\n0\n"), std::invalid_argument);
}

TEST_CASE("induced subgraphs") {
  CHECK(induced_subgraph(complete_graph(5), 0b10101) == complete_graph(3));
  // four consecutive vertices of C5 induce P4
  CHECK(induced_subgraph(cycle(5), 0b01111) == path(4));
  CHECK_THROWS_AS(induced_subgraph(cycle(5), 0), std::invalid_argument);
}

TEST_CASE("dropping T1's degree-3 apex leaves the triangle-covered K3") {
  const Graph t1 = t_graph(1);
  int apex = -1;  // the clique vertex with no degree-2 neighbours
  for (int v = 0; v < 4; ++v)
    if (t1.degree(v) == 3) apex = v;
  REQUIRE(apex >= 0);
  CHECK(are_isomorphic(without_vertex(t1, apex), k_triangle(3)));
}

TEST_CASE("split partitions") {
  const auto k5 = split_partition(complete_graph(5));
  REQUIRE(k5.has_value());
  CHECK(k5->clique == complete_graph(5).vertex_mask());
  CHECK(k5->independent == 0);

  // C4 is not split; cross-check with the brute-force bipartition oracle.
  CHECK_FALSE(split_by_brute_force(cycle(4)));
  CHECK_FALSE(split_partition(cycle(4)).has_value());

  // P4 is split even though its lex-least maximum clique has a dependent rest.
  CHECK(split_by_brute_force(path(4)));
  const auto p4 = split_partition(path(4));
  REQUIRE(p4.has_value());
  CHECK(is_valid_split_partition(path(4), *p4));

  // T1: maximum clique {0,1,2,3}, three degree-2 vertices outside
  const auto t1p = split_partition(t_graph(1));
  REQUIRE(t1p.has_value());
  CHECK(t1p->clique == 0b0001111);
  CHECK(t1p->independent == 0b1110000);
  // a_graph(4): the apex joins the base triangle in the maximum clique
  const auto a4p = split_partition(a_graph(4));
  REQUIRE(a4p.has_value());
  CHECK(a4p->clique == (vbit(0) | vbit(1) | vbit(2) | vbit(6)));

  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const int m = 1 + static_cast<int>(rng() % 7);
    const Graph g = random_split_graph(m, static_cast<int>(rng() % 5), rng);
    const auto part = split_partition(g);
    REQUIRE(part.has_value());
    CHECK(is_valid_split_partition(g, *part));
    // induced subgraph of a split graph is split
    const VertexSet keep = (rng() & g.vertex_mask()) | vbit(static_cast<int>(rng() % g.vertex_count()));
    CHECK(split_partition(induced_subgraph(g, keep)).has_value());
  }
}

TEST_CASE("canonical forms agree with brute-force isomorphism on all 4-vertex graphs") {
  std::vector<Graph> all;
  for (int bits = 0; bits < 64; ++bits) {
    Graph g(4);
    int b = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        if ((bits >> b) & 1) g.add_edge(i, j);
        ++b;
      }
    all.push_back(g);
  }
  std::set<CanonicalForm> classes;
  for (const auto& g : all) classes.insert(canonical_form(g));
  CHECK(classes.size() == 11);
  for (const auto& a : all)
    for (const auto& b : all)
      CHECK((canonical_form(a) == canonical_form(b)) == iso_by_brute_force(a, b));
}

TEST_CASE("canonical forms are relabeling-invariant") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 300; ++t) {
    const Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng);
    const auto perm = random_perm(g.vertex_count(), rng);
    CHECK(canonical_form(relabel(g, perm)) == canonical_form(g));
  }
  CHECK(canonical_form(cycle(5)) == canonical_form(relabel(cycle(5), {2, 0, 3, 1, 4})));
  CHECK(canonical_form(cycle(5)) != canonical_form(path(5)));
  CHECK(are_isomorphic(complete_graph(12), complete_graph(12)));
}

TEST_CASE("contains_induced") {
  CHECK_FALSE(contains_induced(complete_graph(5), Graph(2)));  // no non-edge in K5
  CHECK(contains_induced(cycle(5), path(4)));
  CHECK_FALSE(contains_induced(cycle(5), complete_graph(3)));
  const auto w = find_induced(cycle(6), path(3));
  REQUIRE(w.has_value());
  CHECK(are_isomorphic(induced_subgraph(cycle(6), vbit((*w)[0]) | vbit((*w)[1]) | vbit((*w)[2])), path(3)));
  // the mapping itself preserves adjacency exactly
  CHECK(cycle(6).has_edge((*w)[0], (*w)[1]));
  CHECK(cycle(6).has_edge((*w)[1], (*w)[2]));
  CHECK_FALSE(cycle(6).has_edge((*w)[0], (*w)[2]));
}
