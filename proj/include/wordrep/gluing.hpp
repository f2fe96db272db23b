// Clique gluing and the two counterexample constructions around it.
#pragma once

#include <optional>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/split_decider.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

// Identifies c1[t] of g1 with c2[t] of g2; both lists must induce cliques of
// equal size and be duplicate-free. Neighbourhoods of identified vertices
// union.
struct GlueSpec {
  Graph g1, g2;
  std::vector<int> c1, c2;
};

Graph glue(const GlueSpec& spec);

// Gluing the triangle-covered complete graph with a one-ear complete graph,
// identity on the shared clique. Representable iff the ear lands next to the
// clique boundary (i == 2 or i == ell); otherwise an apex obstruction embeds.
struct GlueCliqueReport {
  int ell = 0, i = 0;
  Graph glued;
  bool representable = false;
  std::optional<SplitWitness> witness;         // when representable
  std::vector<int> obstruction_vertices;        // when not: induces a_graph(i+1)
  bool obstruction_verified = false;            // induced subgraph isomorphic to a_graph(i+1)
  bool contains_a4 = false;                     // a 4-apex obstruction also embeds (i >= 3)
};

GlueCliqueReport glue_ear_experiment(int ell, int i);  // ell >= 4, 2 <= i <= ell

// Gluing k_prime(n) and m_graph(n) over the shared n-clique: both factors are
// representable by explicit words, the glue is b_graph(n), and b_graph(n) is
// not representable.
struct GlueWordReport {
  int n = 0;
  Word k_prime_word, m_word;
  bool k_prime_ok = false;
  bool m_ok = false;
  bool b_non_representable = false;
  bool glue_is_b = false;
  bool all_ok() const { return k_prime_ok && m_ok && b_non_representable && glue_is_b; }
};

GlueWordReport glue_word_experiment(int n);  // n >= 4

}  // namespace wordrep
