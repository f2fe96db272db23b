// Named constructions and hard-coded reference graphs.
#pragma once

#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Complete graph on n vertices, labels "1".."n".
Graph complete(int n);

// K_ell plus, for each clique edge of the cyclic layout, one degree-2 vertex
// i' adjacent to i and i+1 (indices wrapping). 2*ell vertices.
Graph k_triangle(int ell);  // ell >= 3

// k_triangle(ell-1) plus an apex adjacent to the whole clique 1..ell-1.
// Minimal non-representable for every ell >= 4.
Graph a_graph(int ell);  // ell >= 4

// K_ell plus ell independent vertices, the i-th adjacent to the k cyclically
// consecutive clique vertices starting at i. Requires ell >= 2k-1, k >= 2.
Graph k_ell_k(int ell, int k);

// K_n plus a vertex x adjacent to 1 and 2.
Graph k_prime(int n);  // n >= 2

// K_ell plus a vertex x adjacent to 1 and i.
Graph k_i_ell(int ell, int i);  // 2 <= i <= ell

// Clique 1..n plus y ~ {1, 4, z} and z ~ {2, 4, y}.
Graph m_graph(int n);  // n >= 4

// m_graph(n) plus x ~ {1, 2}; non-representable for every n >= 4.
Graph b_graph(int n);  // n >= 4

// The nine minimal non-representable split graphs with clique size 4 (T1-T4)
// and 5 (T5-T9), transcribed once and pinned by the enumeration.
Graph t_graph(int idx);  // 1..9

// K_m plus all m-d+1 independent vertices whose neighbourhoods are the
// non-wrapping d-intervals of the path layout. Requires (m+1)/2 < d <= m-1.
Graph interval_split(int m, int d);

enum class ExpectedVerdict { Representable, NonRepresentable, MinimalNonRepresentable };

struct CatalogEntry {
  std::string name;
  Graph graph;
  ExpectedVerdict expected = ExpectedVerdict::Representable;
  std::string provenance;  // which construction family and parameters
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& name);

}  // namespace wordrep
