// Exhaustive, pruned search for the minimal non-representable split graphs of
// a given clique size.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wordrep/canonical.hpp"
#include "wordrep/graph.hpp"

namespace wordrep {

struct EnumConfig {
  int clique_size = 5;  // 3..6
  // caps[d-2] = maximum count of independent vertices of degree d. Empty
  // selects the defaults degree_cap(m,d) + 1: any graph exceeding a cap by 2
  // or more contains a cap+1 subgraph that is already non-representable, so
  // the +1 envelope provably covers every minimal graph.
  std::vector<int> caps;
  int jobs = 1;
  bool emit_all = false;  // stream per-candidate verdicts
};

std::vector<int> default_caps(int m);

// Candidate space: K_m plus every family of distinct independent-vertex
// neighbourhoods of sizes 2..m-1 within the per-degree caps. Degree-0/1
// vertices never matter and degree-m vertices would break clique maximality.
std::uint64_t candidate_count(const EnumConfig& cfg);

// Streams the candidates in their canonical index order (degree-(m-1)
// families outermost). Return false from the callback to stop early.
void for_each_candidate(const EnumConfig& cfg, const std::function<bool(const Graph&)>& fn);

// Random access into the same order.
Graph candidate_at(const EnumConfig& cfg, std::uint64_t index);

// True iff the graph is non-representable but every single-vertex-deleted
// induced subgraph is representable. Split graphs use the structural decider;
// small non-split graphs fall back to the exhaustive search.
bool is_minimal_nonrep(const Graph& g);

struct EnumReport {
  int clique_size = 0;
  std::vector<int> caps;
  std::uint64_t total_candidates = 0;
  std::uint64_t representable = 0;
  std::uint64_t non_representable = 0;
  // Representable candidates exceeding a degree cap; must stay zero.
  std::uint64_t cap_violations = 0;
  std::vector<Graph> minimal;  // sorted by canonical form
  std::vector<CanonicalForm> minimal_forms;
  std::vector<std::string> minimal_graph6;
  double wall_seconds = 0;
};

// Decides every candidate, then keeps the non-representable ones all of whose
// single-vertex deletions (independent and clique) are representable,
// deduplicated up to isomorphism. Deterministic modulo wall time, for any
// worker count.
EnumReport find_minimal_nonrep(const EnumConfig& cfg,
                               const std::function<void(const Graph&, bool)>& emit = {});
EnumReport find_minimal_nonrep(int m);

// Versioned structured-text form of the report.
std::string to_string(const EnumReport& report);

}  // namespace wordrep
