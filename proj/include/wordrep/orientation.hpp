// Edge orientations, semi-transitivity checking, and the exhaustive
// orientation-search oracle.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/word.hpp"  // SizeGuardError

namespace wordrep {

// An orientation assigns a direction to every edge of its base graph.
// out[v] holds the heads of edges leaving v.
struct Orientation {
  Graph base;
  std::vector<VertexSet> out;

  Orientation() = default;
  explicit Orientation(Graph g) : base(std::move(g)), out(static_cast<size_t>(base.vertex_count()), 0) {}

  void direct(int tail, int head);
  bool directed(int tail, int head) const { return (out[static_cast<size_t>(tail)] >> head) & 1; }
  // Every base edge has exactly one direction.
  bool complete() const;
};

// Orientation induced by a linear order: each edge points from the earlier
// vertex to the later one. order[i] = vertex at position i.
Orientation orient_by_order(const Graph& g, const std::vector<int>& order);

// A directed path u1 -> ... -> uk whose closing edge u1 -> uk is present but
// whose vertex pair `missing` is not adjacent in the base graph.
struct ShortcutWitness {
  std::vector<int> path;
  std::pair<int, int> missing;
};

struct SemiTransitivity {
  bool ok = false;
  std::optional<std::vector<int>> cycle;  // when not acyclic
  std::optional<ShortcutWitness> shortcut;
  explicit operator bool() const { return ok; }
};

SemiTransitivity is_semi_transitive(const Orientation& o);

// Exhaustive oracle: enumerates the acyclic orientations of g (each exactly
// once, by iterated source-layer decomposition) with incremental shortcut
// pruning, and returns the first semi-transitive one, else nullopt.
// Deterministic. Throws SizeGuardError when the graph exceeds `guard`
// vertices.
std::optional<Orientation> find_semi_transitive(const Graph& g, int guard = 12);

// "u -> v" lines, one per edge.
std::string to_string(const Orientation& o);

}  // namespace wordrep
