// Canonical forms (isomorphism keys) via colour refinement with
// individualization backtracking, plus induced-subgraph search.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// Opaque relabeling-invariant key: equal iff the graphs are isomorphic.
// Totally ordered, usable for deduplication.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// Vertices of `host` (as a mapping pattern-id -> host-id) inducing a subgraph
// isomorphic to `pattern`, or nullopt.
std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern);
bool contains_induced(const Graph& host, const Graph& pattern);

}  // namespace wordrep
