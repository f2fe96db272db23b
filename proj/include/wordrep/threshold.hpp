// Threshold graphs: build sequences, recognition, and the twin-elimination
// certificate of representability.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

enum class BuildStep : std::uint8_t { Isolated, Dominating };

// seq[0] stands for the initial single vertex (its value is ignored); vertex
// i of the built graph corresponds to step i. Serialized as "*IDID...".
using BuildSequence = std::vector<BuildStep>;

Graph build(const BuildSequence& seq);  // throws on empty sequence

// Strips isolated/dominating vertices (lowest id first) until stuck; success
// yields the reversed strip order as a BuildSequence, otherwise nullopt.
std::optional<BuildSequence> is_threshold(const Graph& g);

// An addition order of g's own vertices witnessing thresholdness (the reverse
// of the strip order), or nullopt.
std::optional<std::vector<int>> threshold_build_order(const Graph& g);

struct TwinStep {
  int removed = -1;  // vertex eliminated at this step
  int twin = -1;     // surviving vertex with the same neighbourhood (modulo adjacency)
  bool adjacent = false;
};

// Eliminates vertices in build order; each step names the twin that keeps
// representability unchanged, certifying the graph representable. Throws on
// non-threshold input.
std::vector<TwinStep> reduction_certificate(const Graph& g);

// Uniform coin per step; deterministic per seed.
Graph random_threshold(int n, std::uint64_t seed);

std::string to_string(const BuildSequence& seq);
BuildSequence parse_build_sequence(const std::string& text);

}  // namespace wordrep
