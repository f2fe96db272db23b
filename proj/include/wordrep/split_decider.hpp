// Structural decision of word-representability for split graphs: path orders
// on the clique, interval/prefix-suffix typing of independent vertices, the
// boundary restrictions, and the assumption-reducing preprocessing.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"
#include "wordrep/orientation.hpp"

namespace wordrep {

// Path positions are 1-based throughout: position p is the p-th vertex of the
// directed Hamiltonian path induced on the clique.

enum class VertexType { AB, C, Infeasible };

struct Classification {
  VertexType type = VertexType::Infeasible;
  // AB: neighbourhood is exactly positions [a, b].
  // C:  neighbourhood is exactly the prefix [1, a] plus the suffix [b, m].
  int a = 0, b = 0;
  friend bool operator==(const Classification&, const Classification&) = default;
};

// Classifies a nonempty, proper position set (bit p-1 <=> position p).
// Exactly one shape can match; a set that is both contiguous and
// prefix-plus-suffix would be all of 1..m, which is excluded.
Classification classify(std::uint32_t position_mask, int m);
Classification classify(const std::vector<int>& positions, int m);

struct TypedVertex {
  int vertex = -1;
  Classification cls;
};

struct RestrictionViolation {
  int x = -1, y = -1;  // x is the type-C vertex whose boundaries y covers
};

// Boundary restrictions: for a C vertex x with boundary positions (a, b), no
// other vertex may cover both p_a and p_b with an interval, a prefix, or a
// suffix. Returns the first violating pair, or nullopt when satisfied.
// Throws if any entry is Infeasible.
std::optional<RestrictionViolation> check_restrictions(const std::vector<TypedVertex>& assignment, int m);

struct PathOrder {
  std::vector<int> order;  // order[i] = clique vertex at position i+1
};

struct SplitWitness {
  Graph graph;  // the graph this witness certifies (possibly reduced)
  SplitPartition partition;
  PathOrder order;
  std::vector<TypedVertex> assignment;
};

// Serialized form: the path order line, then "v: AB lo hi" / "v: C i j" per
// independent vertex.
std::string to_string(const SplitWitness& w);

// ---- reduction preprocessing ----

struct ReductionStep {
  enum class Reason { Degree0, Degree1, Twin };
  int removed = -1;  // original vertex id
  Reason reason = Reason::Degree0;
  int twin = -1;  // surviving twin's original id (Twin only)
};

struct Reduction {
  Graph graph;                       // reduced graph, densely re-indexed
  VertexSet kept = 0;                // original ids kept
  std::vector<int> dense;            // original id -> reduced id, -1 if removed
  std::vector<ReductionStep> steps;  // in removal order
};

// Repeatedly removes vertices of degree <= 1 and one of each twin pair
// (identical neighbourhoods modulo mutual adjacency); representability is
// invariant under these removals and the trace lifts verdicts back.
Reduction reduce_assumptions(const Graph& g, const SplitPartition& partition);

// ---- the decider ----

struct DecideOptions {
  bool apply_reduction = true;
  // Skip each path order's reverse (outcome-preserving halving; off by
  // default, equality of outcomes is asserted in tests).
  bool skip_reversals = false;
};

struct OrderFailure {
  PathOrder order;
  std::optional<int> infeasible_vertex;
  std::optional<RestrictionViolation> violation;
};

struct DecideResult {
  bool representable = false;
  std::optional<SplitWitness> witness;  // certifies the reduced graph
  Reduction reduction;
  std::optional<OrderFailure> first_failure;  // sample failure when non-representable
  std::uint64_t orders_tried = 0;
  explicit operator bool() const { return representable; }
};

// Iterates the m! path orders of the clique in lexicographic order; for each,
// classifies every independent vertex and checks the restrictions. The A/B
// distinction never matters for existence, so vertices classify
// deterministically and the first admissible order yields a witness.
DecideResult decide(const Graph& g, const SplitPartition& partition, DecideOptions opt = {});

// Expands a witness into the concrete orientation: clique edges follow the
// path order, AB vertices become sources, C vertices take in-edges from the
// prefix and out-edges to the suffix. Throws on a malformed witness.
Orientation orientation_of_witness(const SplitWitness& w);

// Sufficient condition for representability: every clique vertex has total
// degree at most m. One-sided.
bool clique_degree_predicate(const Graph& g, const SplitPartition& partition);

// Sufficient condition for NON-representability: some clique vertex has at
// least d+1 independent neighbours of degree d <= m-2. Requires distinct
// independent neighbourhoods (run reduce_assumptions first); throws otherwise.
bool large_degree_obstruction(const Graph& g, const SplitPartition& partition);

// Maximum number of distinct-neighbourhood independent vertices of degree d a
// representable split graph with clique size m can carry.
int degree_cap(int m, int d);

// ---- auto-routing decision for arbitrary graphs ----

struct AutoVerdict {
  enum class Status { Representable, NonRepresentable, UnknownGuarded };
  enum class Method { SplitDecider, ExhaustiveSearch, Guarded };
  Status status = Status::UnknownGuarded;
  Method method = Method::Guarded;
  std::optional<DecideResult> split_result;  // SplitDecider only
  std::optional<SplitPartition> partition;
  std::optional<Orientation> orientation;  // ExhaustiveSearch positive only
  bool representable() const { return status == Status::Representable; }
};

// Split graphs go to decide(); everything else to the exhaustive orientation
// search, guarded by vertex count unless forced.
AutoVerdict decide_graph(const Graph& g, int guard = 12, bool force = false);

}  // namespace wordrep
