// Core graph value type for small (<= 63 vertex) undirected simple graphs,
// plus graph6 / edge-list IO and split-partition recognition.
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wordrep {

inline constexpr int kMaxVertices = 63;

using VertexSet = std::uint64_t;  // bit v <=> vertex v

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
constexpr int set_size(VertexSet s) { return std::popcount(s); }
constexpr int first_vertex(VertexSet s) { return std::countr_zero(s); }

// Iterates `v` over the members of `s`, lowest id first.
#define WORDREP_FOR_SET(v, s)                                        \
  for (::wordrep::VertexSet wr_it_ = (s); wr_it_ != 0; wr_it_ &= wr_it_ - 1) \
    if (const int v = std::countr_zero(wr_it_); true)

// Undirected simple graph on dense vertex ids 0..n-1. Adjacency rows are
// single machine words; immutable once built (builders call add_edge during
// construction only).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;
  VertexSet vertex_mask() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }
  void add_edge(int u, int v);

  std::vector<std::pair<int, int>> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  void set_label(int v, std::string s);
  // Display name: the label when set, else the decimal id.
  std::string display(int v) const;

  // Labeled equality: same vertex count and same edge set.
  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

bool is_clique(const Graph& g, VertexSet s);
bool is_independent_set(const Graph& g, VertexSet s);

// Induced subgraph on `keep`, densely re-indexed preserving id order; labels
// carried over. Throws on an empty keep set.
Graph induced_subgraph(const Graph& g, VertexSet keep);
Graph without_vertex(const Graph& g, int v);

// New graph where old vertex v becomes perm[v]; perm must be a bijection.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// ---- graph6 (bit-exact: offset-63 bytes, upper triangle column-major) ----
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// ---- plain edge-list text: first line "n", then one "u v" line per edge ----
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

// ---- split partitions ----

// Partition into a maximal clique and an independent set. The clique of any
// such partition is automatically a maximum clique.
struct SplitPartition {
  VertexSet clique = 0;
  VertexSet independent = 0;
  int clique_size() const { return set_size(clique); }
};

// Recognizes split graphs. On success the clique is a maximum-size clique
// (ties broken by lexicographically least vertex set) and the rest is
// independent; otherwise nullopt.
std::optional<SplitPartition> split_partition(const Graph& g);

// All maximum cliques whose complement is independent, in lex order. Used to
// cross-check that verdicts do not depend on the partition choice.
std::vector<SplitPartition> all_split_partitions(const Graph& g);

bool is_valid_split_partition(const Graph& g, const SplitPartition& p);

}  // namespace wordrep
