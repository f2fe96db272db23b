#include "wordrep/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wordrep {

Graph::Graph(int n) {
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                                ", got " + std::to_string(n));
  n_ = n;
  adj_.assign(static_cast<size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex id " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= vbit(v);
  adj_[v] |= vbit(u);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (VertexSet row : adj_) total += std::popcount(row);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    WORDREP_FOR_SET(v, adj_[u] & ~(vbit(u + 1) - 1)) out.emplace_back(u, v);
  return out;
}

void Graph::set_label(int v, std::string s) {
  check_vertex(v);
  if (labels_.empty()) labels_.assign(static_cast<size_t>(n_), std::string());
  labels_[static_cast<size_t>(v)] = std::move(s);
}

std::string Graph::display(int v) const {
  check_vertex(v);
  if (!labels_.empty() && !labels_[static_cast<size_t>(v)].empty()) return labels_[static_cast<size_t>(v)];
  return std::to_string(v);
}

bool is_clique(const Graph& g, VertexSet s) {
  WORDREP_FOR_SET(v, s) {
    if ((g.neighbors(v) & s) != (s & ~vbit(v))) return false;
  }
  return true;
}

bool is_independent_set(const Graph& g, VertexSet s) {
  WORDREP_FOR_SET(v, s) {
    if (g.neighbors(v) & s) return false;
  }
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertex_mask();
  if (keep == 0) throw std::invalid_argument("induced_subgraph: empty vertex set");
  std::vector<int> dense(static_cast<size_t>(g.vertex_count()), -1);
  int k = 0;
  WORDREP_FOR_SET(v, keep) dense[static_cast<size_t>(v)] = k++;
  Graph h(k);
  WORDREP_FOR_SET(v, keep) {
    if (g.has_labels()) h.set_label(dense[static_cast<size_t>(v)], g.display(v));
    WORDREP_FOR_SET(u, g.neighbors(v) & keep) {
      if (u > v) h.add_edge(dense[static_cast<size_t>(v)], dense[static_cast<size_t>(u)]);
    }
  }
  return h;
}

Graph without_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertex_mask() & ~vbit(v));
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw std::invalid_argument("relabel: permutation size mismatch");
  VertexSet seen = 0;
  for (int v : perm) {
    if (v < 0 || v >= n || (seen & vbit(v))) throw std::invalid_argument("relabel: not a permutation");
    seen |= vbit(v);
  }
  Graph h(n);
  for (int v = 0; v < n; ++v) {
    if (g.has_labels()) h.set_label(perm[static_cast<size_t>(v)], g.display(v));
    WORDREP_FOR_SET(u, g.neighbors(v)) {
      if (u > v) h.add_edge(perm[static_cast<size_t>(v)], perm[static_cast<size_t>(u)]);
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// graph6
// ---------------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.remove_suffix(1);
  if (text.rfind(">>graph6<<", 0) == 0) text.remove_prefix(10);
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  for (char c : text)
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid byte");

  size_t pos = 0;
  int n = 0;
  if (text[0] == '~') {
    // Long form: '~' + 3 bytes, required for n >= 63.
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated long-form order");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    if (n < 63) throw std::invalid_argument("graph6: non-canonical long-form order");
    pos = 4;
  } else {
    n = text[0] - 63;
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices)
    throw std::invalid_argument("graph6: order " + std::to_string(n) + " out of supported range");

  const int nbits = n * (n - 1) / 2;
  const size_t nbytes = static_cast<size_t>((nbits + 5) / 6);
  if (text.size() - pos != nbytes) throw std::invalid_argument("graph6: malformed length");

  Graph g(n);
  int bitidx = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      const int byte = text[pos + static_cast<size_t>(bitidx / 6)] - 63;
      if ((byte >> (5 - bitidx % 6)) & 1) g.add_edge(row, col);
      ++bitidx;
    }
  }
  // Padding bits must be zero for a canonical encoding.
  for (; bitidx < static_cast<int>(nbytes) * 6; ++bitidx) {
    const int byte = text[pos + static_cast<size_t>(bitidx / 6)] - 63;
    if ((byte >> (5 - bitidx % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("graph6: empty graph");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0, nbits = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// ---------------------------------------------------------------------------
// edge-list text
// ---------------------------------------------------------------------------

Graph parse_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
  Graph g(n);
  int u = 0, v = 0;
  while (in >> u) {
    if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
    g.add_edge(u, v);
  }
  return g;
}

std::string to_edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// split partitions
// ---------------------------------------------------------------------------

namespace {

// Branch-and-bound maximum clique; adequate far beyond the sizes used here.
struct MaxCliqueSearch {
  const Graph& g;
  int best = 0;

  void expand(VertexSet chosen, VertexSet cand) {
    if (set_size(chosen) + set_size(cand) <= best) return;
    if (cand == 0) {
      best = std::max(best, set_size(chosen));
      return;
    }
    const int pivot = first_vertex(cand);
    // Branch on vertices not adjacent to the pivot (at least the pivot itself).
    VertexSet branch = cand & ~g.neighbors(pivot);
    WORDREP_FOR_SET(v, branch) {
      expand(chosen | vbit(v), cand & g.neighbors(v));
      cand &= ~vbit(v);
      if (set_size(chosen) + set_size(cand) <= best) return;
    }
  }
};

// Emits size-`need` cliques extendable from (chosen, cand) in lex order of the
// vertex set; stops when the visitor returns true.
bool lex_cliques(const Graph& g, VertexSet chosen, VertexSet cand, int need,
                 const std::function<bool(VertexSet)>& visit);

}  // namespace

std::optional<SplitPartition> split_partition(const Graph& g) {
  auto parts = all_split_partitions(g);
  if (parts.empty()) return std::nullopt;
  return parts.front();
}

namespace {
bool lex_cliques(const Graph& g, VertexSet chosen, VertexSet cand, int need,
                 const std::function<bool(VertexSet)>& visit) {
  if (need == 0) return visit(chosen);
  if (set_size(cand) < need) return false;
  WORDREP_FOR_SET(v, cand) {
    if (lex_cliques(g, chosen | vbit(v), cand & g.neighbors(v) & ~(vbit(v + 1) - 1), need - 1, visit))
      return true;
    cand &= ~vbit(v);
    if (set_size(cand) < need) return false;
  }
  return false;
}
}  // namespace

std::vector<SplitPartition> all_split_partitions(const Graph& g) {
  MaxCliqueSearch mc{g};
  mc.expand(0, g.vertex_mask());
  const int omega = mc.best;
  std::vector<SplitPartition> out;
  lex_cliques(g, 0, g.vertex_mask(), omega, [&](VertexSet clique) {
    const VertexSet rest = g.vertex_mask() & ~clique;
    if (is_independent_set(g, rest)) out.push_back(SplitPartition{clique, rest});
    return false;  // keep enumerating
  });
  return out;
}

bool is_valid_split_partition(const Graph& g, const SplitPartition& p) {
  if ((p.clique & p.independent) != 0) return false;
  if ((p.clique | p.independent) != g.vertex_mask()) return false;
  if (!is_clique(g, p.clique)) return false;
  if (!is_independent_set(g, p.independent)) return false;
  const int m = p.clique_size();
  WORDREP_FOR_SET(v, p.independent) {
    if (set_size(g.neighbors(v) & p.clique) > m - 1) return false;  // clique not maximal
  }
  return true;
}

}  // namespace wordrep
