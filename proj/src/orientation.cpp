#include "wordrep/orientation.hpp"

#include <algorithm>
#include <sstream>

namespace wordrep {

void Orientation::direct(int tail, int head) {
  if (!base.has_edge(tail, head)) throw std::invalid_argument("Orientation: not an edge of the base graph");
  if (directed(head, tail)) throw std::invalid_argument("Orientation: edge already directed the other way");
  out[static_cast<size_t>(tail)] |= vbit(head);
}

bool Orientation::complete() const {
  for (int v = 0; v < base.vertex_count(); ++v) {
    const VertexSet covered = out[static_cast<size_t>(v)];
    VertexSet incoming = 0;
    for (int u = 0; u < base.vertex_count(); ++u)
      if ((out[static_cast<size_t>(u)] >> v) & 1) incoming |= vbit(u);
    if ((covered | incoming) != base.neighbors(v)) return false;
    if (covered & incoming) return false;
  }
  return true;
}

Orientation orient_by_order(const Graph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.vertex_count())
    throw std::invalid_argument("orient_by_order: order size mismatch");
  std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < order.size(); ++i) pos[static_cast<size_t>(order[i])] = static_cast<int>(i);
  Orientation o(g);
  for (auto [u, v] : g.edges()) {
    if (pos[static_cast<size_t>(u)] < pos[static_cast<size_t>(v)])
      o.direct(u, v);
    else
      o.direct(v, u);
  }
  return o;
}

namespace {

std::optional<std::vector<int>> topo_order(int n, const std::vector<VertexSet>& out) {
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    WORDREP_FOR_SET(w, out[static_cast<size_t>(v)]) { ++indeg[static_cast<size_t>(w)]; }
  }
  std::vector<int> order;
  VertexSet ready = 0;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready |= vbit(v);
  while (ready) {
    const int v = first_vertex(ready);
    ready &= ~vbit(v);
    order.push_back(v);
    WORDREP_FOR_SET(w, out[static_cast<size_t>(v)]) {
      if (--indeg[static_cast<size_t>(w)] == 0) ready |= vbit(w);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::vector<int> extract_cycle(int n, VertexSet all, const std::vector<VertexSet>& out) {
  // Peel vertices without both an in- and an out-edge; the core is a union of
  // cycles and connections between them, so a forward walk must repeat.
  VertexSet alive = all;
  bool changed = true;
  while (changed) {
    changed = false;
    WORDREP_FOR_SET(v, alive) {
      bool has_in = false;
      WORDREP_FOR_SET(u, alive & ~vbit(v)) {
        if ((out[static_cast<size_t>(u)] >> v) & 1) {
          has_in = true;
          break;
        }
      }
      const bool has_out = (out[static_cast<size_t>(v)] & alive) != 0;
      if (!has_in || !has_out) {
        alive &= ~vbit(v);
        changed = true;
      }
    }
  }
  std::vector<int> walk;
  std::vector<int> at(static_cast<size_t>(n), -1);
  int v = first_vertex(alive);
  while (at[static_cast<size_t>(v)] < 0) {
    at[static_cast<size_t>(v)] = static_cast<int>(walk.size());
    walk.push_back(v);
    v = first_vertex(out[static_cast<size_t>(v)] & alive);
  }
  return std::vector<int>(walk.begin() + at[static_cast<size_t>(v)], walk.end());
}

// Looks for a directed path closed by an edge whose vertex set is not a
// clique (a shortcut). Only closing edges ending in `sinks` are scanned; the
// search explores clean (clique) path prefixes only and exits as soon as a
// prefix turns dirty, since any completion to the target stays dirty.
struct ShortcutScan {
  const Graph& g;
  const std::vector<VertexSet>& out;
  const std::vector<VertexSet>& reach;
  int target = -1;
  VertexSet path_set = 0;
  bool want_witness = false;
  std::vector<int> path{};  // maintained only when want_witness
  ShortcutWitness witness{};

  bool dirty_path_to_target(int v) {
    WORDREP_FOR_SET(w, out[static_cast<size_t>(v)]) {
      if (w != target && !((reach[static_cast<size_t>(w)] >> target) & 1)) continue;
      const VertexSet missing = path_set & ~g.neighbors(w);
      if (missing) {
        if (want_witness) build_witness(w, missing);
        return true;
      }
      if (w == target) continue;  // clean transitive path
      path_set |= vbit(w);
      if (want_witness) path.push_back(w);
      const bool found = dirty_path_to_target(w);
      if (want_witness) path.pop_back();
      path_set &= ~vbit(w);
      if (found) return true;
    }
    return false;
  }

  void build_witness(int w, VertexSet missing) {
    witness.missing = {first_vertex(missing), w};
    witness.path = path;
    int c = w;
    witness.path.push_back(c);
    while (c != target) {
      WORDREP_FOR_SET(x, out[static_cast<size_t>(c)]) {
        if (x == target || ((reach[static_cast<size_t>(x)] >> target) & 1)) {
          c = x;
          break;
        }
      }
      witness.path.push_back(c);
    }
  }

  bool any_shortcut(VertexSet sinks) {
    for (int s = 0; s < g.vertex_count(); ++s) {
      WORDREP_FOR_SET(t, out[static_cast<size_t>(s)] & sinks) {
        target = t;
        path_set = vbit(s);
        if (want_witness) path.assign(1, s);
        if (dirty_path_to_target(s)) return true;
      }
    }
    return false;
  }
};

}  // namespace

SemiTransitivity is_semi_transitive(const Orientation& o) {
  SemiTransitivity res;
  const int n = o.base.vertex_count();
  auto topo = topo_order(n, o.out);
  if (!topo) {
    res.cycle = extract_cycle(n, o.base.vertex_mask(), o.out);
    return res;
  }
  std::vector<VertexSet> reach(static_cast<size_t>(n), 0);
  for (auto it = topo->rbegin(); it != topo->rend(); ++it) {
    VertexSet r = o.out[static_cast<size_t>(*it)];
    WORDREP_FOR_SET(w, o.out[static_cast<size_t>(*it)]) r |= reach[static_cast<size_t>(w)];
    reach[static_cast<size_t>(*it)] = r;
  }
  ShortcutScan scan{.g = o.base, .out = o.out, .reach = reach};
  scan.want_witness = true;
  if (scan.any_shortcut(o.base.vertex_mask())) {
    res.shortcut = scan.witness;
    return res;
  }
  res.ok = true;
  return res;
}

// ---------------------------------------------------------------------------
// exhaustive search
// ---------------------------------------------------------------------------

namespace {

// Enumerates acyclic orientations by their unique source-layer decomposition:
// layer k+1 is a nonempty independent set, each member with a neighbour in
// layer k, and every edge points from earlier layers to later ones. A partial
// orientation already containing a shortcut is pruned: the missing pair is a
// non-edge of the graph, so no completion can repair it.
struct LayerSearch {
  const Graph& g;
  int n;
  std::vector<VertexSet> out;
  std::vector<VertexSet> reach;
  VertexSet placed = 0;
  std::optional<Orientation> result;

  explicit LayerSearch(const Graph& graph)
      : g(graph), n(graph.vertex_count()),
        out(static_cast<size_t>(graph.vertex_count()), 0),
        reach(static_cast<size_t>(graph.vertex_count()), 0) {}

  void search(VertexSet last_layer) {
    if (result) return;
    const VertexSet remaining = g.vertex_mask() & ~placed;
    if (!remaining) {
      Orientation o(g);
      o.out = out;
      result = std::move(o);
      return;
    }
    VertexSet cand = remaining;
    if (placed) {
      VertexSet nb = 0;
      WORDREP_FOR_SET(v, last_layer) nb |= g.neighbors(v);
      cand &= nb;
    }
    if (cand) choose(cand, 0);
  }

  // Enumerates nonempty independent subsets of the candidates (smallest
  // vertex decided first) as the next layer.
  void choose(VertexSet cand_rest, VertexSet layer) {
    if (result) return;
    if (!cand_rest) {
      if (!layer) return;
      const auto saved_out = out;
      const auto saved_reach = reach;
      const VertexSet saved_placed = placed;
      if (place_layer(layer)) search(layer);
      out = saved_out;
      reach = saved_reach;
      placed = saved_placed;
      return;
    }
    const int v = first_vertex(cand_rest);
    const VertexSet rest = cand_rest & (cand_rest - 1);
    if (!(g.neighbors(v) & layer)) choose(rest, layer | vbit(v));
    if (result) return;
    choose(rest, layer);
  }

  // Directs all placed->layer edges; true iff still shortcut-free. Any new
  // shortcut must close at a new-layer vertex, so only those are scanned.
  bool place_layer(VertexSet layer) {
    WORDREP_FOR_SET(v, layer) {
      const VertexSet in_nbrs = g.neighbors(v) & placed;
      WORDREP_FOR_SET(u, in_nbrs) out[static_cast<size_t>(u)] |= vbit(v);
      WORDREP_FOR_SET(u, placed) {
        if ((vbit(u) | reach[static_cast<size_t>(u)]) & in_nbrs) reach[static_cast<size_t>(u)] |= vbit(v);
      }
    }
    placed |= layer;
    ShortcutScan scan{.g = g, .out = out, .reach = reach};
    return !scan.any_shortcut(layer);
  }
};

}  // namespace

std::optional<Orientation> find_semi_transitive(const Graph& g, int guard) {
  if (g.vertex_count() > guard)
    throw SizeGuardError("find_semi_transitive: " + std::to_string(g.vertex_count()) +
                         " vertices exceed the exhaustion guard of " + std::to_string(guard));
  LayerSearch s(g);
  s.search(0);
  return s.result;
}

std::string to_string(const Orientation& o) {
  std::ostringstream outstr;
  for (int v = 0; v < o.base.vertex_count(); ++v) {
    WORDREP_FOR_SET(w, o.out[static_cast<size_t>(v)]) {
      outstr << o.base.display(v) << " -> " << o.base.display(w) << '\n';
    }
  }
  return outstr.str();
}

}  // namespace wordrep
