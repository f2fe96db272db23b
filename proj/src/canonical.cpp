#include "wordrep/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace wordrep {

namespace {

// Colour refinement: repeatedly re-rank vertices by (colour, sorted multiset
// of neighbour colours) until stable. Cell order is derived from sorted
// signatures, so it is invariant under relabeling.
void refine(const Graph& g, std::vector<int>& colour) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> sig(static_cast<size_t>(n));
  std::vector<int> order(static_cast<size_t>(n));
  for (;;) {
    for (int v = 0; v < n; ++v) {
      auto& s = sig[static_cast<size_t>(v)];
      s.clear();
      s.push_back(colour[static_cast<size_t>(v)]);
      WORDREP_FOR_SET(u, g.neighbors(v)) s.push_back(colour[static_cast<size_t>(u)]);
      std::sort(s.begin() + 1, s.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)]; });
    std::vector<int> next(static_cast<size_t>(n));
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[static_cast<size_t>(order[i])] != sig[static_cast<size_t>(order[i - 1])]) ++c;
      next[static_cast<size_t>(order[static_cast<size_t>(i)])] = c;
    }
    if (next == colour) return;
    colour.swap(next);
  }
}

std::vector<std::uint8_t> encode_by_colour(const Graph& g, const std::vector<int>& colour) {
  const int n = g.vertex_count();
  std::vector<int> pos(static_cast<size_t>(n));  // pos[new] = old vertex
  for (int v = 0; v < n; ++v) pos[static_cast<size_t>(colour[static_cast<size_t>(v)])] = v;
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int nbits = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      acc = static_cast<std::uint8_t>((acc << 1) | (g.has_edge(pos[static_cast<size_t>(i)], pos[static_cast<size_t>(j)]) ? 1 : 0));
      if (++nbits == 8) {
        bytes.push_back(acc);
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
  return bytes;
}

// Swapping u and v is an automorphism iff they are twins (same neighbourhood
// modulo each other); branching on only one twin per class is lossless.
bool twins(const Graph& g, int u, int v) {
  return (g.neighbors(u) & ~vbit(v)) == (g.neighbors(v) & ~vbit(u));
}

struct CanonSearch {
  const Graph& g;
  std::vector<std::uint8_t> best{};
  bool have = false;

  void run(std::vector<int> colour) {
    refine(g, colour);
    const int n = g.vertex_count();
    // Cell sizes per colour value.
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v) ++count[static_cast<size_t>(colour[static_cast<size_t>(v)])];
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[static_cast<size_t>(c)] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      auto bytes = encode_by_colour(g, colour);
      if (!have || bytes < best) {
        best = std::move(bytes);
        have = true;
      }
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colour[static_cast<size_t>(v)] == target) cell.push_back(v);
    std::vector<int> reps;
    for (int v : cell) {
      bool dup = false;
      for (int r : reps)
        if (twins(g, r, v)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(v);
    }
    for (int r : reps) {
      std::vector<int> child = colour;
      for (int v = 0; v < n; ++v)
        if (child[static_cast<size_t>(v)] > target || (child[static_cast<size_t>(v)] == target && v != r))
          ++child[static_cast<size_t>(v)];
      run(std::move(child));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  CanonSearch s{.g = g};
  s.run(std::vector<int>(static_cast<size_t>(g.vertex_count()), 0));
  return CanonicalForm{std::move(s.best)};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

namespace {

struct InducedSearch {
  const Graph& host;
  const Graph& pattern;
  std::vector<int> order{};   // pattern vertices, most-connected-first
  std::vector<int> mapped{};  // order index -> host vertex
  VertexSet used = 0;

  bool extend(size_t k) {
    if (k == order.size()) return true;
    const int p = order[k];
    // Candidates must match adjacency with every already-mapped vertex.
    VertexSet cand = host.vertex_mask() & ~used;
    for (size_t i = 0; i < k; ++i) {
      const VertexSet nb = host.neighbors(mapped[i]);
      cand &= pattern.has_edge(p, order[i]) ? nb : ~nb;
    }
    WORDREP_FOR_SET(h, cand) {
      if (host.degree(h) < pattern.degree(p)) continue;
      mapped[k] = h;
      used |= vbit(h);
      if (extend(k + 1)) return true;
      used &= ~vbit(h);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced(const Graph& host, const Graph& pattern) {
  const int np = pattern.vertex_count();
  if (np > host.vertex_count()) return std::nullopt;
  InducedSearch s{.host = host, .pattern = pattern};
  // Order pattern vertices greedily: highest degree first, then maximum
  // connectivity to the already-ordered prefix.
  VertexSet placed = 0;
  for (int k = 0; k < np; ++k) {
    int bestv = -1, bestscore = -1;
    for (int v = 0; v < np; ++v) {
      if (placed & vbit(v)) continue;
      const int score = set_size(pattern.neighbors(v) & placed) * 64 + pattern.degree(v);
      if (score > bestscore) {
        bestscore = score;
        bestv = v;
      }
    }
    s.order.push_back(bestv);
    placed |= vbit(bestv);
  }
  s.mapped.assign(static_cast<size_t>(np), -1);
  if (!s.extend(0)) return std::nullopt;
  std::vector<int> map(static_cast<size_t>(np));
  for (int k = 0; k < np; ++k) map[static_cast<size_t>(s.order[static_cast<size_t>(k)])] = s.mapped[static_cast<size_t>(k)];
  return map;
}

bool contains_induced(const Graph& host, const Graph& pattern) {
  return find_induced(host, pattern).has_value();
}

}  // namespace wordrep
