#include "wordrep/threshold.hpp"

#include <random>

namespace wordrep {

Graph build(const BuildSequence& seq) {
  if (seq.empty()) throw std::invalid_argument("build: empty sequence");
  const int n = static_cast<int>(seq.size());
  Graph g(n);
  for (int v = 1; v < n; ++v)
    if (seq[static_cast<size_t>(v)] == BuildStep::Dominating)
      for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

namespace {

struct StripResult {
  std::vector<int> order;           // strip order
  std::vector<BuildStep> stripped_as;
};

std::optional<StripResult> strip(const Graph& g) {
  StripResult res;
  VertexSet live = g.vertex_mask();
  while (set_size(live) > 1) {
    int pick = -1;
    BuildStep as = BuildStep::Isolated;
    const int alive = set_size(live);
    WORDREP_FOR_SET(v, live) {
      const int d = set_size(g.neighbors(v) & live);
      if (d == 0) {
        pick = v;
        as = BuildStep::Isolated;
        break;
      }
      if (d == alive - 1) {
        pick = v;
        as = BuildStep::Dominating;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    res.order.push_back(pick);
    res.stripped_as.push_back(as);
    live &= ~vbit(pick);
  }
  res.order.push_back(first_vertex(live));
  res.stripped_as.push_back(BuildStep::Isolated);  // the initial vertex
  return res;
}

}  // namespace

std::optional<BuildSequence> is_threshold(const Graph& g) {
  const auto s = strip(g);
  if (!s) return std::nullopt;
  BuildSequence seq(s->order.size());
  for (size_t i = 0; i < s->order.size(); ++i)
    seq[s->order.size() - 1 - i] = s->stripped_as[i];
  return seq;
}

std::optional<std::vector<int>> threshold_build_order(const Graph& g) {
  const auto s = strip(g);
  if (!s) return std::nullopt;
  std::vector<int> order(s->order.rbegin(), s->order.rend());
  return order;
}

std::vector<TwinStep> reduction_certificate(const Graph& g) {
  const auto order = threshold_build_order(g);
  if (!order) throw std::invalid_argument("reduction_certificate: not a threshold graph");
  std::vector<TwinStep> steps;
  VertexSet live = g.vertex_mask();
  for (size_t i = 0; i + 1 < order->size(); ++i) {
    const int removed = (*order)[i];
    const int twin = (*order)[i + 1];
    const bool adjacent = g.has_edge(removed, twin);
    // The two oldest live vertices always agree modulo their mutual edge.
    const VertexSet a = g.neighbors(removed) & live & ~vbit(twin);
    const VertexSet b = g.neighbors(twin) & live & ~vbit(removed);
    if (a != b) throw std::logic_error("reduction_certificate: build order lost the twin property");
    steps.push_back({removed, twin, adjacent});
    live &= ~vbit(removed);
  }
  return steps;
}

Graph random_threshold(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_threshold: n must be >= 1");
  std::mt19937_64 rng(seed);
  BuildSequence seq;
  seq.push_back(BuildStep::Isolated);
  for (int i = 1; i < n; ++i) seq.push_back((rng() & 1) ? BuildStep::Dominating : BuildStep::Isolated);
  return build(seq);
}

std::string to_string(const BuildSequence& seq) {
  std::string out = "*";
  for (size_t i = 1; i < seq.size(); ++i) out.push_back(seq[i] == BuildStep::Dominating ? 'D' : 'I');
  return out;
}

BuildSequence parse_build_sequence(const std::string& text) {
  if (text.empty() || text[0] != '*') throw std::invalid_argument("build sequence must start with '*'");
  BuildSequence seq{BuildStep::Isolated};
  for (size_t i = 1; i < text.size(); ++i) {
    if (text[i] == 'I')
      seq.push_back(BuildStep::Isolated);
    else if (text[i] == 'D')
      seq.push_back(BuildStep::Dominating);
    else
      throw std::invalid_argument("build sequence: invalid step character");
  }
  return seq;
}

}  // namespace wordrep
