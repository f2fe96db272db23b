#include "wordrep/gluing.hpp"

#include <algorithm>

#include "wordrep/canonical.hpp"
#include "wordrep/catalog.hpp"

namespace wordrep {

Graph glue(const GlueSpec& spec) {
  const int k = static_cast<int>(spec.c1.size());
  if (spec.c2.size() != spec.c1.size()) throw std::invalid_argument("glue: clique lists differ in length");
  if (k < 1) throw std::invalid_argument("glue: empty clique lists");
  auto as_set = [](const Graph& g, const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) {
      if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("glue: vertex out of range");
      if (s & vbit(v)) throw std::invalid_argument("glue: duplicate vertex in clique list");
      s |= vbit(v);
    }
    return s;
  };
  const VertexSet s1 = as_set(spec.g1, spec.c1), s2 = as_set(spec.g2, spec.c2);
  if (!is_clique(spec.g1, s1) || !is_clique(spec.g2, s2))
    throw std::invalid_argument("glue: lists do not induce cliques");

  const int n1 = spec.g1.vertex_count(), n2 = spec.g2.vertex_count();
  const int n = n1 + n2 - k;
  Graph g(n);
  // g1 keeps its ids; g2's non-identified vertices follow in id order.
  std::vector<int> map2(static_cast<size_t>(n2), -1);
  for (int t = 0; t < k; ++t) map2[static_cast<size_t>(spec.c2[static_cast<size_t>(t)])] = spec.c1[static_cast<size_t>(t)];
  int next = n1;
  for (int v = 0; v < n2; ++v)
    if (map2[static_cast<size_t>(v)] < 0) map2[static_cast<size_t>(v)] = next++;

  for (int v = 0; v < n1; ++v) {
    if (spec.g1.has_labels()) g.set_label(v, spec.g1.display(v));
    WORDREP_FOR_SET(u, spec.g1.neighbors(v)) {
      if (u > v) g.add_edge(v, u);
    }
  }
  for (int v = 0; v < n2; ++v) {
    if (spec.g2.has_labels() && map2[static_cast<size_t>(v)] >= n1) g.set_label(map2[static_cast<size_t>(v)], spec.g2.display(v));
    WORDREP_FOR_SET(u, spec.g2.neighbors(v)) {
      if (u > v) g.add_edge(map2[static_cast<size_t>(v)], map2[static_cast<size_t>(u)]);
    }
  }
  return g;
}

GlueCliqueReport glue_ear_experiment(int ell, int i) {
  if (ell < 4) throw std::invalid_argument("glue_ear_experiment: ell must be >= 4");
  if (i < 2 || i > ell) throw std::invalid_argument("glue_ear_experiment: requires 2 <= i <= ell");

  GlueCliqueReport rep;
  rep.ell = ell;
  rep.i = i;
  std::vector<int> shared(static_cast<size_t>(ell));
  for (int t = 0; t < ell; ++t) shared[static_cast<size_t>(t)] = t;
  // k_triangle ids: clique 0..ell-1, primes ell..2ell-1. k_i_ell ids: clique
  // 0..ell-1, ear x = ell; after gluing x becomes vertex 2*ell.
  rep.glued = glue(GlueSpec{k_triangle(ell), k_i_ell(ell, i), shared, shared});

  const auto part = split_partition(rep.glued);
  if (!part) throw std::logic_error("glue_ear_experiment: glued graph is not split");
  auto decision = decide(rep.glued, *part);
  rep.representable = decision.representable;
  if (decision.representable) {
    rep.witness = decision.witness;
    return rep;
  }
  // The expected obstruction: clique 1..i+1, primes 1'..(i-1)', and the ear
  // together induce a_graph(i+1).
  for (int v = 0; v <= i; ++v) rep.obstruction_vertices.push_back(v);
  for (int p = 0; p < i - 1; ++p) rep.obstruction_vertices.push_back(ell + p);
  rep.obstruction_vertices.push_back(2 * ell);
  VertexSet obs = 0;
  for (int v : rep.obstruction_vertices) obs |= vbit(v);
  rep.obstruction_verified = are_isomorphic(induced_subgraph(rep.glued, obs), a_graph(i + 1));
  rep.contains_a4 = i >= 3 && contains_induced(rep.glued, a_graph(4));
  return rep;
}

GlueWordReport glue_word_experiment(int n) {
  if (n < 4) throw std::invalid_argument("glue_word_experiment: n must be >= 4");

  GlueWordReport rep;
  rep.n = n;
  const Graph kp = k_prime(n);  // clique 0..n-1, x = n
  const Graph mg = m_graph(n);  // clique 0..n-1, y = n, z = n+1
  const Graph bg = b_graph(n);

  // x 1 2 x 3 4 ... n
  rep.k_prime_word.letters = {n, 0, 1, n};
  for (int v = 2; v < n; ++v) rep.k_prime_word.letters.push_back(v);
  rep.k_prime_ok = represents(rep.k_prime_word, kp);

  // y 1 z 4 y 2 z 3 5 6 ... n
  rep.m_word.letters = {n, 0, n + 1, 3, n, 1, n + 1, 2};
  for (int v = 4; v < n; ++v) rep.m_word.letters.push_back(v);
  rep.m_ok = represents(rep.m_word, mg);

  std::vector<int> shared(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t) shared[static_cast<size_t>(t)] = t;
  rep.glue_is_b = are_isomorphic(glue(GlueSpec{kp, mg, shared, shared}), bg);

  const auto verdict = decide_graph(bg, std::max(12, bg.vertex_count()));
  rep.b_non_representable = verdict.status == AutoVerdict::Status::NonRepresentable;
  return rep;
}

}  // namespace wordrep
