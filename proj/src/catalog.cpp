#include "wordrep/catalog.hpp"

#include <stdexcept>

namespace wordrep {

namespace {

void add_clique(Graph& g, int from, int count) {
  for (int i = from; i < from + count; ++i)
    for (int j = i + 1; j < from + count; ++j) g.add_edge(i, j);
}

void number_labels(Graph& g, int from, int count, int start = 1) {
  for (int i = 0; i < count; ++i) g.set_label(from + i, std::to_string(start + i));
}

}  // namespace

Graph complete(int n) {
  Graph g(n);
  add_clique(g, 0, n);
  number_labels(g, 0, n);
  return g;
}

Graph k_triangle(int ell) {
  if (ell < 3) throw std::invalid_argument("k_triangle: ell must be >= 3");
  if (2 * ell > kMaxVertices) throw std::invalid_argument("k_triangle: too many vertices");
  Graph g(2 * ell);
  add_clique(g, 0, ell);
  number_labels(g, 0, ell);
  for (int i = 0; i < ell; ++i) {
    const int primed = ell + i;
    g.add_edge(primed, i);
    g.add_edge(primed, (i + 1) % ell);
    g.set_label(primed, std::to_string(i + 1) + "'");
  }
  return g;
}

Graph a_graph(int ell) {
  if (ell < 4) throw std::invalid_argument("a_graph: ell must be >= 4");
  if (2 * ell - 1 > kMaxVertices) throw std::invalid_argument("a_graph: too many vertices");
  Graph g(2 * ell - 1);
  add_clique(g, 0, ell - 1);
  number_labels(g, 0, ell - 1);
  for (int i = 0; i < ell - 1; ++i) {
    const int primed = (ell - 1) + i;
    g.add_edge(primed, i);
    g.add_edge(primed, (i + 1) % (ell - 1));
    g.set_label(primed, std::to_string(i + 1) + "'");
  }
  const int apex = 2 * ell - 2;
  for (int i = 0; i < ell - 1; ++i) g.add_edge(apex, i);
  g.set_label(apex, std::to_string(ell));
  return g;
}

Graph k_ell_k(int ell, int k) {
  if (k < 2) throw std::invalid_argument("k_ell_k: k must be >= 2");
  if (ell < 2 * k - 1) throw std::invalid_argument("k_ell_k: requires ell >= 2k-1");
  if (2 * ell > kMaxVertices) throw std::invalid_argument("k_ell_k: too many vertices");
  Graph g(2 * ell);
  add_clique(g, 0, ell);
  number_labels(g, 0, ell);
  for (int i = 0; i < ell; ++i) {
    const int v = ell + i;
    for (int t = 0; t < k; ++t) g.add_edge(v, (i + t) % ell);
    g.set_label(v, std::to_string(i + 1) + "'");
  }
  return g;
}

Graph k_prime(int n) {
  if (n < 2) throw std::invalid_argument("k_prime: n must be >= 2");
  Graph g(n + 1);
  add_clique(g, 0, n);
  number_labels(g, 0, n);
  g.add_edge(n, 0);
  g.add_edge(n, 1);
  g.set_label(n, "x");
  return g;
}

Graph k_i_ell(int ell, int i) {
  if (i < 2 || i > ell) throw std::invalid_argument("k_i_ell: requires 2 <= i <= ell");
  Graph g(ell + 1);
  add_clique(g, 0, ell);
  number_labels(g, 0, ell);
  g.add_edge(ell, 0);
  g.add_edge(ell, i - 1);
  g.set_label(ell, "x");
  return g;
}

Graph m_graph(int n) {
  if (n < 4) throw std::invalid_argument("m_graph: n must be >= 4");
  Graph g(n + 2);
  add_clique(g, 0, n);
  number_labels(g, 0, n);
  const int y = n, z = n + 1;
  g.set_label(y, "y");
  g.set_label(z, "z");
  g.add_edge(y, 0);  // y ~ 1
  g.add_edge(y, 3);  // y ~ 4
  g.add_edge(z, 1);  // z ~ 2
  g.add_edge(z, 3);  // z ~ 4
  g.add_edge(y, z);
  return g;
}

Graph b_graph(int n) {
  Graph g = m_graph(n);
  Graph h(g.vertex_count() + 1);
  for (int v = 0; v < g.vertex_count(); ++v) h.set_label(v, g.display(v));
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  const int x = g.vertex_count();
  h.add_edge(x, 0);
  h.add_edge(x, 1);
  h.set_label(x, "x");
  return h;
}

Graph t_graph(int idx) {
  // Independent-vertex attachments above the clique {1..4} (T1-T4) or {1..5}
  // (T5-T9), 1-based as drawn.
  static const std::vector<std::vector<std::vector<int>>> attach = {
      /*T1*/ {{1, 2}, {2, 3}, {1, 3}},
      /*T2*/ {{2, 3}, {2, 4}, {1, 2}},
      /*T3*/ {{2, 3, 4}, {1, 2, 3}, {1, 2, 4}},
      /*T4*/ {{1, 2}, {1, 2, 3}, {1, 4}, {1, 3, 4}},
      /*T5*/ {{1, 2}, {2, 3}, {3, 4}, {4, 1}},
      /*T6*/ {{1, 2, 3}, {1, 2}, {1, 4}, {2, 5}},
      /*T7*/ {{1, 3}, {2, 4}, {1, 2, 5}, {3, 4, 5}},
      /*T8*/ {{1, 3}, {2, 4}, {1, 2, 5}, {1, 2, 3, 4}},
      /*T9*/ {{1, 3}, {1, 4}, {2, 3}, {1, 2, 3, 5}, {1, 3, 4, 5}},
  };
  if (idx < 1 || idx > 9) throw std::invalid_argument("t_graph: index out of 1..9");
  const auto& rows = attach[static_cast<size_t>(idx - 1)];
  const int m = idx <= 4 ? 4 : 5;
  const int n = m + static_cast<int>(rows.size());
  Graph g(n);
  add_clique(g, 0, m);
  number_labels(g, 0, n);
  for (size_t r = 0; r < rows.size(); ++r)
    for (int c : rows[r]) g.add_edge(m + static_cast<int>(r), c - 1);
  return g;
}

Graph interval_split(int m, int d) {
  if (d > m - 1 || 2 * d <= m + 1) throw std::invalid_argument("interval_split: requires (m+1)/2 < d <= m-1");
  const int extras = m - d + 1;
  Graph g(m + extras);
  add_clique(g, 0, m);
  number_labels(g, 0, m);
  for (int i = 0; i < extras; ++i) {
    const int v = m + i;
    for (int t = 0; t < d; ++t) g.add_edge(v, i + t);
    g.set_label(v, std::to_string(i + 1) + "'");
  }
  return g;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> table = [] {
    std::vector<CatalogEntry> t;
    for (int i = 1; i <= 9; ++i)
      t.push_back({"T" + std::to_string(i), t_graph(i), ExpectedVerdict::MinimalNonRepresentable,
                   i <= 4 ? "clique-4 obstruction catalog" : "clique-5 obstruction catalog"});
    for (int ell = 4; ell <= 6; ++ell)
      t.push_back({"A" + std::to_string(ell), a_graph(ell), ExpectedVerdict::MinimalNonRepresentable,
                   "apex over triangle-covered clique, ell=" + std::to_string(ell)});
    for (int ell = 3; ell <= 5; ++ell)
      t.push_back({"KT" + std::to_string(ell), k_triangle(ell), ExpectedVerdict::Representable,
                   "triangle-covered complete graph, ell=" + std::to_string(ell)});
    t.push_back({"K5", complete(5), ExpectedVerdict::Representable, "complete graph"});
    t.push_back({"K5_2", k_ell_k(5, 2), ExpectedVerdict::Representable, "cyclic 2-windows over K5"});
    t.push_back({"K5_3", k_ell_k(5, 3), ExpectedVerdict::Representable, "cyclic 3-windows over K5"});
    for (int n = 4; n <= 5; ++n) {
      t.push_back({"KP" + std::to_string(n), k_prime(n), ExpectedVerdict::Representable,
                   "complete graph plus one ear, n=" + std::to_string(n)});
      t.push_back({"M" + std::to_string(n), m_graph(n), ExpectedVerdict::Representable,
                   "glue partner with y,z pair, n=" + std::to_string(n)});
      t.push_back({"B" + std::to_string(n), b_graph(n), ExpectedVerdict::NonRepresentable,
                   "glued counterexample, n=" + std::to_string(n)});
    }
    t.push_back({"IS_5_4", interval_split(5, 4), ExpectedVerdict::Representable, "maximal interval family m=5 d=4"});
    t.push_back({"IS_6_5", interval_split(6, 5), ExpectedVerdict::Representable, "maximal interval family m=6 d=5"});
    return t;
  }();
  return table;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace wordrep
