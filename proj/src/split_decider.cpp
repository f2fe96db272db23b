#include "wordrep/split_decider.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace wordrep {

Classification classify(std::uint32_t position_mask, int m) {
  if (m < 1 || m > 31) throw std::invalid_argument("classify: clique size out of range");
  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  if (position_mask == 0) throw std::invalid_argument("classify: empty position set");
  if ((position_mask & ~full) != 0) throw std::invalid_argument("classify: position out of 1..m");
  if (position_mask == full) throw std::invalid_argument("classify: position set covers the whole path");

  const int lo = std::countr_zero(position_mask);
  const int hi = 31 - std::countl_zero(position_mask);
  const std::uint32_t block = ((std::uint32_t{1} << (hi - lo + 1)) - 1) << lo;
  if (position_mask == block) return {VertexType::AB, lo + 1, hi + 1};

  if ((position_mask & 1) && (position_mask >> (m - 1)) & 1) {
    const std::uint32_t gap = ~position_mask & full;
    const int glo = std::countr_zero(gap);
    const int ghi = 31 - std::countl_zero(gap);
    const std::uint32_t gapblock = ((std::uint32_t{1} << (ghi - glo + 1)) - 1) << glo;
    if (gap == gapblock) return {VertexType::C, glo, ghi + 2};  // prefix [1,glo], suffix [ghi+2,m]
  }
  return {VertexType::Infeasible};
}

Classification classify(const std::vector<int>& positions, int m) {
  std::uint32_t mask = 0;
  for (int p : positions) {
    if (p < 1 || p > m) throw std::invalid_argument("classify: position out of 1..m");
    mask |= std::uint32_t{1} << (p - 1);
  }
  return classify(mask, m);
}

std::optional<RestrictionViolation> check_restrictions(const std::vector<TypedVertex>& assignment, int m) {
  (void)m;
  for (const auto& e : assignment)
    if (e.cls.type == VertexType::Infeasible)
      throw std::invalid_argument("check_restrictions: unclassified (infeasible) vertex present");
  for (const auto& x : assignment) {
    if (x.cls.type != VertexType::C) continue;
    const int a = x.cls.a, b = x.cls.b;  // boundary positions p_a and p_b
    for (const auto& y : assignment) {
      if (y.vertex == x.vertex) continue;
      if (y.cls.type == VertexType::AB) {
        if (y.cls.a <= a && y.cls.b >= b) return RestrictionViolation{x.vertex, y.vertex};
      } else {
        if (y.cls.a >= b || y.cls.b <= a) return RestrictionViolation{x.vertex, y.vertex};
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

namespace {

bool twins_in(const Graph& g, VertexSet live, int u, int v) {
  return (g.neighbors(u) & live & ~vbit(v)) == (g.neighbors(v) & live & ~vbit(u));
}

}  // namespace

Reduction reduce_assumptions(const Graph& g, const SplitPartition& partition) {
  if (!is_valid_split_partition(g, partition))
    throw std::invalid_argument("reduce_assumptions: invalid split partition");
  Reduction red;
  VertexSet live = g.vertex_mask();
  for (;;) {
    if (set_size(live) <= 1) break;
    int removed = -1;
    // Degree <= 1 first, lowest id.
    WORDREP_FOR_SET(v, live) {
      const int d = set_size(g.neighbors(v) & live);
      if (d <= 1) {
        red.steps.push_back({v, d == 0 ? ReductionStep::Reason::Degree0 : ReductionStep::Reason::Degree1, -1});
        removed = v;
        break;
      }
    }
    if (removed < 0) {
      // Twin pairs, smallest (u, v); the larger id goes.
      WORDREP_FOR_SET(u, live) {
        WORDREP_FOR_SET(v, live & ~(vbit(u + 1) - 1)) {
          if (twins_in(g, live, u, v)) {
            red.steps.push_back({v, ReductionStep::Reason::Twin, u});
            removed = v;
            break;
          }
        }
        if (removed >= 0) break;
      }
    }
    if (removed < 0) break;
    live &= ~vbit(removed);
  }
  red.kept = live;
  red.graph = induced_subgraph(g, live);
  red.dense.assign(static_cast<size_t>(g.vertex_count()), -1);
  int k = 0;
  WORDREP_FOR_SET(v, live) red.dense[static_cast<size_t>(v)] = k++;
  return red;
}

// ---------------------------------------------------------------------------
// decide
// ---------------------------------------------------------------------------

namespace {

Reduction identity_reduction(const Graph& g) {
  Reduction red;
  red.graph = g;
  red.kept = g.vertex_mask();
  red.dense.resize(static_cast<size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) red.dense[static_cast<size_t>(v)] = v;
  return red;
}

bool order_leq_reverse(const std::vector<int>& order) {
  const size_t n = order.size();
  for (size_t i = 0; i < n; ++i) {
    const int fwd = order[i], rev = order[n - 1 - i];
    if (fwd != rev) return fwd < rev;
  }
  return true;
}

}  // namespace

DecideResult decide(const Graph& g, const SplitPartition& partition, DecideOptions opt) {
  if (!is_valid_split_partition(g, partition)) throw std::invalid_argument("decide: invalid split partition");

  DecideResult res;
  const Graph* work = &g;
  SplitPartition part = partition;
  if (opt.apply_reduction) {
    res.reduction = reduce_assumptions(g, partition);
    work = &res.reduction.graph;
    const auto reduced_part = split_partition(*work);
    if (!reduced_part) throw std::logic_error("decide: reduced graph lost its split partition");
    part = *reduced_part;
  } else {
    res.reduction = identity_reduction(g);
  }

  const int m = part.clique_size();
  std::vector<int> clique_ids;
  WORDREP_FOR_SET(v, part.clique) clique_ids.push_back(v);
  std::vector<int> independents;
  WORDREP_FOR_SET(v, part.independent) independents.push_back(v);

  std::vector<int> order = clique_ids;  // ascending = lexicographically first
  std::vector<int> pos(static_cast<size_t>(work->vertex_count()), -1);
  std::vector<TypedVertex> assignment;
  do {
    if (opt.skip_reversals && !order_leq_reverse(order)) continue;
    ++res.orders_tried;
    for (int i = 0; i < m; ++i) pos[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    assignment.clear();
    std::optional<int> infeasible;
    for (int v : independents) {
      const VertexSet nbrs = work->neighbors(v);  // subset of the clique
      if (!nbrs) continue;                        // degree 0: unconstrained (raw mode only)
      std::uint32_t mask = 0;
      WORDREP_FOR_SET(c, nbrs) mask |= std::uint32_t{1} << pos[static_cast<size_t>(c)];
      const Classification cls = classify(mask, m);
      if (cls.type == VertexType::Infeasible) {
        infeasible = v;
        break;
      }
      assignment.push_back({v, cls});
    }
    if (!infeasible) {
      const auto violation = check_restrictions(assignment, m);
      if (!violation) {
        res.representable = true;
        res.witness = SplitWitness{*work, part, PathOrder{order}, assignment};
        return res;
      }
      if (!res.first_failure) res.first_failure = OrderFailure{PathOrder{order}, std::nullopt, violation};
    } else if (!res.first_failure) {
      res.first_failure = OrderFailure{PathOrder{order}, infeasible, std::nullopt};
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return res;
}

Orientation orientation_of_witness(const SplitWitness& w) {
  const Graph& g = w.graph;
  if (!is_valid_split_partition(g, w.partition))
    throw std::invalid_argument("orientation_of_witness: invalid partition");
  const int m = w.partition.clique_size();
  if (static_cast<int>(w.order.order.size()) != m)
    throw std::invalid_argument("orientation_of_witness: order does not cover the clique");
  std::vector<int> pos(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < m; ++i) {
    const int v = w.order.order[static_cast<size_t>(i)];
    if (!(w.partition.clique & vbit(v))) throw std::invalid_argument("orientation_of_witness: order vertex outside clique");
    pos[static_cast<size_t>(v)] = i + 1;
  }
  Orientation o(g);
  // Transitive tournament along the path order.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      o.direct(w.order.order[static_cast<size_t>(i)], w.order.order[static_cast<size_t>(j)]);

  VertexSet assigned = 0;
  for (const auto& e : w.assignment) {
    const int v = e.vertex;
    if (!(w.partition.independent & vbit(v)))
      throw std::invalid_argument("orientation_of_witness: assignment vertex not independent");
    assigned |= vbit(v);
    std::uint32_t mask = 0;
    WORDREP_FOR_SET(c, g.neighbors(v)) mask |= std::uint32_t{1} << (pos[static_cast<size_t>(c)] - 1);
    if (classify(mask, m) != e.cls) throw std::invalid_argument("orientation_of_witness: classification mismatch");
    if (e.cls.type == VertexType::AB) {
      // Type A suffices: the vertex becomes a source.
      WORDREP_FOR_SET(c, g.neighbors(v)) o.direct(v, c);
    } else {
      WORDREP_FOR_SET(c, g.neighbors(v)) {
        if (pos[static_cast<size_t>(c)] <= e.cls.a)
          o.direct(c, v);
        else
          o.direct(v, c);
      }
    }
  }
  WORDREP_FOR_SET(v, w.partition.independent) {
    if (!(assigned & vbit(v)) && g.degree(v) > 0)
      throw std::invalid_argument("orientation_of_witness: independent vertex missing from assignment");
  }
  return o;
}

std::string to_string(const SplitWitness& w) {
  std::ostringstream out;
  for (size_t i = 0; i < w.order.order.size(); ++i) {
    if (i) out << ' ';
    out << w.graph.display(w.order.order[i]);
  }
  out << '\n';
  for (const auto& e : w.assignment) {
    out << w.graph.display(e.vertex) << ": " << (e.cls.type == VertexType::AB ? "AB" : "C") << ' '
        << e.cls.a << ' ' << e.cls.b << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// one-sided predicates and caps
// ---------------------------------------------------------------------------

bool clique_degree_predicate(const Graph& g, const SplitPartition& partition) {
  if (!is_valid_split_partition(g, partition))
    throw std::invalid_argument("clique_degree_predicate: invalid split partition");
  const int m = partition.clique_size();
  WORDREP_FOR_SET(v, partition.clique) {
    if (g.degree(v) > m) return false;
  }
  return true;
}

bool large_degree_obstruction(const Graph& g, const SplitPartition& partition) {
  if (!is_valid_split_partition(g, partition))
    throw std::invalid_argument("large_degree_obstruction: invalid split partition");
  {
    std::vector<VertexSet> seen;
    WORDREP_FOR_SET(v, partition.independent) {
      for (VertexSet s : seen)
        if (s == g.neighbors(v))
          throw std::invalid_argument("large_degree_obstruction: duplicate independent neighbourhoods present");
      seen.push_back(g.neighbors(v));
    }
  }
  const int m = partition.clique_size();
  WORDREP_FOR_SET(v, partition.clique) {
    for (int d = 2; d <= m - 2; ++d) {
      int count = 0;
      WORDREP_FOR_SET(u, partition.independent & g.neighbors(v)) {
        if (g.degree(u) == d) ++count;
      }
      if (count >= d + 1) return true;
    }
  }
  return false;
}

int degree_cap(int m, int d) {
  if (m < 3) throw std::invalid_argument("degree_cap: clique size must be >= 3");
  if (d < 2 || d > m - 1) throw std::invalid_argument("degree_cap: degree out of 2..m-1");
  return 2 * d <= m + 1 ? m : m - d + 1;
}

// ---------------------------------------------------------------------------
// auto routing
// ---------------------------------------------------------------------------

AutoVerdict decide_graph(const Graph& g, int guard, bool force) {
  AutoVerdict verdict;
  if (auto part = split_partition(g)) {
    verdict.method = AutoVerdict::Method::SplitDecider;
    verdict.partition = part;
    verdict.split_result = decide(g, *part);
    verdict.status = verdict.split_result->representable ? AutoVerdict::Status::Representable
                                                         : AutoVerdict::Status::NonRepresentable;
    return verdict;
  }
  if (g.vertex_count() > guard && !force) {
    verdict.method = AutoVerdict::Method::Guarded;
    verdict.status = AutoVerdict::Status::UnknownGuarded;
    return verdict;
  }
  verdict.method = AutoVerdict::Method::ExhaustiveSearch;
  auto o = find_semi_transitive(g, std::max(guard, g.vertex_count()));
  if (o) {
    verdict.status = AutoVerdict::Status::Representable;
    verdict.orientation = std::move(o);
  } else {
    verdict.status = AutoVerdict::Status::NonRepresentable;
  }
  return verdict;
}

}  // namespace wordrep
