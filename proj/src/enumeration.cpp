#include "wordrep/enumeration.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "wordrep/split_decider.hpp"

namespace wordrep {

std::vector<int> default_caps(int m) {
  std::vector<int> caps;
  for (int d = 2; d <= m - 1; ++d) caps.push_back(degree_cap(m, d) + 1);
  return caps;
}

namespace {

// ---------------------------------------------------------------------------
// family space: one degree class per d in 2..m-1; a family is one subset of
// neighbourhood masks per class, encoded by its rank. Global indices are
// mixed-radix with the degree-(m-1) class as the most significant digit.
// ---------------------------------------------------------------------------

struct DegreeClass {
  int degree = 0;
  int cap = 0;
  std::vector<std::uint32_t> nbhd_masks;       // all m-bit masks of this popcount, ascending
  std::vector<std::uint32_t> subsets;          // member bitmasks with popcount <= cap, ascending
  std::vector<std::uint32_t> rank_of;          // member bitmask -> rank (or UINT32_MAX)
  std::vector<std::vector<std::uint32_t>> subset_nbhds;  // rank -> neighbourhood masks
  std::vector<std::array<std::uint8_t, 8>> coverage;     // rank -> per-clique-vertex member count
};

struct FamilySpace {
  int m = 0;
  std::vector<DegreeClass> classes;  // ascending degree (d = 2 first)
  std::uint64_t total = 1;

  FamilySpace(int m_, const std::vector<int>& caps) : m(m_) {
    for (int d = 2; d <= m - 1; ++d) {
      DegreeClass cls;
      cls.degree = d;
      cls.cap = caps[static_cast<size_t>(d - 2)];
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
        if (std::popcount(mask) == d) cls.nbhd_masks.push_back(mask);
      const size_t width = cls.nbhd_masks.size();
      cls.rank_of.assign(size_t{1} << width, UINT32_MAX);
      for (std::uint32_t members = 0; members < (1u << width); ++members) {
        if (std::popcount(members) > cls.cap) continue;
        cls.rank_of[members] = static_cast<std::uint32_t>(cls.subsets.size());
        cls.subsets.push_back(members);
        std::vector<std::uint32_t> nbhds;
        std::array<std::uint8_t, 8> cover{};
        for (std::uint32_t rest = members; rest; rest &= rest - 1) {
          const std::uint32_t nb = cls.nbhd_masks[static_cast<size_t>(std::countr_zero(rest))];
          nbhds.push_back(nb);
          for (int v = 0; v < m; ++v)
            if ((nb >> v) & 1) ++cover[static_cast<size_t>(v)];
        }
        cls.subset_nbhds.push_back(std::move(nbhds));
        cls.coverage.push_back(cover);
      }
      total *= cls.subsets.size();
      classes.push_back(std::move(cls));
    }
  }

  // Index radix: classes from most significant (highest degree) down.
  std::uint64_t index_of(const std::vector<std::uint32_t>& ranks) const {
    std::uint64_t idx = 0;
    for (size_t c = classes.size(); c-- > 0;) idx = idx * classes[c].subsets.size() + ranks[c];
    return idx;
  }
};

// ---------------------------------------------------------------------------
// fast per-family decider: precomputed permutation tables over the m! path
// orders plus the classification of every position mask. Implements the same
// per-order check as decide() without reduction (families are already twin-
// and low-degree-free on the independent side).
// ---------------------------------------------------------------------------

struct FamilyDecider {
  int m;
  std::vector<std::array<std::uint8_t, 64>> permuted;  // [perm][mask] -> position mask
  struct Cls {
    std::int8_t type;  // 0 AB, 1 C, 2 infeasible
    std::int8_t a, b;
  };
  std::vector<Cls> cls;  // per position mask

  explicit FamilyDecider(int m_) : m(m_) {
    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    do {
      std::array<std::uint8_t, 64> row{};
      for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::uint32_t pm = 0;
        for (int i = 0; i < m; ++i)
          if ((mask >> order[static_cast<size_t>(i)]) & 1) pm |= 1u << i;
        row[mask] = static_cast<std::uint8_t>(pm);
      }
      permuted.push_back(row);
    } while (std::next_permutation(order.begin(), order.end()));

    cls.resize(size_t{1} << m);
    for (std::uint32_t mask = 1; mask < (1u << m) - 1; ++mask) {
      const Classification c = classify(mask, m);
      cls[mask] = {static_cast<std::int8_t>(c.type == VertexType::AB ? 0 : c.type == VertexType::C ? 1 : 2),
                   static_cast<std::int8_t>(c.a), static_cast<std::int8_t>(c.b)};
    }
  }

  bool representable(const std::vector<const std::vector<std::uint32_t>*>& member_lists) const {
    std::array<std::int8_t, 32> ca{}, cb{}, ablo{}, abhi{};
    for (const auto& row : permuted) {
      int nc = 0, nab = 0;
      bool feasible = true;
      for (const auto* list : member_lists) {
        for (const std::uint32_t nb : *list) {
          const Cls c = cls[row[nb]];
          if (c.type == 2) {
            feasible = false;
            break;
          }
          if (c.type == 1) {
            ca[static_cast<size_t>(nc)] = c.a;
            cb[static_cast<size_t>(nc)] = c.b;
            ++nc;
          } else {
            ablo[static_cast<size_t>(nab)] = c.a;
            abhi[static_cast<size_t>(nab)] = c.b;
            ++nab;
          }
        }
        if (!feasible) break;
      }
      if (!feasible) continue;
      bool ok = true;
      for (int x = 0; x < nc && ok; ++x) {
        const int a = ca[static_cast<size_t>(x)], b = cb[static_cast<size_t>(x)];
        for (int y = 0; y < nab; ++y)
          if (ablo[static_cast<size_t>(y)] <= a && abhi[static_cast<size_t>(y)] >= b) {
            ok = false;
            break;
          }
        for (int y = 0; y < nc && ok; ++y)
          if (y != x && (ca[static_cast<size_t>(y)] >= b || cb[static_cast<size_t>(y)] <= a)) ok = false;
      }
      if (ok) return true;
    }
    return false;
  }
};

Graph family_graph(const FamilySpace& space, const std::vector<std::uint32_t>& ranks) {
  const int m = space.m;
  int extras = 0;
  for (size_t c = 0; c < space.classes.size(); ++c)
    extras += static_cast<int>(space.classes[c].subset_nbhds[ranks[c]].size());
  Graph g(m + extras);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) g.add_edge(i, j);
  int v = m;
  for (size_t c = 0; c < space.classes.size(); ++c)
    for (const std::uint32_t nb : space.classes[c].subset_nbhds[ranks[c]]) {
      for (int u = 0; u < m; ++u)
        if ((nb >> u) & 1) g.add_edge(v, u);
      ++v;
    }
  return g;
}

// Sound non-representability prefilter: some clique vertex covered by at
// least d+1 members of a degree class with d <= m-2.
bool obstruction_prefilter(const FamilySpace& space, const std::vector<std::uint32_t>& ranks) {
  for (int v = 0; v < space.m; ++v) {
    for (size_t c = 0; c < space.classes.size(); ++c) {
      const int d = space.classes[c].degree;
      if (d > space.m - 2) continue;
      if (space.classes[c].coverage[ranks[c]][static_cast<size_t>(v)] >= d + 1) return true;
    }
  }
  return false;
}

EnumConfig normalize(EnumConfig cfg, bool enforce_provable_caps) {
  if (cfg.clique_size < 3 || cfg.clique_size > 6)
    throw std::invalid_argument("enumeration: clique size must be in 3..6");
  if (cfg.caps.empty()) cfg.caps = default_caps(cfg.clique_size);
  if (static_cast<int>(cfg.caps.size()) != cfg.clique_size - 2)
    throw std::invalid_argument("enumeration: need one cap per degree 2..m-1");
  for (int& cap : cfg.caps) {
    if (cap < 0) throw std::invalid_argument("enumeration: negative cap");
    // More vertices than distinct neighbourhoods of that degree cannot occur.
  }
  if (enforce_provable_caps) {
    for (int d = 2; d <= cfg.clique_size - 1; ++d)
      if (cfg.caps[static_cast<size_t>(d - 2)] < degree_cap(cfg.clique_size, d))
        throw std::invalid_argument("enumeration: caps below the provable caps would lose minimal graphs");
  }
  if (cfg.jobs < 1) cfg.jobs = 1;
  return cfg;
}

}  // namespace

std::uint64_t candidate_count(const EnumConfig& cfg_in) {
  const EnumConfig cfg = normalize(cfg_in, false);
  return FamilySpace(cfg.clique_size, cfg.caps).total;
}

void for_each_candidate(const EnumConfig& cfg_in, const std::function<bool(const Graph&)>& fn) {
  const EnumConfig cfg = normalize(cfg_in, false);
  const FamilySpace space(cfg.clique_size, cfg.caps);
  const size_t nc = space.classes.size();
  std::vector<std::uint32_t> ranks(nc, 0);
  for (std::uint64_t idx = 0; idx < space.total; ++idx) {
    std::uint64_t rest = idx;
    for (size_t c = 0; c < nc; ++c) {
      ranks[c] = static_cast<std::uint32_t>(rest % space.classes[c].subsets.size());
      rest /= space.classes[c].subsets.size();
    }
    if (!fn(family_graph(space, ranks))) return;
  }
}

Graph candidate_at(const EnumConfig& cfg_in, std::uint64_t index) {
  const EnumConfig cfg = normalize(cfg_in, false);
  const FamilySpace space(cfg.clique_size, cfg.caps);
  if (index >= space.total) throw std::invalid_argument("candidate_at: index out of range");
  std::vector<std::uint32_t> ranks(space.classes.size(), 0);
  for (size_t c = 0; c < space.classes.size(); ++c) {
    ranks[c] = static_cast<std::uint32_t>(index % space.classes[c].subsets.size());
    index /= space.classes[c].subsets.size();
  }
  return family_graph(space, ranks);
}

bool is_minimal_nonrep(const Graph& g) {
  const int relaxed_guard = std::max(12, g.vertex_count());
  if (decide_graph(g, relaxed_guard).representable()) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertex_count() == 1) break;
    if (!decide_graph(without_vertex(g, v), relaxed_guard).representable()) return false;
  }
  return true;
}

EnumReport find_minimal_nonrep(int m) {
  EnumConfig cfg;
  cfg.clique_size = m;
  return find_minimal_nonrep(cfg);
}

EnumReport find_minimal_nonrep(const EnumConfig& cfg_in,
                               const std::function<void(const Graph&, bool)>& emit) {
  const auto t0 = std::chrono::steady_clock::now();
  const EnumConfig cfg = normalize(cfg_in, true);
  const int m = cfg.clique_size;
  const FamilySpace space(m, cfg.caps);
  const size_t nc = space.classes.size();

  EnumReport report;
  report.clique_size = m;
  report.caps = cfg.caps;
  report.total_candidates = space.total;

  constexpr std::uint64_t kBitmapLimit = std::uint64_t{1} << 34;
  const bool memoized = space.total <= kBitmapLimit;
  if (!memoized)
    std::cerr << "enumeration: " << space.total
              << " candidates; this will not finish at desk scale (continuing)\n";

  // Phase 1: verdict per family (bit set = representable). Blocks are the
  // most significant one or two radix digits; block boundaries can share a
  // word, hence the atomic OR.
  std::vector<std::atomic<std::uint64_t>> bitmap(memoized ? static_cast<size_t>((space.total + 63) / 64) : 0);
  const FamilyDecider decider(m);

  std::uint64_t blocks = 1;
  size_t block_classes = nc;  // ranks [block_classes, nc) come from the block id
  while (block_classes > 0 && blocks * space.classes[block_classes - 1].subsets.size() <=
                                  std::max<std::uint64_t>(1024, 64u * static_cast<unsigned>(cfg.jobs))) {
    --block_classes;
    blocks *= space.classes[block_classes].subsets.size();
  }
  std::uint64_t inner = 1;
  for (size_t c = 0; c < block_classes; ++c) inner *= space.classes[c].subsets.size();

  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> rep_count{0};
  std::atomic<std::uint64_t> cap_violation_count{0};

  std::vector<int> provable_caps;
  for (int d = 2; d <= m - 1; ++d) provable_caps.push_back(degree_cap(m, d));

  auto worker = [&]() {
    std::vector<std::uint32_t> ranks(nc, 0);
    std::vector<const std::vector<std::uint32_t>*> member_lists(nc, nullptr);
    std::uint64_t local_rep = 0, local_viol = 0;
    for (;;) {
      const std::uint64_t block = next_block.fetch_add(1);
      if (block >= blocks) break;
      std::uint64_t rest = block;
      for (size_t c = block_classes; c < nc; ++c) {
        ranks[c] = static_cast<std::uint32_t>(rest % space.classes[c].subsets.size());
        rest /= space.classes[c].subsets.size();
      }
      const std::uint64_t base = block * inner;
      for (std::uint64_t off = 0; off < inner; ++off) {
        std::uint64_t r = off;
        for (size_t c = 0; c < block_classes; ++c) {
          ranks[c] = static_cast<std::uint32_t>(r % space.classes[c].subsets.size());
          r /= space.classes[c].subsets.size();
        }
        bool rep;
        if (obstruction_prefilter(space, ranks)) {
          rep = false;
        } else {
          for (size_t c = 0; c < nc; ++c) member_lists[c] = &space.classes[c].subset_nbhds[ranks[c]];
          rep = decider.representable(member_lists);
        }
        if (rep) {
          ++local_rep;
          const std::uint64_t idx = base + off;
          if (memoized)
            bitmap[static_cast<size_t>(idx / 64)].fetch_or(std::uint64_t{1} << (idx % 64),
                                                           std::memory_order_relaxed);
          for (size_t c = 0; c < nc; ++c)
            if (std::popcount(space.classes[c].subsets[ranks[c]]) > provable_caps[c]) {
              ++local_viol;
              break;
            }
        }
        if (emit) emit(family_graph(space, ranks), rep);
      }
    }
    rep_count.fetch_add(local_rep);
    cap_violation_count.fetch_add(local_viol);
  };

  if (cfg.jobs == 1 || emit) {
    worker();  // emission stays in candidate order only when single-threaded
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  report.representable = rep_count.load();
  report.non_representable = space.total - report.representable;
  report.cap_violations = cap_violation_count.load();

  // Phase 2: scan non-representable families whose every single-member
  // removal is representable, then require every clique-vertex deletion to be
  // representable as well. Survivors are the minimal graphs.
  const auto family_rep = [&](const std::vector<std::uint32_t>& ranks) {
    if (memoized) {
      const std::uint64_t idx = space.index_of(ranks);
      return ((bitmap[static_cast<size_t>(idx / 64)].load(std::memory_order_relaxed) >> (idx % 64)) & 1) != 0;
    }
    std::vector<const std::vector<std::uint32_t>*> lists(nc);
    for (size_t c = 0; c < nc; ++c) lists[c] = &space.classes[c].subset_nbhds[ranks[c]];
    return !obstruction_prefilter(space, ranks) && decider.representable(lists);
  };

  std::map<CanonicalForm, Graph> minimal;
  {
    std::vector<std::uint32_t> ranks(nc, 0);
    std::vector<std::uint32_t> probe(nc, 0);
    for (std::uint64_t idx = 0; idx < space.total; ++idx) {
      std::uint64_t rest = idx;
      for (size_t c = 0; c < nc; ++c) {
        ranks[c] = static_cast<std::uint32_t>(rest % space.classes[c].subsets.size());
        rest /= space.classes[c].subsets.size();
      }
      if (family_rep(ranks)) continue;
      bool family_minimal = true;
      for (size_t c = 0; c < nc && family_minimal; ++c) {
        std::uint32_t members = space.classes[c].subsets[ranks[c]];
        for (std::uint32_t rest_m = members; rest_m; rest_m &= rest_m - 1) {
          probe = ranks;
          probe[c] = space.classes[c].rank_of[members & ~(rest_m & -rest_m)];
          if (!family_rep(probe)) {
            family_minimal = false;
            break;
          }
        }
      }
      if (!family_minimal) continue;
      const Graph g = family_graph(space, ranks);
      bool graph_minimal = true;
      for (int u = 0; u < m && graph_minimal; ++u) {
        const Graph sub = without_vertex(g, u);
        if (!decide_graph(sub, std::max(12, sub.vertex_count())).representable()) graph_minimal = false;
      }
      if (!graph_minimal) continue;
      const auto part = split_partition(g);
      if (!part || part->clique_size() != m)
        throw std::logic_error("enumeration: minimal graph with unexpected clique number");
      minimal.emplace(canonical_form(g), g);
    }
  }
  for (auto& [form, g] : minimal) {
    report.minimal.push_back(g);
    report.minimal_forms.push_back(form);
    report.minimal_graph6.push_back(to_graph6(g));
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string to_string(const EnumReport& report) {
  std::ostringstream out;
  out << "wordrep enumeration report, format 1\n";
  out << "clique_size: " << report.clique_size << '\n';
  out << "caps:";
  for (size_t i = 0; i < report.caps.size(); ++i) out << ' ' << (i + 2) << '=' << report.caps[i];
  out << '\n';
  out << "total_candidates: " << report.total_candidates << '\n';
  out << "representable: " << report.representable << '\n';
  out << "non_representable: " << report.non_representable << '\n';
  out << "cap_violations: " << report.cap_violations << '\n';
  out << "minimal_count: " << report.minimal.size() << '\n';
  out << "wall_seconds: " << report.wall_seconds << '\n';
  for (size_t i = 0; i < report.minimal.size(); ++i) {
    out << "minimal " << (i + 1) << ": " << report.minimal_graph6[i] << " edges:";
    for (auto [u, v] : report.minimal[i].edges()) out << ' ' << u << '-' << v;
    out << '\n';
  }
  return out.str();
}

}  // namespace wordrep
