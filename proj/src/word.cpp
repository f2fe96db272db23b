#include "wordrep/word.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace wordrep {

bool alternate(const Word& w, int x, int y) {
  if (x == y) throw std::invalid_argument("alternate: letters must differ");
  int last = -1;  // last seen of {x,y}
  for (int c : w.letters) {
    if (c != x && c != y) continue;
    if (c == last) return false;
    last = c;
  }
  return true;
}

namespace {
std::vector<int> sorted_alphabet(const Word& w) {
  std::vector<int> abc = w.letters;
  std::sort(abc.begin(), abc.end());
  abc.erase(std::unique(abc.begin(), abc.end()), abc.end());
  return abc;
}
}  // namespace

Graph graph_of_word(const Word& w) {
  if (w.empty()) throw std::invalid_argument("graph_of_word: empty word");
  const auto abc = sorted_alphabet(w);
  const int n = static_cast<int>(abc.size());
  if (n > kMaxVertices) throw std::invalid_argument("graph_of_word: alphabet too large");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.set_label(i, std::to_string(abc[static_cast<size_t>(i)]));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (alternate(w, abc[static_cast<size_t>(i)], abc[static_cast<size_t>(j)])) g.add_edge(i, j);
  return g;
}

Word compact_word(const Word& w) {
  const auto abc = sorted_alphabet(w);
  Word out;
  out.letters.reserve(w.size());
  for (int c : w.letters) {
    const auto it = std::lower_bound(abc.begin(), abc.end(), c);
    out.letters.push_back(static_cast<int>(it - abc.begin()));
  }
  return out;
}

bool represents(const Word& w, const Graph& g) {
  const int n = g.vertex_count();
  VertexSet seen = 0;
  for (int c : w.letters) {
    if (c < 0 || c >= n) throw std::invalid_argument("represents: letter is not a vertex of the graph");
    seen |= vbit(c);
  }
  if (seen != g.vertex_mask()) throw std::invalid_argument("represents: some vertex of the graph is absent from the word");
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (alternate(w, x, y) != g.has_edge(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// bounded k-uniform word search
// ---------------------------------------------------------------------------

namespace {

constexpr int kWordSearchMaxAlphabet = 24;

struct WordSearchUndo {
  std::array<int8_t, kWordSearchMaxAlphabet> prev_last;
  std::uint32_t newly_broken = 0;  // bit y: pair {c,y} broke at this step
};

struct WordSearch {
  const Graph& g;
  int n, k, total;
  std::vector<int> word{};
  std::array<int, kWordSearchMaxAlphabet> count{};
  // last[x][y]: the later-seen letter of {x,y} so far (-1 none); symmetric.
  std::array<std::array<int8_t, kWordSearchMaxAlphabet>, kWordSearchMaxAlphabet> last{};
  // broken[x] bit y: the {x,y} restriction already has two equal letters in a row.
  std::array<std::uint32_t, kWordSearchMaxAlphabet> broken{};

  bool dfs() {
    if (static_cast<int>(word.size()) == total) return true;
    for (int c = 0; c < n; ++c) {
      if (count[static_cast<size_t>(c)] == k) continue;
      if (!feasible(c)) continue;
      WordSearchUndo undo;
      push(c, undo);
      if (dfs()) return true;
      pop(c, undo);
    }
    return false;
  }

  // Appending c breaks alternation exactly with the letters y whose
  // restriction last saw c. Required-edge pairs must never break; non-edge
  // pairs must be broken by the time both letters are exhausted.
  bool feasible(int c) const {
    for (int y = 0; y < n; ++y) {
      if (y == c) continue;
      if (g.has_edge(c, y) && last[static_cast<size_t>(c)][static_cast<size_t>(y)] == c) return false;
    }
    if (count[static_cast<size_t>(c)] + 1 == k) {
      for (int y = 0; y < n; ++y) {
        if (y == c || g.has_edge(c, y) || count[static_cast<size_t>(y)] < k) continue;
        const bool breaks_now = last[static_cast<size_t>(c)][static_cast<size_t>(y)] == c;
        if (!((broken[static_cast<size_t>(c)] >> y) & 1) && !breaks_now) return false;
      }
    }
    return true;
  }

  void push(int c, WordSearchUndo& undo) {
    word.push_back(c);
    ++count[static_cast<size_t>(c)];
    for (int y = 0; y < n; ++y) {
      if (y == c) continue;
      const int8_t prev = last[static_cast<size_t>(c)][static_cast<size_t>(y)];
      undo.prev_last[static_cast<size_t>(y)] = prev;
      if (prev == c && !((broken[static_cast<size_t>(c)] >> y) & 1)) {
        broken[static_cast<size_t>(c)] |= 1u << y;
        broken[static_cast<size_t>(y)] |= 1u << c;
        undo.newly_broken |= 1u << y;
      }
      last[static_cast<size_t>(c)][static_cast<size_t>(y)] = static_cast<int8_t>(c);
      last[static_cast<size_t>(y)][static_cast<size_t>(c)] = static_cast<int8_t>(c);
    }
  }

  void pop(int c, const WordSearchUndo& undo) {
    for (int y = 0; y < n; ++y) {
      if (y == c) continue;
      const int8_t prev = undo.prev_last[static_cast<size_t>(y)];
      last[static_cast<size_t>(c)][static_cast<size_t>(y)] = prev;
      last[static_cast<size_t>(y)][static_cast<size_t>(c)] = prev;
      if ((undo.newly_broken >> y) & 1) {
        broken[static_cast<size_t>(c)] &= ~(1u << y);
        broken[static_cast<size_t>(y)] &= ~(1u << c);
      }
    }
    --count[static_cast<size_t>(c)];
    word.pop_back();
  }
};

}  // namespace

std::optional<Word> find_word_bounded(const Graph& g, int k, int guard_total) {
  if (k < 1) throw std::invalid_argument("find_word_bounded: k must be >= 1");
  const int n = g.vertex_count();
  if (k * n > guard_total || k * n > 4 * kWordSearchMaxAlphabet || n > kWordSearchMaxAlphabet)
    throw SizeGuardError("find_word_bounded: k*n = " + std::to_string(k * n) +
                         " exceeds the guard of " + std::to_string(guard_total));
  WordSearch s{.g = g, .n = n, .k = k, .total = k * n};
  for (auto& row : s.last) row.fill(-1);
  // Every cyclic shift of a k-uniform representing word still represents the
  // same graph, so the first letter can be fixed to vertex 0.
  WordSearchUndo root;
  s.push(0, root);
  if (!s.dfs()) return std::nullopt;
  Word w{std::vector<int>(s.word)};
  if (!represents(w, g)) throw std::logic_error("find_word_bounded: search produced a non-representing word");
  return w;
}

std::string to_string(const Word& w, const Graph& g) {
  std::ostringstream out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << g.display(w.letters[i]);
  }
  return out.str();
}

}  // namespace wordrep
