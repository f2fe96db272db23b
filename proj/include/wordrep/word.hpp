// Words over vertex alphabets, letter alternation, and word-based
// representability checks.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wordrep/graph.hpp"

namespace wordrep {

// A word is a sequence of vertex ids. Serialized form is whitespace-separated
// vertex tokens (labels when the graph has them, else decimal ids).
struct Word {
  std::vector<int> letters;

  Word() = default;
  Word(std::initializer_list<int> ls) : letters(ls) {}
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
  bool empty() const { return letters.empty(); }
  size_t size() const { return letters.size(); }
};

// True iff the subsequence of w restricted to {x,y} strictly alternates.
// A restriction with at most one letter total counts as alternating.
// Throws if x == y.
bool alternate(const Word& w, int x, int y);

// Graph induced by w on its distinct letters: the k-th smallest letter
// becomes vertex k (label = the original letter), with an edge iff the two
// letters alternate in w. Throws on the empty word.
Graph graph_of_word(const Word& w);

// Word with the same alternation structure but letters renumbered to the
// dense ids used by graph_of_word.
Word compact_word(const Word& w);

// True iff w represents g as a labeled graph: for every vertex pair,
// alternation in w coincides with adjacency in g. Letters must be vertex ids
// of g and every vertex must occur (throws otherwise).
bool represents(const Word& w, const Graph& g);

// Positive-certificate search only: looks for a k-uniform representing word
// (each letter exactly k times), up to cyclic shift. A nullopt result is NOT
// a proof of non-representability; refutation belongs to the orientation
// deciders. Throws SizeGuardError when k * n exceeds the guard.
std::optional<Word> find_word_bounded(const Graph& g, int k, int guard_total = 20);

struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(const Word& w, const Graph& g);

}  // namespace wordrep
