#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcancel/presentation.hpp"

namespace smallcancel {

// A piece is a nonempty word that is a prefix of at least two distinct
// symmetrized words. Every occurrence of a piece inside a relator is the
// prefix of some rotation, so prefix queries answer occurrence queries.
struct PieceIndex {
  SymmetrizedSet sym;
  // Per symmetrized word: length of the longest piece that is a prefix
  // (equivalently, the longest common prefix with any other word).
  std::vector<int> max_prefix_piece;
  // Maximal pieces: pieces not extendable to longer pieces.
  std::vector<Word> maximal_pieces;

  bool is_piece(const Word& p) const;
  // Longest k such that w[from..from+k) is a piece (0 if none).
  int longest_piece_prefix(const Word& w, size_t from) const;
};

PieceIndex build_piece_index(const Presentation& p);

// pos/len segments covering a word with pieces.
struct PieceDecomposition {
  int count;
  std::vector<std::pair<int, int>> segments;
};

// Fewest pieces whose concatenation is w; nullopt if w cannot be covered
// by pieces at all.
std::optional<PieceDecomposition> min_piece_decomposition(const PieceIndex& idx,
                                                          const Word& w);

struct ConditionVerdict {
  bool holds = false;
  std::string note;
  // Failure witnesses; meaning depends on the condition checked.
  Word witness_word;
  Word witness_piece;
  std::vector<std::pair<int, int>> witness_segments;
  std::vector<Letter> witness_walk;  // link-graph closed walk, as vertex letters
};

// C(n): no symmetrized word is a concatenation of fewer than n pieces.
ConditionVerdict check_C(const Presentation& p, int n);
ConditionVerdict check_C(const PieceIndex& idx, int n);

// C'(1/n): every piece occurring in a symmetrized word r is strictly
// shorter than |r|/n.
ConditionVerdict check_C_prime(const Presentation& p, int n);
ConditionVerdict check_C_prime(const PieceIndex& idx, int n);

// Link graph: one vertex per oriented letter, one edge per inverse-pair
// {w, w^-1} of symmetrized words, joining w's first letter to the inverse
// of its last letter. Edges record one representative word index.
struct LinkGraph {
  std::vector<Letter> vertices;
  struct Edge {
    Letter a, b;
    int sym_word;
  };
  std::vector<Edge> edges;
};

LinkGraph build_link_graph(const SymmetrizedSet& sym);

// Closed walk of length h with no two cyclically consecutive steps using
// the same edge; nullopt if none exists.
std::optional<std::vector<Letter>> find_reduced_closed_walk(const LinkGraph& g, int h);

// T(q): the link graph has no cyclically reduced closed walk of length h
// for any 3 <= h < q. Such a walk is exactly the data of a reduced
// interior vertex of valence h.
ConditionVerdict check_T(const Presentation& p, int q);
ConditionVerdict check_T(const SymmetrizedSet& sym, int q);

struct RegimeSet {
  bool c_prime_6 = false;  // C'(1/6)
  bool c6 = false;         // C(6)
  bool c4t4 = false;       // C(4) and T(4)
  bool c3t6 = false;       // C(3) and T(6)

  bool any() const { return c_prime_6 || c6 || c4t4 || c3t6; }
};

RegimeSet classify(const Presentation& p);
std::string regime_set_to_string(const RegimeSet& r);

}  // namespace smallcancel
