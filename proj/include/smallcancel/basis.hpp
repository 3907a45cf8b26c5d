#pragma once

#include <map>
#include <string>
#include <vector>

#include "smallcancel/ball.hpp"
#include "smallcancel/ordering.hpp"
#include "smallcancel/structure.hpp"

namespace smallcancel {

// One covered relator translate: the cell vertex, the member disc in
// b.cells, the conjugator carrying the relator's base cycle onto that disc,
// and the ball vertices of the access path. The path ends on the disc
// boundary; the conjugator continues along the boundary to the disc's base
// corner, so walking the conjugator from the basepoint lands on that corner.
struct TransversalEntry {
  int structure_vertex = -1;
  int cell = -1;
  Word conjugator;
  std::vector<int> path;
};

struct Transversal {
  int relator = -1;
  std::vector<TransversalEntry> entries;  // in label order
};

// For every labeled cell vertex, in label order, chooses the
// lexicographically least shortest path from the basepoint inside the union
// of the supports labeled so far, and records one conjugator per member
// disc. Unreachable translates and duplicate endpoints throw
// VerificationFailure.
std::vector<Transversal> extract_transversals(const Ball& b,
                                              const StructureGraph& g,
                                              const OrderingMap& om);

struct BasisElement {
  int relator = -1;
  Word conjugator;
  Word word;  // free_reduce(conjugator * relator * inverse(conjugator))
};

struct RootPower {
  Word root;  // shortest word whose power gives the input
  int exponent = 1;
};

RootPower maximal_root(const Word& w);

struct CohenLyndonBasis {
  std::vector<BasisElement> elements;  // in label order, grouped by relator
  std::vector<RootPower> roots;        // one per presentation relator
};

// Realizes each conjugator as a reduced conjugate of its relator. Every
// element must reduce to a nontrivial word.
CohenLyndonBasis basis_elements(const std::vector<Transversal>& ts,
                                const Presentation& p);

// Immutable folded core of the subgroup generated by a word family.
// Vertices are numbered canonically (breadth-first from the base, least
// letter rank first), so equal subgroups fold to equal adjacency tables.
struct FoldedGraph {
  std::vector<std::map<Letter, int>> adj;  // vertex -> letter -> target
  int base = 0;
  bool folded = false;
  int rank = 0;  // independent cycles of the core
};

FoldedGraph stallings_fold(const std::vector<Word>& words);

// True iff w traces a closed path at the base vertex.
bool subgroup_membership(const FoldedGraph& fg, const Word& w);

struct IndependenceReport {
  int rank = 0;
  int expected = 0;
  std::string detail;
};

// Folds the realized basis words and demands rank equal to the element
// count; a deficiency throws VerificationFailure naming a dependent subset
// found by greedy removal.
IndependenceReport verify_free_independence(const CohenLyndonBasis& basis);

}  // namespace smallcancel
