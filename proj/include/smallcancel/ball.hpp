#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smallcancel/equality.hpp"
#include "smallcancel/presentation.hpp"
#include "smallcancel/word.hpp"

namespace smallcancel {

struct BallEdge {
  int from = 0;
  int to = 0;
  Letter label = 0;
};

// One attached relator disc whose whole boundary lies inside the ball.
// cycle lists the vertices visited while reading the relator from base,
// so cycle[0] == base and the walk closes back at base.  Discs that are
// rotations of one another (proper power relators) are stored once.
struct CellTranslate {
  int relator = 0;
  int base = 0;
  std::vector<int> cycle;
};

// A connected piece of the subgraph spanned by edges whose generator occurs
// in no relator.  Such edges bound no disc anywhere in the complex, and each
// piece must be a tree.  Edges are stored once per geometric edge, oriented
// along the positive letter.
struct UntetheredComponent {
  int id = 0;
  std::vector<BallEdge> edges;
  std::vector<int> vertices;
};

struct Ball {
  Presentation p;
  int radius = 0;
  int basepoint = 0;                 // always vertex 0, the empty word
  std::vector<Word> vertices;        // shortlex minimal geodesic names
  std::vector<int> distance;         // graph distance from the basepoint
  std::vector<BallEdge> edges;       // closed under label inversion, sorted
                                     // by (from, letter rank)
  std::vector<CellTranslate> cells;  // discs with full boundary inside
  EqualityBudget budget;             // the budget every merge decision used
  std::string note;                  // set when no supported regime holds
};

// Raised when the word problem oracle returns unknown during construction;
// the offending pair is recorded so the caller can retry with more budget.
struct BallBudgetError : std::runtime_error {
  Word left, right;
  BallBudgetError(const std::string& what, Word l, Word r)
      : std::runtime_error(what), left(std::move(l)), right(std::move(r)) {}
};

// Breadth-first construction of the radius-r ball of the Cayley complex.
// Vertices are merged through word_equal, so two stored vertices are always
// verified-distinct group elements at the given budget.  The edge set is the
// full induced subgraph, and every relator disc whose boundary closes inside
// the ball is attached.
Ball build_ball(const EqualityContext& ctx, int radius,
                const EqualityBudget& budget = {});
Ball build_ball(const Presentation& p, int radius,
                const EqualityBudget& budget = {});

// Vertex reached from v along the edge labeled s, or -1 when the edge is
// not present.
int neighbor(const Ball& b, int v, Letter s);

// Re-walks every stored cell, checks it closes and that its boundary cycle
// is embedded (pairwise distinct vertices), and returns the list.  Throws
// VerificationFailure naming the offending cycle otherwise.
std::vector<CellTranslate> relator_translates(const Ball& b);

// Components of the edges lying on no relator disc of the full complex.
// Throws VerificationFailure if a component fails the tree check.
std::vector<UntetheredComponent> untethered_components(const Ball& b);

}  // namespace smallcancel
