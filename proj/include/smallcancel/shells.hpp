#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "smallcancel/conditions.hpp"
#include "smallcancel/diagram.hpp"
#include "smallcancel/rational.hpp"

namespace smallcancel {

// Small-cancellation regime used to pick the right trichotomy and the
// right degree-2 normalization.
enum class Regime { C6, C4T4, C3T6 };

std::string regime_name(Regime r);

// Thrown when a checked theorem fails on concrete data that satisfies its
// hypotheses; distinct from precondition violations (invalid_argument).
struct VerificationFailure : std::runtime_error {
  explicit VerificationFailure(const std::string& what)
      : std::runtime_error(what) {}
};

// A shell: a face whose ring splits into one boundary arc (the outerpath)
// followed by interior edges covered by pieces (the innerpath).
// inner_piece_count is the fewest pieces covering the innerpath. A face
// whose whole ring lies on the boundary and meets the rest of the diagram
// in at most one vertex is a degenerate shell with an empty innerpath:
// the single-cell diagram, or a cell wedged on at a single vertex.
struct ShellRecord {
  int face = -1;
  std::vector<int> outerpath;  // boundary-side ring darts, in ring order
  std::vector<int> innerpath;  // interior ring darts, in ring order
  Word inner_word;
  std::vector<std::pair<int, int>> inner_segments;  // minimal piece cover
  int inner_piece_count = 0;
  bool degenerate = false;  // empty innerpath, closed outerpath
};

// Every shell with at most max_inner_pieces inner pieces (degenerate
// shells have 0). Spurs are not shells; DiscDiagram::spur_vertices has
// them. Requirements checked per face: exactly one maximal exposed run,
// internal vertices of the run of degree 2 (so the outerpath is an arc),
// and the remaining ring edges coverable by at most max_inner_pieces
// pieces.
std::vector<ShellRecord> shells(const DiscDiagram& d, const PieceIndex& idx,
                                int max_inner_pieces);

// One element of a ladder: a face, or a bare edge (an edge on no face),
// identified by its even dart.
struct LadderElement {
  bool is_face = false;
  int id = -1;
};

// A ladder is a union of closed cells and bare edges in which removing
// one closed element leaves exactly one component (the two ends) or
// exactly two (everything in between). The degenerate diagrams with a
// single element or none (single vertex) count as ladders. Returns the
// elements in path order, or nullopt if the diagram is not a ladder.
std::optional<std::vector<LadderElement>> ladder_decomposition(
    const DiscDiagram& d);
bool is_ladder(const DiscDiagram& d);

enum class GreendlingerKind { SingleCell, Ladder, ManyShellsOrSpurs };

struct GreendlingerEvidence {
  GreendlingerKind kind = GreendlingerKind::SingleCell;
  std::vector<ShellRecord> shells;  // the shells that were counted
  std::vector<int> spurs;
  // C3T6 only: counted pairs of 2-shells sharing an edge with an endpoint
  // on the diagram boundary, as face id pairs.
  std::vector<std::pair<int, int>> shell_pairs;
  std::vector<LadderElement> ladder;  // set when kind == Ladder
  int count = 0;                      // total of the countable features
};

// Decides which clause of the regime's trichotomy a reduced diagram
// satisfies: a single cell, a ladder, or at least three countable
// features (C6: shells with at most 3 inner pieces and spurs; C4T4:
// shells with at most 2 inner pieces and spurs; C3T6: shells with at
// most 1 inner piece, spurs, and pairs of 2-shells sharing an edge
// incident to a boundary vertex). Degenerate shells count everywhere.
// Throws invalid_argument if d is not reduced and VerificationFailure if
// no clause holds.
GreendlingerEvidence classify_greendlinger(const DiscDiagram& d,
                                           const PieceIndex& idx,
                                           Regime regime);

// Corner refinements for spurless reduced diagrams. C4T4: a degenerate
// shell or 1-shell, or a 2-shell with a ring vertex on the diagram
// boundary of degree exactly 3. C3T6: a degenerate shell or 1-shell
// whose ring has at most one vertex of degree more than 6, or a 2-shell
// whose ring vertices on the boundary all have degree at most 5. Returns
// a witness shell, or nullopt if none exists (a theorem violation on
// C4T4 resp. C3T6 input). Throws invalid_argument on spurs.
std::optional<ShellRecord> corners_witness_c4t4(const DiscDiagram& d,
                                                const PieceIndex& idx);
std::optional<ShellRecord> corners_witness_c3t6(const DiscDiagram& d,
                                                const PieceIndex& idx);

// Distributed Euler characteristic: each surviving vertex v gets
// 1 - deg(v)/2 + sum over its corners of 1/p', where p' is the corner
// face's ring length minus its suppressed corners. Suppressed vertices
// are the degree-2 vertices (all of them under C4T4, only boundary ones
// under C3T6), except that each 1-shell keeps two internal outerpath
// vertices (C4T4) resp. one (C3T6) and each 2-shell keeps one (C4T4).
// Diagrams of area <= 1 are left untouched. The values sum to exactly 1.
// Throws invalid_argument on spurs or on a regime other than C4T4/C3T6.
std::map<int, Rational> euler_charge(const DiscDiagram& d,
                                     const PieceIndex& idx, Regime regime);

}  // namespace smallcancel
