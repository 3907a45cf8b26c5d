#pragma once

#include <vector>

#include "smallcancel/conditions.hpp"
#include "smallcancel/diagram.hpp"

namespace smallcancel {

struct EnumerationBudget {
  int max_area = 4;
  long max_nodes = 1000000;
};

struct EnumerationResult {
  // Sorted by (area, edge count, canonical encoding); one representative
  // per isomorphism class, mirror images distinct.
  std::vector<DiscDiagram> diagrams;
  // True when no search branch was cut off by the area cap. In boundary
  // mode this is conservative: false means exhaustiveness beyond the cap
  // is not certified, not that diagrams were missed.
  bool complete = true;
  long nodes = 0;
  // Node budget ran out; the stream may be missing diagrams outright.
  bool aborted = false;
};

// All reduced diagrams with area <= max_area in which every edge lies on a
// face (tree decorations can be grafted in unbounded number without
// changing the area, so the area-capped universe excludes them). Grown by
// exhaustive face attachment: a new face glued over a boundary arc or
// wedged at a boundary corner, deduplicated by canonical encoding.
EnumerationResult enumerate_by_area(const PieceIndex& idx, int max_area,
                                    long max_nodes = 1000000);

// All reduced diagrams, tree decorations included, whose boundary word is
// a rotation of `boundary`, with at most budget.max_area faces. Assembled
// left to right: the first unfilled boundary position is either one side
// of a bare edge (splitting the problem in two) or the free edge of a new
// face whose remaining sides extend the boundary to fill.
EnumerationResult enumerate_with_boundary(const PieceIndex& idx,
                                          const Word& boundary,
                                          const EnumerationBudget& budget);

}  // namespace smallcancel
