#pragma once

#include <array>
#include <string>
#include <vector>

#include "smallcancel/ball.hpp"
#include "smallcancel/conditions.hpp"

namespace smallcancel {

// A subcomplex of a ball's 1-skeleton. Edges are undirected and canonical:
// u <= v and reading u -> v spells the (possibly negative) letter s.
struct SubComplex {
  std::vector<int> vertices;              // sorted ball vertex ids
  std::vector<std::array<int, 3>> edges;  // sorted {u, v, s}
  bool empty() const { return vertices.empty(); }
};

bool operator==(const SubComplex& a, const SubComplex& b);

SubComplex meet(const SubComplex& a, const SubComplex& b);
SubComplex join(const SubComplex& a, const SubComplex& b);
bool subcomplex_connected(const SubComplex& s);

enum class IntersectionShape { Empty, EqualBoundary, Arc, SingleVertex, Disconnected };

std::string shape_to_string(IntersectionShape s);

struct IntersectionRecord {
  std::vector<int> participants;  // structure-graph vertex ids, sorted
  SubComplex subcomplex;
  IntersectionShape shape = IntersectionShape::Empty;
  bool boundary_touching = false;  // some participant's support meets the sphere
};

// One vertex per maximal piece of the complex visible in the ball: a relator
// translate (is_cell; members lists every cell tracing this boundary, more
// than one when distinct relators do) or an untethered component.
struct StructureVertex {
  bool is_cell = false;
  std::vector<int> members;  // indices into Ball::cells, or the component id
  SubComplex support;
  bool interior = false;  // support stays at distance <= radius - 1
};

struct StructureGraph {
  std::vector<StructureVertex> vertices;  // cells first, then components
  std::vector<IntersectionRecord> edges;  // one per unordered pair that meets
  RegimeSet regime;
  bool t5 = false;  // T(5) holds, so interior cell-cell arcs must be one edge
  int radius = 0;
};

StructureGraph build_structure_graph(const Ball& b);

// Meet of two distinct structure vertices. A disconnected meet between
// interior vertices of a verified presentation throws VerificationFailure.
IntersectionRecord intersection(const StructureGraph& g, int v, int w);

// Meet of a whole family. For interior families, C(6) and C(4)-T(4) force a
// nonempty meet to be connected and acyclic; C(3)-T(6) meets of three or more
// vertices are recorded without that assertion.
IntersectionRecord total_intersection(const StructureGraph& g, std::vector<int> vset);

struct HellyReport {
  bool applicable = false;  // the regime's hypothesis held for this family
  bool holds = true;        // the guaranteed conclusion checked out
  bool boundary_touching = false;
  std::string detail;
  IntersectionRecord total;
};

// C(6) / C(4)-T(4): pairwise nonempty meets force a nonempty total meet.
// C(3)-T(6): weak form only; hypothesis is that every pairwise meet is a
// single edge, conclusion that the total is a single edge or vertex.
HellyReport check_helly(const StructureGraph& g, const std::vector<int>& vset);

struct NerveComplex {
  int dim_cap = 6;
  std::vector<std::vector<int>> simplices;  // ascending tuples, lex sorted
};

// Simplices (dimension <= dim_cap) spanned by families whose supports all
// share a point. With interior_only, only interior vertices participate.
NerveComplex build_nerve(const StructureGraph& g, int dim_cap = 6,
                         bool interior_only = false);

}  // namespace smallcancel
