#pragma once

#include <map>
#include <string>
#include <vector>

#include "smallcancel/structure.hpp"

namespace smallcancel {

// Kleene-Brouwer comparison of label-ascending simplex tuples: the first
// differing entry decides, and a strict extension precedes its prefix.
bool lusin_sierpinski_less(const std::vector<int>& a, const std::vector<int>& b);

struct OrderingMap {
  std::vector<int> by_label;  // label k -> structure vertex id
  std::map<int, int> phi;     // structure vertex id -> label
  int base = -1;
  std::string tie_break = "least";
  RegimeSet regime;
  // label -> index of the component block the vertex was ordered in (all zero
  // when the interior is connected)
  std::vector<int> block;
  // label -> the least fully-labeled simplex whose extension received the
  // label, as structure vertex ids in label order; empty for a block's base
  std::vector<std::vector<int>> step_simplex;
};

// Label the interior structure vertices starting from v0: repeatedly take the
// least already-labeled simplex of the nerve that still extends to an
// unlabeled vertex and label one such extension. tie_break is "least" or
// "random:<seed>".
OrderingMap compute_ordering(const StructureGraph& g, const NerveComplex& nerve,
                             int v0, const std::string& tie_break = "least");

// C(3)-T(6) fallback for a disconnected interior: order each edge-connected
// block of interior vertices independently and concatenate the blocks by
// earliest ball vertex in their supports.
OrderingMap compute_component_orderings(const StructureGraph& g,
                                        const NerveComplex& nerve,
                                        const std::string& tie_break = "least");

struct MonotoneReport {
  bool holds = true;
  int witness_less = -1;     // earlier-labeled vertex that sits farther out
  int witness_greater = -1;  // later-labeled vertex that sits closer in
  std::string detail;
};

// Graph distance from the base, measured inside the labeled domain, must be
// nondecreasing along the labels. Vertices unreachable within the domain
// count as infinitely far.
MonotoneReport verify_distance_monotone(const StructureGraph& g,
                                        const OrderingMap& om);

struct UnionReport {
  bool holds = true;
  int checked = 0;  // labels whose prefix meet was examined
  int failed_k = -1;
  std::string detail;
};

// For every label k past a block's base, the union of the earlier supports of
// the block must meet the k-th support in a nonempty tree, and the union's
// independent cycles must stay in bijection with its cell vertices. A
// violation throws VerificationFailure naming k.
UnionReport verify_union_contractibility(const StructureGraph& g,
                                         const OrderingMap& om, int k_max = -1);

}  // namespace smallcancel
