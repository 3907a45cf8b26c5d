#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcancel/presentation.hpp"
#include "smallcancel/rational.hpp"

namespace smallcancel {

constexpr int kOuterFace = -1;

// Disc diagram as a combinatorial map. Darts come in opposite pairs
// (d and d^1); ccw_next/ccw_prev give the counterclockwise rotation of
// darts around their origin vertex. Inner faces are traversed with the
// face interior on the left via next_in_face; the darts not assigned to
// any face form the single outer orbit. Edges whose two sides are both
// outer are tree edges (boundary decorations).
struct DiscDiagram {
  struct Dart {
    int origin = -1;
    Letter label = 0;
    int ccw_next = -1;
    int ccw_prev = -1;
    int face = kOuterFace;
  };
  struct Face {
    std::vector<int> ring;  // darts in ccw boundary order
    int sym_word = -1;      // symmetrized word the ring reads
  };

  std::vector<Dart> darts;
  std::vector<Face> faces;
  int n_vertices = 0;

  static int opposite(int d) { return d ^ 1; }
  int next_in_face(int d) const { return darts[opposite(d)].ccw_prev; }
  int prev_in_face(int d) const { return opposite(darts[d].ccw_next); }
  int target(int d) const { return darts[opposite(d)].origin; }
  int area() const { return static_cast<int>(faces.size()); }
  int n_edges() const { return static_cast<int>(darts.size() / 2); }
  bool is_outer(int d) const { return darts[d].face == kOuterFace; }

  // Single vertex, no darts; the empty diagram.
  static DiscDiagram single_vertex();
  // One face reading w, counterclockwise.
  static DiscDiagram single_face(const Word& w, int sym_word);
  // The unique tree whose boundary walk reads exactly w (w must reduce
  // freely to the empty word).
  static DiscDiagram tree_from_trivial_word(const Word& w);

  // Outer orbit darts in walk order (outer region on the left), starting
  // at the smallest-id outer dart. Empty for the single-vertex diagram.
  std::vector<int> outer_darts() const;
  // Boundary darts in ccw order (diagram interior on the left); these are
  // the opposites of the outer orbit, reversed.
  std::vector<int> boundary_darts() const;
  Word boundary_word() const;

  Word face_word(int f) const;            // labels along the ring
  Word face_word_from(int f, int d) const;  // ring rotated to start at d

  // Attaches a face reading w over k >= 1 consecutive edges of the outer
  // walk starting at outer_darts()[s]; w[0..k) must equal the labels of
  // those darts. Fails (nullopt) if the move would close a sphere or the
  // fully-glued case does not close up. `outer` is the cached outer_darts().
  std::optional<DiscDiagram> attach_face_along_arc(const std::vector<int>& outer,
                                                   int s, int k, const Word& w,
                                                   int sym_word) const;
  // Attaches a face reading w as a wedge at the boundary corner before
  // outer_darts()[s], touching the diagram only at that vertex.
  DiscDiagram attach_face_at_vertex(const std::vector<int>& outer, int s,
                                    const Word& w, int sym_word) const;
  // Attaches a bare edge (tree decoration) at the same corner.
  DiscDiagram attach_tree_edge(const std::vector<int>& outer, int s,
                               Letter label) const;
  // Wedges a whole diagram into a boundary corner: other's vertex at the
  // origin of its outer dart other_dart is identified with the origin of
  // my outer dart my_dart, and the merged outer walk reads other's walk
  // from other_dart followed by this walk from my_dart.
  DiscDiagram wedge_diagram(int my_dart, const DiscDiagram& other,
                            int other_dart) const;
  // Grafts the tree for a freely-trivial word at the same corner.
  DiscDiagram attach_tree_word(const std::vector<int>& outer, int s,
                               const Word& trivial) const;

  // Structural invariants: rotation lists are consistent, rings match
  // next_in_face orbits, outer darts form one orbit, V-E+F == 1.
  bool is_valid(std::string* why = nullptr) const;

  int degree(int v) const;
  std::vector<bool> boundary_vertex_flags() const;
  std::vector<int> interior_vertex_valences() const;

  // Cancellable pair: two face sides of an interior edge whose face words
  // read from that edge are mirror images. Diagrams without one are reduced.
  std::optional<std::pair<int, int>> cancellable_pair() const;
  bool is_reduced() const { return !cancellable_pair().has_value(); }

  // Removes the two faces of a cancellable pair and glues the complementary
  // parts of their rings together. Area drops by exactly 2 and the boundary
  // word is preserved verbatim. Throws if the pair is not cancellable.
  DiscDiagram cancel_pair(std::pair<int, int> pair) const;
  // Cancels pairs until none remain.
  DiscDiagram reduce() const;

  // Spurs: boundary vertices of degree 1 (the boundary path backtracks).
  std::vector<int> spur_vertices() const;
  bool has_spur() const { return !spur_vertices().empty(); }

  // Maximal runs of ring darts whose opposite side is outer, per face.
  std::vector<std::vector<int>> exposed_runs(int f) const;
  // Number of maximal interior ring segments, split where the neighbouring
  // face changes. In a reduced diagram each such segment is a piece.
  int interior_neighbor_runs(int f) const;

  // charge(v) = 1 - deg(v)/2 + sum over corners at v of 1/|face|.
  // Charges sum to the Euler characteristic, 1.
  std::vector<Rational> vertex_charges() const;

  // Isomorphism code: minimal breadth-first encoding over boundary
  // starting darts. Mirror images are distinct.
  std::vector<int> canonical_encoding() const;

  // Low-level mutators used by the construction and surgery routines.
  int new_vertex();
  std::pair<int, int> new_edge(int from, int to, Letter label);
  void rotation_insert_after(int at, int d);
  void rotation_init_singleton(int d);
};

// Annular diagram: the same combinatorial data with two boundary walks.
// Only representation and validity are supported; the toolkit reasons
// about annuli indirectly, through disc diagrams.
struct AnnularDiagram {
  std::vector<DiscDiagram::Dart> darts;
  std::vector<DiscDiagram::Face> faces;
  int n_vertices = 0;

  static int opposite(int d) { return d ^ 1; }
  int next_in_face(int d) const { return darts[opposite(d)].ccw_prev; }
  int area() const { return static_cast<int>(faces.size()); }
  int n_edges() const { return static_cast<int>(darts.size() / 2); }

  // The two outer orbits, each starting at its smallest dart.
  std::vector<std::vector<int>> outer_walks() const;
  Word boundary_word(int side) const;  // side 0 = first orbit, 1 = second

  // Rotation/ring consistency, connected, exactly two outer orbits,
  // V - E + F == 0 (homotopy equivalent to a circle).
  bool is_valid(std::string* why = nullptr) const;

  // One edge labeled x forming a loop at a single vertex: the smallest
  // annular diagram, with boundary words x and x^-1.
  static AnnularDiagram loop(Letter x);
};

}  // namespace smallcancel
