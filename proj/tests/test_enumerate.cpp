#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "smallcancel/conditions.hpp"
#include "smallcancel/diagram.hpp"
#include "smallcancel/enumerate.hpp"
#include "smallcancel/presentation.hpp"
#include "smallcancel/shells.hpp"
#include "test_util.hpp"

using namespace smallcancel;

namespace {

Word W(const std::string& s) { return word_from_string(s); }

PieceIndex load_index(const std::string& rel) {
  return build_piece_index(parse_presentation_file(corpus_file(rel)));
}

bool rotation_equal(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  for (size_t r = 0; r < u.size(); ++r) {
    bool ok = true;
    for (size_t i = 0; i < u.size() && ok; ++i)
      ok = u[(r + i) % u.size()] == v[i];
    if (ok) return true;
  }
  return u.empty();
}

std::map<int, int> area_histogram(const EnumerationResult& r) {
  std::map<int, int> h;
  for (const auto& d : r.diagrams) ++h[d.area()];
  return h;
}

bool contains_iso(const EnumerationResult& r, const DiscDiagram& d) {
  auto code = d.canonical_encoding();
  for (const auto& e : r.diagrams)
    if (e.canonical_encoding() == code) return true;
  return false;
}

bool every_edge_on_a_face(const DiscDiagram& d) {
  for (size_t e = 0; e < d.darts.size(); e += 2) {
    if (d.darts[e].face == kOuterFace && d.darts[e + 1].face == kOuterFace)
      return false;
  }
  return true;
}

// The common boundary of any two distinct faces must be a disjoint union
// of single edges: no two of their shared edges may meet at a vertex.
bool interface_paths_are_single_edges(const DiscDiagram& d) {
  std::map<std::pair<int, int>, std::vector<int>> shared;
  for (int e = 0; e < static_cast<int>(d.darts.size()); e += 2) {
    int f = d.darts[e].face;
    int g = d.darts[e + 1].face;
    if (f == kOuterFace || g == kOuterFace || f == g) continue;
    shared[{std::min(f, g), std::max(f, g)}].push_back(e);
  }
  for (const auto& [fg, edges] : shared) {
    for (size_t i = 0; i < edges.size(); ++i)
      for (size_t j = i + 1; j < edges.size(); ++j) {
        int a0 = d.darts[edges[i]].origin, a1 = d.target(edges[i]);
        int b0 = d.darts[edges[j]].origin, b1 = d.target(edges[j]);
        if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;
      }
  }
  return true;
}

Rational charge_total(const std::map<int, Rational>& charges) {
  Rational s(0);
  for (const auto& [v, c] : charges) s = s + c;
  return s;
}

DiscDiagram attach_over(const DiscDiagram& d, int first_outer, int k,
                        const Word& w, int sym) {
  auto outer = d.outer_darts();
  auto it = std::find(outer.begin(), outer.end(), first_outer);
  REQUIRE(it != outer.end());
  auto nd =
      d.attach_face_along_arc(outer, (int)(it - outer.begin()), k, w, sym);
  REQUIRE(nd.has_value());
  REQUIRE(nd->is_valid());
  return *nd;
}

// Four unit squares forming a 2x2 block, boundary aabbAABB.
DiscDiagram z2_block(const PieceIndex& idx) {
  int r0 = idx.sym.index_of(W("abAB"));
  int r1 = idx.sym.index_of(W("BabA"));
  REQUIRE(r0 >= 0);
  REQUIRE(r1 >= 0);
  DiscDiagram d = DiscDiagram::single_face(W("abAB"), r0);
  d = attach_over(d, 3, 1, W("BabA"), r1);
  d = attach_over(d, 5, 1, W("abAB"), r0);
  d = attach_over(d, 15, 2, W("BabA"), r1);
  return d;
}

}  // namespace

TEST_CASE("area enumeration: square relator, caps 0 through 2") {
  PieceIndex idx = load_index("c4t4/z2.pres");

  EnumerationResult r0 = enumerate_by_area(idx, 0);
  CHECK(r0.complete);
  CHECK(!r0.aborted);
  REQUIRE(r0.diagrams.size() == 1);
  CHECK(r0.diagrams[0].area() == 0);
  CHECK(r0.diagrams[0].n_vertices == 1);
  CHECK(r0.diagrams[0].darts.empty());

  EnumerationResult r1 = enumerate_by_area(idx, 1);
  CHECK(r1.complete);
  REQUIRE(r1.diagrams.size() == 3);
  auto h1 = area_histogram(r1);
  CHECK(h1[0] == 1);
  CHECK(h1[1] == 2);
  // The two single faces are the relator and its inverse; rotations of
  // either collapse to the same class.
  int f0 = idx.sym.index_of(W("abAB"));
  int f1 = idx.sym.index_of(W("baBA"));
  CHECK(contains_iso(r1, DiscDiagram::single_face(W("abAB"), f0)));
  CHECK(contains_iso(r1, DiscDiagram::single_face(W("baBA"), f1)));
  CHECK(contains_iso(r1, DiscDiagram::single_face(W("BabA"),
                                                  idx.sym.index_of(W("BabA")))));

  // Area 2: gluing two squares along one edge admits two classes per
  // glued letter type (a-type and b-type), and the relator class combos
  // that would cancel are rejected, leaving 4 diagrams with 7 edges.
  // Wedging two squares at a corner pairs 8 marked squares (2 classes
  // times 4 corners) without order: C(8,2) + 8 = 36 diagrams, 8 edges.
  EnumerationResult r2 = enumerate_by_area(idx, 2);
  CHECK(r2.complete);
  REQUIRE(r2.diagrams.size() == 43);
  auto h2 = area_histogram(r2);
  CHECK(h2[0] == 1);
  CHECK(h2[1] == 2);
  CHECK(h2[2] == 40);
  int glued = 0, wedged = 0;
  for (const auto& d : r2.diagrams) {
    if (d.area() != 2) continue;
    if (d.n_edges() == 7) ++glued;
    if (d.n_edges() == 8) ++wedged;
  }
  CHECK(glued == 4);
  CHECK(wedged == 36);

  std::set<std::vector<int>> codes;
  for (const auto& d : r2.diagrams) {
    CHECK(d.is_valid());
    CHECK(d.is_reduced());
    CHECK(!d.has_spur());
    CHECK(every_edge_on_a_face(d));
    CHECK(codes.insert(d.canonical_encoding()).second);
  }

  // Deterministic output order.
  EnumerationResult again = enumerate_by_area(idx, 2);
  REQUIRE(again.diagrams.size() == r2.diagrams.size());
  for (size_t i = 0; i < r2.diagrams.size(); ++i)
    CHECK(again.diagrams[i].canonical_encoding() ==
          r2.diagrams[i].canonical_encoding());
}

TEST_CASE("area enumeration: 2x2 block of squares is reached") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  DiscDiagram block = z2_block(idx);
  EnumerationResult r = enumerate_by_area(idx, 4);
  CHECK(r.complete);
  CHECK(contains_iso(r, block));
  // The low-area layers repeat the cap-2 stream.
  auto h = area_histogram(r);
  CHECK(h[0] == 1);
  CHECK(h[1] == 2);
  CHECK(h[2] == 40);
}

TEST_CASE("area enumeration: node budget aborts the walk") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  EnumerationResult r = enumerate_by_area(idx, 3, 2);
  CHECK(r.aborted);
  CHECK(!r.complete);
  for (const auto& d : r.diagrams) CHECK(d.is_valid());
}

TEST_CASE("enumerated diagrams satisfy the shell trichotomy") {
  struct Row {
    const char* file;
    Regime regime;
    int cap;
  };
  const Row rows[] = {
      {"c6/hexgrid.pres", Regime::C6, 2},
      {"c6/w3.pres", Regime::C6, 2},
      {"c6/genus2.pres", Regime::C6, 2},
      {"c4t4/z2.pres", Regime::C4T4, 3},
      {"c3t6/tri_tiling.pres", Regime::C3T6, 3},
  };
  for (const Row& row : rows) {
    CAPTURE(row.file);
    PieceIndex idx = load_index(row.file);
    EnumerationResult r = enumerate_by_area(idx, row.cap);
    REQUIRE(r.complete);
    REQUIRE(!r.diagrams.empty());
    for (const auto& d : r.diagrams) {
      CAPTURE(d.canonical_encoding());
      CHECK(d.is_reduced());
      CHECK(!d.has_spur());
      CHECK_NOTHROW(classify_greendlinger(d, idx, row.regime));
      // Two shells and no spurs force a ladder.
      if (shells(d, idx, 3).size() == 2) CHECK(is_ladder(d));
    }
  }
}

TEST_CASE("curvature charges sum to one on enumerated diagrams") {
  {
    PieceIndex idx = load_index("c4t4/z2.pres");
    EnumerationResult r = enumerate_by_area(idx, 3);
    REQUIRE(r.complete);
    for (const auto& d : r.diagrams) {
      CAPTURE(d.canonical_encoding());
      CHECK(charge_total(euler_charge(d, idx, Regime::C4T4)) == Rational(1));
      if (d.area() >= 1) CHECK(corners_witness_c4t4(d, idx).has_value());
    }
  }
  {
    PieceIndex idx = load_index("c3t6/tri_tiling.pres");
    EnumerationResult r = enumerate_by_area(idx, 3);
    REQUIRE(r.complete);
    for (const auto& d : r.diagrams) {
      CAPTURE(d.canonical_encoding());
      CHECK(charge_total(euler_charge(d, idx, Regime::C3T6)) == Rational(1));
      if (d.area() >= 1) CHECK(corners_witness_c3t6(d, idx).has_value());
    }
  }
}

TEST_CASE("faces of diagrams over T(5) presentations meet along single edges") {
  struct Row {
    const char* file;
    int cap;
  };
  const Row rows[] = {
      {"c3t6/tri_tiling.pres", 3},
      {"c6/genus2.pres", 2},
  };
  for (const Row& row : rows) {
    CAPTURE(row.file);
    Presentation p = parse_presentation_file(corpus_file(row.file));
    REQUIRE(check_T(p, 5).holds);
    PieceIndex idx = build_piece_index(p);
    EnumerationResult r = enumerate_by_area(idx, row.cap);
    REQUIRE(r.complete);
    for (const auto& d : r.diagrams) {
      CAPTURE(d.canonical_encoding());
      CHECK(interface_paths_are_single_edges(d));
    }
  }
  // The square grid has interior vertices of valence 4, so T(5) fails
  // there and the single-edge property is not claimed.
  Presentation z2 = parse_presentation_file(corpus_file("c4t4/z2.pres"));
  CHECK(!check_T(z2, 5).holds);
}

TEST_CASE("boundary enumeration: the relator bounds exactly its own face") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  EnumerationBudget budget;
  budget.max_area = 1;
  EnumerationResult r = enumerate_with_boundary(idx, W("abAB"), budget);
  REQUIRE(r.diagrams.size() == 1);
  CHECK(r.diagrams[0].area() == 1);
  CHECK(rotation_equal(r.diagrams[0].boundary_word(), W("abAB")));
  CHECK(contains_iso(r, DiscDiagram::single_face(W("abAB"),
                                                 idx.sym.index_of(W("abAB")))));
}

TEST_CASE("boundary enumeration: freely trivial words bound trees") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  EnumerationBudget budget;
  budget.max_area = 0;

  // aAaA pairs up in two ways: both edges hanging from the basepoint, or
  // a two-edge path entered twice. The crossing pairing is not planar.
  EnumerationResult r = enumerate_with_boundary(idx, W("aAaA"), budget);
  REQUIRE(r.diagrams.size() == 2);
  for (const auto& d : r.diagrams) {
    CHECK(d.area() == 0);
    CHECK(d.n_edges() == 2);
    CHECK(rotation_equal(d.boundary_word(), W("aAaA")));
  }

  // abBA has a unique pairing: the two-edge path.
  EnumerationResult r2 = enumerate_with_boundary(idx, W("abBA"), budget);
  REQUIRE(r2.diagrams.size() == 1);
  CHECK(r2.diagrams[0].area() == 0);
  CHECK(r2.diagrams[0].n_edges() == 2);
  CHECK(r2.diagrams[0].n_vertices == 3);

  // The empty boundary bounds only the single vertex.
  EnumerationBudget b1;
  b1.max_area = 1;
  EnumerationResult r3 = enumerate_with_boundary(idx, Word{}, b1);
  REQUIRE(r3.diagrams.size() == 1);
  CHECK(r3.diagrams[0].area() == 0);
  CHECK(r3.diagrams[0].darts.empty());
}

TEST_CASE("boundary enumeration: words nontrivial in the group bound nothing") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  EnumerationBudget budget;
  budget.max_area = 3;
  EnumerationResult r = enumerate_with_boundary(idx, W("ab"), budget);
  CHECK(r.diagrams.empty());
  CHECK(!r.aborted);
}

TEST_CASE("boundary enumeration: conjugated relator product needs area two") {
  PieceIndex idx = load_index("c6/genus2.pres");
  Word rel = W("abABcdCD");
  Word beta = free_reduce(concat(concat(rel, W("a")), concat(rel, W("A"))));
  REQUIRE(beta.size() == 18);

  EnumerationBudget budget;
  budget.max_area = 2;
  EnumerationResult r = enumerate_with_boundary(idx, beta, budget);
  REQUIRE(!r.diagrams.empty());
  // The cyclic free reduction of beta has 16 letters, so one face (8
  // letters plus trivial excursions) can never bound it; two are needed.
  bool spurless_area2 = false;
  for (const auto& d : r.diagrams) {
    CHECK(d.area() == 2);
    CHECK(rotation_equal(d.boundary_word(), beta));
    if (!d.has_spur()) spurless_area2 = true;
  }
  CHECK(spurless_area2);

  // The spurless representative is the dumbbell: two octagons joined by a
  // bare bridge edge. Build it directly and look it up.
  int i0 = idx.sym.index_of(rel);
  REQUIRE(i0 >= 0);
  DiscDiagram oct = DiscDiagram::single_face(rel, i0);
  auto outer = oct.outer_darts();
  std::vector<DiscDiagram> dumbbells;
  for (Letter bridge : {Letter(1), Letter(-1)}) {
    for (size_t s = 0; s < outer.size(); ++s) {
      DiscDiagram with_edge = oct.attach_tree_edge(outer, (int)s, bridge);
      int leaf = with_edge.darts.back().origin;
      auto outer2 = with_edge.outer_darts();
      for (size_t t = 0; t < outer2.size(); ++t) {
        if (with_edge.darts[outer2[t]].origin != leaf) continue;
        for (size_t wi = 0; wi < idx.sym.words.size(); ++wi) {
          DiscDiagram cand = with_edge.attach_face_at_vertex(
              outer2, (int)t, idx.sym.words[wi], (int)wi);
          if (!cand.has_spur() && rotation_equal(cand.boundary_word(), beta))
            dumbbells.push_back(std::move(cand));
        }
      }
    }
  }
  REQUIRE(!dumbbells.empty());
  for (const auto& d : dumbbells) CHECK(contains_iso(r, d));
}

TEST_CASE("boundary enumeration: block boundary recovers the block") {
  PieceIndex idx = load_index("c4t4/z2.pres");
  EnumerationBudget budget;
  budget.max_area = 4;
  EnumerationResult r = enumerate_with_boundary(idx, W("aabbAABB"), budget);
  CHECK(contains_iso(r, z2_block(idx)));
  for (const auto& d : r.diagrams) {
    CHECK(d.is_reduced());
    CHECK(d.area() <= 4);
    CHECK(rotation_equal(d.boundary_word(), W("aabbAABB")));
  }
}

TEST_CASE("boundary enumeration: node budget aborts the search") {
  PieceIndex idx = load_index("c6/genus2.pres");
  Word rel = W("abABcdCD");
  Word beta = free_reduce(concat(concat(rel, W("a")), concat(rel, W("A"))));
  EnumerationBudget budget;
  budget.max_area = 2;
  budget.max_nodes = 3;
  EnumerationResult r = enumerate_with_boundary(idx, beta, budget);
  CHECK(r.aborted);
  CHECK(!r.complete);
}
