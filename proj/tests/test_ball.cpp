#include "smallcancel/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "smallcancel/equality.hpp"
#include "smallcancel/presentation.hpp"
#include "smallcancel/shells.hpp"
#include "smallcancel/word.hpp"
#include "test_util.hpp"

using namespace smallcancel;

namespace {

Word W(const std::string& s) { return word_from_string(s); }

Presentation load(const std::string& rel) {
  return parse_presentation_file(corpus_file(rel));
}

bool rotation_equal(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  for (size_t k = 0; k < u.size(); ++k) {
    bool ok = true;
    for (size_t j = 0; j < u.size(); ++j) {
      if (u[(k + j) % u.size()] != v[j]) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Structural invariants shared by every ball: geodesic shortlex names in
// sorted order, edges closed under label inversion, distances changing by
// at most one along an edge.
void check_ball_shape(const Ball& b) {
  REQUIRE(!b.vertices.empty());
  REQUIRE(b.vertices.size() == b.distance.size());
  CHECK(b.basepoint == 0);
  CHECK(b.vertices[0].empty());
  CHECK(b.distance[0] == 0);
  CHECK(std::is_sorted(b.vertices.begin(), b.vertices.end(), ShortlexLess{}));
  for (size_t v = 0; v < b.vertices.size(); ++v) {
    CHECK(free_reduce(b.vertices[v]) == b.vertices[v]);
    CHECK(static_cast<int>(b.vertices[v].size()) == b.distance[v]);
    CHECK(b.distance[v] <= b.radius);
  }
  for (const BallEdge& e : b.edges) {
    CHECK(neighbor(b, e.from, e.label) == e.to);
    CHECK(neighbor(b, e.to, -e.label) == e.from);
    CHECK(std::abs(b.distance[e.from] - b.distance[e.to]) <= 1);
  }
}

std::set<Word> word_set(const Ball& b) {
  return std::set<Word>(b.vertices.begin(), b.vertices.end());
}

bool subset_of(const std::set<Word>& small, const std::set<Word>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

int cells_through(const std::vector<CellTranslate>& cells, int v) {
  int count = 0;
  for (const CellTranslate& c : cells)
    if (std::find(c.cycle.begin(), c.cycle.end(), v) != c.cycle.end()) ++count;
  return count;
}

}  // namespace

TEST_CASE("square grid ball of radius two matches the taxicab diamond") {
  Presentation p = load("c4t4/z2.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 2);
  check_ball_shape(b);
  CHECK(b.radius == 2);
  CHECK(b.note.empty());
  CHECK(b.vertices.size() == 13);
  CHECK(b.edges.size() == 32);  // 16 grid edges, both directions

  // Independent model: the presentation abelianizes faithfully onto the
  // integer lattice, so vertices are exactly the taxicab points.
  std::set<std::pair<long long, long long>> expect;
  for (long long x = -2; x <= 2; ++x)
    for (long long y = -2; y <= 2; ++y)
      if (std::abs(x) + std::abs(y) <= 2) expect.insert({x, y});
  std::set<std::pair<long long, long long>> got;
  for (size_t v = 0; v < b.vertices.size(); ++v) {
    std::vector<long long> ev = exponent_vector(b.vertices[v], 2);
    got.insert({ev[0], ev[1]});
    CHECK(b.distance[v] == std::abs(ev[0]) + std::abs(ev[1]));
  }
  CHECK(got == expect);
  CHECK(got.size() == b.vertices.size());

  // Exactly the four unit squares at the basepoint close up inside.
  std::vector<CellTranslate> cells = relator_translates(b);
  CHECK(cells.size() == 4);
  for (const CellTranslate& c : cells) {
    CHECK(c.relator == 0);
    CHECK(c.cycle.size() == 4);
    CHECK(std::set<int>(c.cycle.begin(), c.cycle.end()).size() == 4);
    CHECK(std::find(c.cycle.begin(), c.cycle.end(), 0) != c.cycle.end());
  }
  CHECK(untethered_components(b).empty());

  Ball b3 = build_ball(ctx, 3);
  CHECK(b3.vertices.size() == 25);
  CHECK(subset_of(word_set(b), word_set(b3)));
}

TEST_CASE("free group balls are labeled trees") {
  Presentation p = load("free/free2.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b1 = build_ball(ctx, 1);
  check_ball_shape(b1);
  CHECK(b1.vertices.size() == 5);
  CHECK(b1.edges.size() == 8);
  CHECK(relator_translates(b1).empty());

  // With no relators every edge is untethered and the whole ball is one tree.
  std::vector<UntetheredComponent> comps = untethered_components(b1);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].id == 0);
  CHECK(comps[0].vertices.size() == 5);
  CHECK(comps[0].edges.size() == 4);

  Ball b2 = build_ball(ctx, 2);
  check_ball_shape(b2);
  CHECK(b2.vertices.size() == 17);
  CHECK(subset_of(word_set(b1), word_set(b2)));
}

TEST_CASE("surface group ball has no small cells") {
  Presentation p = load("c6/genus2.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b1 = build_ball(ctx, 1);
  check_ball_shape(b1);
  CHECK(b1.note.empty());
  CHECK(b1.vertices.size() == 9);
  CHECK(relator_translates(b1).empty());

  // The shortest relation has length eight, so radius two is merge free and
  // no octagon fits.
  Ball b2 = build_ball(ctx, 2);
  check_ball_shape(b2);
  CHECK(b2.vertices.size() == 65);
  CHECK(relator_translates(b2).empty());
  CHECK(subset_of(word_set(b1), word_set(b2)));
}

TEST_CASE("surface group octagons appear at radius four") {
  Presentation p = load("c6/genus2.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 4);
  check_ball_shape(b);

  // Levels 1..3 are free of relations; at level four each of the sixteen
  // length-four prefixes of the symmetrized relators meets its complement,
  // giving eight merged pairs: 1 + 8 + 56 + 392 + (2744 - 8).
  CHECK(b.vertices.size() == 3193);

  // A fully interior octagon must pass through the basepoint: any other
  // placement pushes a corner past distance four.  One octagon enters at
  // each of its eight corners.
  std::vector<CellTranslate> cells = relator_translates(b);
  CHECK(cells.size() == 8);
  CHECK(cells_through(cells, 0) == 8);
  for (const CellTranslate& c : cells) {
    CHECK(c.cycle.size() == 8);
    CHECK(std::set<int>(c.cycle.begin(), c.cycle.end()).size() == 8);
    for (int v : c.cycle) CHECK(b.distance[v] <= 4);
  }
  CHECK(untethered_components(b).empty());
}

TEST_CASE("triangle tiling ball matches its lattice model") {
  Presentation p = load("c3t6/tri_tiling.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 2);
  check_ball_shape(b);
  CHECK(b.note.empty());

  // The group is the integer lattice with a = (1,0), b = (0,1),
  // c = (-1,-1); a word lands on (na - nc, nb - nc).  Points reachable in
  // two steps over the six letters, enumerated by hand:
  std::set<std::pair<long long, long long>> expect = {
      {0, 0},  {1, 0},   {-1, 0}, {0, 1},   {0, -1},  {1, 1},   {-1, -1},
      {2, 0},  {-2, 0},  {0, 2},  {0, -2},  {2, 2},   {-2, -2}, {1, -1},
      {-1, 1}, {2, 1},   {1, 2},  {-2, -1}, {-1, -2}};
  CHECK(b.vertices.size() == expect.size());
  std::set<std::pair<long long, long long>> got;
  for (const Word& w : b.vertices) {
    std::vector<long long> ev = exponent_vector(w, 3);
    got.insert({ev[0] - ev[2], ev[1] - ev[2]});
  }
  CHECK(got == expect);

  // Twelve upward and twelve downward triangles fit; six meet the origin.
  std::vector<CellTranslate> cells = relator_translates(b);
  CHECK(cells.size() == 24);
  CHECK(cells_through(cells, 0) == 6);
  for (const CellTranslate& c : cells) {
    CHECK(c.cycle.size() == 3);
    CHECK(std::set<int>(c.cycle.begin(), c.cycle.end()).size() == 3);
  }
  CHECK(untethered_components(b).empty());
}

TEST_CASE("proper power ball carries untethered chains") {
  Presentation p = load("other/power3.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 2);
  check_ball_shape(b);
  CHECK(b.note.empty());

  // Levels: 4 letters, then 10 new length-two words after aa and AA fold
  // into A and a.
  CHECK(b.vertices.size() == 15);

  // One triangle per coset of the rotation subgroup with corners inside:
  // {e,a,A}, {b,ba,bA}, {B,Ba,BA}.
  std::vector<CellTranslate> cells = relator_translates(b);
  CHECK(cells.size() == 3);
  for (const CellTranslate& c : cells) {
    CHECK(c.relator == 0);
    CHECK(c.cycle.size() == 3);
    CHECK(std::set<int>(c.cycle.begin(), c.cycle.end()).size() == 3);
  }

  // The second generator is absent from the relator, so its edges form
  // three chains: BB-B-e-b-bb and the two translated three-vertex paths.
  std::vector<UntetheredComponent> comps = untethered_components(b);
  REQUIRE(comps.size() == 3);
  std::multiset<size_t> sizes;
  for (const UntetheredComponent& c : comps) {
    sizes.insert(c.vertices.size());
    CHECK(c.edges.size() + 1 == c.vertices.size());
    for (const BallEdge& e : c.edges) CHECK(e.label == 2);
  }
  CHECK(sizes == std::multiset<size_t>({3, 3, 5}));

  // The fold that identified aa with A carries an exact witness.
  EqualityVerdict v = word_equal(ctx, W("aa"), W("A"));
  REQUIRE(v.status == EqualityStatus::Equal);
  REQUIRE(v.witness.has_value());
  CHECK(rotation_equal(v.witness->boundary_word(), W("aaa")));
}

TEST_CASE("long relator keeps small balls merge free") {
  Presentation p = load("c6/w3.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 2);
  check_ball_shape(b);

  // Any relation needs a full pinch worth of letters, so nothing of length
  // five or less is trivial: the ball is the free tree 1 + 6 + 30.
  CHECK(b.vertices.size() == 37);
  CHECK(relator_translates(b).empty());
  CHECK(untethered_components(b).empty());

  // Distinct verdicts between ball vertices stay distinct when every
  // budget is enlarged.
  EqualityBudget wide;
  wide.max_nodes *= 2;
  wide.max_quotient_degree = 5;
  int sampled = 0;
  for (size_t i = 0; i < b.vertices.size() && sampled < 12; ++i) {
    for (size_t j = i + 1; j < b.vertices.size() && sampled < 12; ++j) {
      EqualityVerdict base = word_equal(ctx, b.vertices[i], b.vertices[j]);
      EqualityVerdict more =
          word_equal(ctx, b.vertices[i], b.vertices[j], wide);
      CHECK(base.status == EqualityStatus::Distinct);
      CHECK(more.status == EqualityStatus::Distinct);
      ++sampled;
    }
  }
  CHECK(sampled == 12);
}

TEST_CASE("a starved budget aborts construction naming the stuck pair") {
  Presentation p = load("c6/w3.pres");
  EqualityContext ctx = make_equality_context(p);
  EqualityBudget starved;
  starved.max_nodes = 0;
  starved.max_quotient_degree = 1;
  CHECK_NOTHROW(build_ball(ctx, 1, starved));
  bool aborted = false;
  try {
    build_ball(ctx, 2, starved);
  } catch (const BallBudgetError& e) {
    aborted = true;
    CHECK(!e.left.empty());
    CHECK(!e.right.empty());
    CHECK(std::string(e.what()).find("budget") != std::string::npos);
  }
  CHECK(aborted);
}

TEST_CASE("unsupported presentations are flagged but still built") {
  Presentation p = load("other/triangle333.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b = build_ball(ctx, 1);
  check_ball_shape(b);
  CHECK(!b.note.empty());
  CHECK(b.vertices.size() == 5);

  // Both order-three rotations close up already at radius one.
  std::vector<CellTranslate> cells = relator_translates(b);
  CHECK(cells.size() == 2);
  std::set<int> relators;
  for (const CellTranslate& c : cells) {
    relators.insert(c.relator);
    CHECK(c.cycle.size() == 3);
  }
  CHECK(relators == std::set<int>({0, 1}));
}

TEST_CASE("redundant generator folds into the tree of short names") {
  Presentation p = load("c3t6/free_triangle.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b1 = build_ball(ctx, 1);
  check_ball_shape(b1);
  CHECK(b1.note.empty());
  CHECK(b1.vertices.size() == 7);

  // c equals the inverse of ab, so three triangles close around the
  // basepoint using only radius-one vertices.
  std::vector<CellTranslate> cells = relator_translates(b1);
  CHECK(cells.size() == 3);
  CHECK(cells_through(cells, 0) == 3);
  CHECK(untethered_components(b1).empty());

  Ball b2 = build_ball(ctx, 2);
  check_ball_shape(b2);
  CHECK(subset_of(word_set(b1), word_set(b2)));
  CHECK_NOTHROW(relator_translates(b2));
}

TEST_CASE("folded Klein style presentation builds consistently") {
  Presentation p = load("c3t6/klein_tri.pres");
  EqualityContext ctx = make_equality_context(p);
  Ball b1 = build_ball(ctx, 1);
  Ball b2 = build_ball(ctx, 2);
  check_ball_shape(b1);
  check_ball_shape(b2);
  CHECK(subset_of(word_set(b1), word_set(b2)));
  CHECK_NOTHROW(relator_translates(b2));
  CHECK(untethered_components(b2).empty());
}
