#include "smallcancel/conditions.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

#include "smallcancel/presentation.hpp"
#include "test_util.hpp"

using namespace smallcancel;

namespace {

Presentation load(const std::string& rel) { return parse_presentation_file(corpus_file(rel)); }

Word segment_word(const Word& w, std::pair<int, int> seg) {
  return Word(w.begin() + seg.first, w.begin() + seg.first + seg.second);
}

}  // namespace

TEST_CASE("piece structure of the square relator") {
  Presentation p = load("c4t4/z2.pres");
  PieceIndex idx = build_piece_index(p);
  // Pieces are exactly the four single letters.
  CHECK(idx.is_piece(word_from_string("a")));
  CHECK(idx.is_piece(word_from_string("b")));
  CHECK(idx.is_piece(word_from_string("A")));
  CHECK(idx.is_piece(word_from_string("B")));
  CHECK_FALSE(idx.is_piece(word_from_string("ab")));
  CHECK_FALSE(idx.is_piece(Word{}));
  std::set<std::string> maximal;
  for (const Word& w : idx.maximal_pieces) maximal.insert(word_to_string(w));
  CHECK(maximal == std::set<std::string>{"a", "A", "b", "B"});
}

TEST_CASE("piece prefix closure") {
  for (const char* rel : {"c6/w3.pres", "c6/genus2.pres", "c4t4/raag_path.pres",
                          "c3t6/tri_tiling.pres", "other/triangle333.pres"}) {
    CAPTURE(rel);
    PieceIndex idx = build_piece_index(load(rel));
    for (const Word& m : idx.maximal_pieces) {
      for (size_t l = 1; l <= m.size(); ++l) {
        CHECK(idx.is_piece(Word(m.begin(), m.begin() + static_cast<long>(l))));
      }
    }
  }
}

TEST_CASE("w3 pieces: aa and b^6 are pieces, aaa is not") {
  Presentation p = load("c6/w3.pres");
  PieceIndex idx = build_piece_index(p);
  CHECK(idx.is_piece(p.word("aa")));
  CHECK_FALSE(idx.is_piece(p.word("aaa")));
  CHECK(idx.is_piece(p.word("bbbbbb")));
  CHECK_FALSE(idx.is_piece(p.word("bbbbbbb")));
  CHECK(idx.is_piece(p.word("t")));
  CHECK(idx.is_piece(p.word("T")));
}

TEST_CASE("minimal piece decompositions of known relators") {
  {
    Presentation p = load("c4t4/z2.pres");
    PieceIndex idx = build_piece_index(p);
    auto d = min_piece_decomposition(idx, p.relators[0]);
    REQUIRE(d.has_value());
    CHECK(d->count == 4);
    REQUIRE(d->segments.size() == 4);
  }
  {
    Presentation p = load("c6/genus2.pres");
    PieceIndex idx = build_piece_index(p);
    auto d = min_piece_decomposition(idx, p.relators[0]);
    REQUIRE(d.has_value());
    CHECK(d->count == 8);
  }
  {
    Presentation p = load("other/power3.pres");
    PieceIndex idx = build_piece_index(p);
    auto d = min_piece_decomposition(idx, p.relators[0]);
    CHECK_FALSE(d.has_value());  // no pieces at all: not coverable
  }
  {
    Presentation p = load("c6/w3.pres");
    PieceIndex idx = build_piece_index(p);
    auto d = min_piece_decomposition(idx, p.relators[0]);
    REQUIRE(d.has_value());
    CHECK(d->count == 6);
  }
}

TEST_CASE("decomposition segments reassemble the word") {
  for (const char* rel : {"c4t4/z2.pres", "c6/w3.pres", "c6/genus2.pres", "c6/hexgrid.pres"}) {
    CAPTURE(rel);
    Presentation p = load(rel);
    PieceIndex idx = build_piece_index(p);
    for (const Word& w : idx.sym.words) {
      auto d = min_piece_decomposition(idx, w);
      REQUIRE(d.has_value());
      CHECK(d->count == static_cast<int>(d->segments.size()));
      Word glued;
      for (auto seg : d->segments) {
        Word piece = segment_word(w, seg);
        CHECK(idx.is_piece(piece));
        glued.insert(glued.end(), piece.begin(), piece.end());
      }
      CHECK(glued == w);
    }
  }
}

TEST_CASE("C(n) verdicts across the corpus") {
  auto holds_C = [](const std::string& rel, int n) {
    Presentation p = parse_presentation_file(corpus_file(rel));
    return check_C(p, n).holds;
  };
  // w_K: C(6) exactly.
  for (const char* rel : {"c6/w3.pres", "c6/w4.pres", "c6/w5.pres", "c6/w6.pres"}) {
    CAPTURE(rel);
    CHECK(holds_C(rel, 6));
    CHECK_FALSE(holds_C(rel, 7));
  }
  // Genus 2: C(8) exactly.
  CHECK(holds_C("c6/genus2.pres", 6));
  CHECK(holds_C("c6/genus2.pres", 8));
  CHECK_FALSE(holds_C("c6/genus2.pres", 9));
  // Hexgrid: C(6) exactly.
  CHECK(holds_C("c6/hexgrid.pres", 6));
  CHECK_FALSE(holds_C("c6/hexgrid.pres", 7));
  // Squares: C(4) exactly.
  CHECK(holds_C("c4t4/z2.pres", 4));
  CHECK_FALSE(holds_C("c4t4/z2.pres", 5));
  CHECK(holds_C("c4t4/torus_wedge.pres", 4));
  CHECK(holds_C("c4t4/raag_path.pres", 4));
  // Triangles: C(3) exactly.
  CHECK(holds_C("c3t6/tri_tiling.pres", 3));
  CHECK_FALSE(holds_C("c3t6/tri_tiling.pres", 4));
  CHECK(holds_C("c3t6/klein_tri.pres", 3));
  CHECK_FALSE(holds_C("c3t6/klein_tri.pres", 4));
  // No pieces: C(n) vacuous for all n.
  CHECK(holds_C("c3t6/free_triangle.pres", 3));
  CHECK(holds_C("c3t6/free_triangle.pres", 12));
  CHECK(holds_C("free/free2.pres", 6));
  CHECK(holds_C("other/power3.pres", 6));
  // (3,3,3): C(3) holds, C(4) fails.
  CHECK(holds_C("other/triangle333.pres", 3));
  CHECK_FALSE(holds_C("other/triangle333.pres", 4));
}

TEST_CASE("C'(1/n) verdicts and the w_K witness") {
  PieceIndex w3 = build_piece_index(load("c6/w3.pres"));
  ConditionVerdict v = check_C_prime(w3, 2);
  CHECK_FALSE(v.holds);
  CHECK(word_to_string(v.witness_piece) == "bbbbbb");

  // Genus 2 satisfies C'(1/6) and even C'(1/7), but not C'(1/8).
  PieceIndex g2 = build_piece_index(load("c6/genus2.pres"));
  CHECK(check_C_prime(g2, 6).holds);
  CHECK(check_C_prime(g2, 7).holds);
  CHECK_FALSE(check_C_prime(g2, 8).holds);

  // Z^2 fails C'(1/4): the piece a has |a| = 1 which is not < 4/4.
  PieceIndex z2 = build_piece_index(load("c4t4/z2.pres"));
  CHECK_FALSE(check_C_prime(z2, 4).holds);
  CHECK(check_C_prime(z2, 3).holds);
}

TEST_CASE("C'(1/n) implies C(n+1) across the corpus") {
  for (const char* rel :
       {"c6/w3.pres", "c6/w4.pres", "c6/w5.pres", "c6/w6.pres", "c6/genus2.pres",
        "c6/hexgrid.pres", "c4t4/z2.pres", "c4t4/torus_wedge.pres", "c4t4/raag_path.pres",
        "c3t6/tri_tiling.pres", "c3t6/klein_tri.pres", "c3t6/free_triangle.pres",
        "free/free2.pres", "other/triangle333.pres", "other/z3.pres", "other/power3.pres"}) {
    CAPTURE(rel);
    PieceIndex idx = build_piece_index(load(rel));
    for (int n = 2; n <= 8; ++n) {
      if (check_C_prime(idx, n).holds) {
        CAPTURE(n);
        CHECK(check_C(idx, n + 1).holds);
      }
    }
  }
}

TEST_CASE("T(q) verdicts across the corpus") {
  auto holds_T = [](const std::string& rel, int q) {
    Presentation p = parse_presentation_file(corpus_file(rel));
    return check_T(symmetrize(p), q).holds;
  };
  // Z^2: link is the 4-cycle a-b-A-B, so T(4) exactly.
  CHECK(holds_T("c4t4/z2.pres", 4));
  CHECK_FALSE(holds_T("c4t4/z2.pres", 5));
  CHECK(holds_T("c4t4/torus_wedge.pres", 4));
  CHECK_FALSE(holds_T("c4t4/torus_wedge.pres", 5));
  CHECK(holds_T("c4t4/raag_path.pres", 4));
  CHECK_FALSE(holds_T("c4t4/raag_path.pres", 5));
  // Triangular tilings: link girth 6, T(6) exactly.
  CHECK(holds_T("c3t6/tri_tiling.pres", 6));
  CHECK_FALSE(holds_T("c3t6/tri_tiling.pres", 7));
  CHECK(holds_T("c3t6/klein_tri.pres", 6));
  CHECK_FALSE(holds_T("c3t6/klein_tri.pres", 7));
  // Genus 2: link is an 8-cycle.
  CHECK(holds_T("c6/genus2.pres", 4));
  CHECK(holds_T("c6/genus2.pres", 6));
  CHECK(holds_T("c6/genus2.pres", 8));
  CHECK_FALSE(holds_T("c6/genus2.pres", 9));
  // Hexgrid: the link contains the triangle a-c-B, so T(4) already fails.
  CHECK_FALSE(holds_T("c6/hexgrid.pres", 4));
  // w3: triangle t-B-b in the link.
  CHECK_FALSE(holds_T("c6/w3.pres", 4));
  // Z^3: triangle a-b-c.
  CHECK_FALSE(holds_T("other/z3.pres", 4));
  // (3,3,3): the link is the 4-cycle a-A-b-B. T(4) holds, T(5) and T(6) fail.
  CHECK(holds_T("other/triangle333.pres", 4));
  CHECK_FALSE(holds_T("other/triangle333.pres", 5));
  CHECK_FALSE(holds_T("other/triangle333.pres", 6));
  // No closed walks at all.
  CHECK(holds_T("c3t6/free_triangle.pres", 12));
  CHECK(holds_T("free/free2.pres", 12));
  CHECK(holds_T("other/power3.pres", 12));
}

TEST_CASE("T(q) witness walks are closed walks in the link graph") {
  for (const char* rel : {"c6/hexgrid.pres", "c6/w3.pres", "other/z3.pres",
                          "other/triangle333.pres", "c4t4/z2.pres"}) {
    CAPTURE(rel);
    Presentation p = load(rel);
    SymmetrizedSet sym = symmetrize(p);
    LinkGraph link = build_link_graph(sym);
    auto edges_between = [&](Letter x, Letter y) {
      int n = 0;
      for (const auto& e : link.edges) {
        if ((e.a == x && e.b == y) || (e.a == y && e.b == x)) ++n;
      }
      return n;
    };
    for (int q = 4; q <= 7; ++q) {
      ConditionVerdict v = check_T(sym, q);
      if (v.holds) continue;
      const auto& walk = v.witness_walk;
      REQUIRE(walk.size() >= 3);
      CHECK(walk.size() < static_cast<size_t>(q));
      for (size_t i = 0; i < walk.size(); ++i) {
        Letter x = walk[i];
        Letter y = walk[(i + 1) % walk.size()];
        CHECK(edges_between(x, y) >= 1);
        // A cyclic backtrack x..y..x is only reduced with parallel edges.
        if (walk[(i + 2) % walk.size()] == x) CHECK(edges_between(x, y) >= 2);
      }
    }
  }
}

TEST_CASE("T(5) forces single-letter pieces") {
  for (const char* rel :
       {"c6/w3.pres", "c6/w4.pres", "c6/genus2.pres", "c6/hexgrid.pres", "c4t4/z2.pres",
        "c4t4/raag_path.pres", "c3t6/tri_tiling.pres", "c3t6/klein_tri.pres",
        "other/triangle333.pres", "other/z3.pres"}) {
    CAPTURE(rel);
    Presentation p = load(rel);
    if (!check_T(symmetrize(p), 5).holds) continue;
    PieceIndex idx = build_piece_index(p);
    for (const Word& m : idx.maximal_pieces) CHECK(m.size() == 1);
  }
}

TEST_CASE("classify produces the expected regime sets") {
  auto regimes = [](const std::string& rel) {
    return classify(parse_presentation_file(corpus_file(rel)));
  };
  {
    RegimeSet r = regimes("c6/w3.pres");
    CHECK(r.c6);
    CHECK_FALSE(r.c_prime_6);
    CHECK_FALSE(r.c4t4);
    CHECK_FALSE(r.c3t6);
  }
  {
    RegimeSet r = regimes("c6/genus2.pres");
    CHECK(r.c_prime_6);
    CHECK(r.c6);
    CHECK(r.c4t4);
    CHECK(r.c3t6);
  }
  {
    RegimeSet r = regimes("c6/hexgrid.pres");
    CHECK(r.c6);
    CHECK_FALSE(r.c4t4);
    CHECK_FALSE(r.c3t6);
  }
  {
    RegimeSet r = regimes("c4t4/z2.pres");
    CHECK_FALSE(r.c6);
    CHECK(r.c4t4);
    CHECK_FALSE(r.c3t6);
  }
  {
    RegimeSet r = regimes("c3t6/tri_tiling.pres");
    CHECK_FALSE(r.c6);
    CHECK_FALSE(r.c4t4);
    CHECK(r.c3t6);
  }
  {
    RegimeSet r = regimes("c3t6/free_triangle.pres");
    CHECK(r.c6);
    CHECK(r.c4t4);
    CHECK(r.c3t6);
    CHECK(r.c_prime_6);
  }
  {
    RegimeSet r = regimes("other/triangle333.pres");
    CHECK_FALSE(r.any());
  }
  {
    RegimeSet r = regimes("other/z3.pres");
    CHECK_FALSE(r.any());
  }
  {
    RegimeSet r = regimes("other/power3.pres");
    CHECK(r.c_prime_6);
    CHECK(r.c6);
    CHECK(r.c4t4);
    CHECK(r.c3t6);
  }
}

TEST_CASE("witnesses for failed C conditions are genuine") {
  // When C(n) fails, the reported witness word must be a symmetrized word
  // decomposable into fewer than n pieces, matching the reported segments.
  for (const char* rel : {"c4t4/z2.pres", "c3t6/tri_tiling.pres", "c6/hexgrid.pres"}) {
    CAPTURE(rel);
    Presentation p = load(rel);
    PieceIndex idx = build_piece_index(p);
    for (int n = 3; n <= 9; ++n) {
      ConditionVerdict v = check_C(idx, n);
      if (v.holds) continue;
      CHECK(idx.sym.index_of(v.witness_word) >= 0);
      CHECK(v.witness_segments.size() < static_cast<size_t>(n));
      Word glued;
      for (auto seg : v.witness_segments) {
        Word piece = segment_word(v.witness_word, seg);
        CHECK(idx.is_piece(piece));
        glued.insert(glued.end(), piece.begin(), piece.end());
      }
      CHECK(glued == v.witness_word);
    }
  }
}
