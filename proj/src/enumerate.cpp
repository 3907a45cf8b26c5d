#include "smallcancel/enumerate.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "smallcancel/word.hpp"

namespace smallcancel {

namespace {

bool rotation_match(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  for (size_t r = 0; r < u.size(); ++r)
    if (cyclic_shift(u, static_cast<int>(r)) == v) return true;
  return false;
}

int outer_position(const std::vector<int>& outer, int dart) {
  auto it = std::find(outer.begin(), outer.end(), dart);
  if (it == outer.end())
    throw std::logic_error("base dart left the outer walk");
  return static_cast<int>(it - outer.begin());
}

void sort_diagrams(std::vector<DiscDiagram>& ds) {
  std::vector<std::tuple<int, int, std::vector<int>, size_t>> keys;
  keys.reserve(ds.size());
  for (size_t i = 0; i < ds.size(); ++i)
    keys.emplace_back(ds[i].area(), ds[i].n_edges(), ds[i].canonical_encoding(),
                      i);
  std::sort(keys.begin(), keys.end());
  std::vector<DiscDiagram> out;
  out.reserve(ds.size());
  for (const auto& k : keys) out.push_back(std::move(ds[std::get<3>(k)]));
  ds = std::move(out);
}

// A diagram together with the outer dart its walk starts at (the outer
// walk reads the inverse of the boundary word). base == -1 marks the
// single-vertex diagram.
struct Based {
  DiscDiagram d;
  int base;
};

// Recursive assembly of all reduced diagrams whose outer walk reads a
// given word, leftmost position first: position 0 is either one side of a
// bare edge whose other side sits at a matching later position (the word
// splits in two), or the free side of a new face whose remaining sides
// are prepended to the rest of the word as positions still to fill.
class BoundarySearch {
 public:
  BoundarySearch(const PieceIndex& idx, const EnumerationBudget& budget)
      : idx_(idx), budget_(budget) {}

  const std::vector<Based>& run(const Word& g, int area_left) {
    auto key = std::make_pair(g, area_left);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (aborted || ++nodes > budget_.max_nodes) {
      aborted = true;
      return empty_;
    }
    std::vector<Based> out;
    int n = static_cast<int>(g.size());
    if (n == 0) {
      out.push_back({DiscDiagram::single_vertex(), -1});
      return memo_.emplace(std::move(key), std::move(out)).first->second;
    }
    for (int j = 1; j < n; ++j) {
      if (g[j] != -g[0]) continue;
      Word left_word(g.begin() + 1, g.begin() + j);
      Word right_word(g.begin() + j + 1, g.end());
      const std::vector<Based>& left = run(left_word, area_left);
      for (size_t li = 0; li < left.size(); ++li) {
        Based hung = pendant(left[li], g[0]);
        const std::vector<Based>& right =
            run(right_word, area_left - left[li].d.area());
        for (const Based& e2 : right) {
          if (e2.base < 0) {
            out.push_back(hung);
          } else {
            int off = static_cast<int>(e2.d.darts.size());
            out.push_back({e2.d.wedge_diagram(e2.base, hung.d, hung.base),
                           off + hung.base});
          }
        }
      }
    }
    for (size_t wi = 0; wi < idx_.sym.words.size(); ++wi) {
      const Word& w = idx_.sym.words[wi];
      if (w.back() != -g[0]) continue;
      if (area_left == 0) {
        truncated = true;
        continue;
      }
      int k = static_cast<int>(w.size()) - 1;
      Word sub(w.begin(), w.end() - 1);
      sub.insert(sub.end(), g.begin() + 1, g.end());
      const std::vector<Based>& inner = run(sub, area_left - 1);
      for (const Based& e : inner) {
        std::optional<DiscDiagram> nd;
        int base = -1;
        if (k == 0) {
          if (e.base < 0) {
            nd = DiscDiagram::single_face(w, static_cast<int>(wi));
          } else {
            auto outer = e.d.outer_darts();
            nd = e.d.attach_face_at_vertex(outer, outer_position(outer, e.base),
                                           w, static_cast<int>(wi));
          }
          base = static_cast<int>(nd->darts.size()) - 1;
        } else {
          auto outer = e.d.outer_darts();
          nd = e.d.attach_face_along_arc(outer, outer_position(outer, e.base),
                                         k, w, static_cast<int>(wi));
          if (!nd) continue;
          base = DiscDiagram::opposite(nd->faces.back().ring.back());
        }
        if (!nd->is_reduced()) continue;
        out.push_back({std::move(*nd), base});
      }
    }
    return memo_.emplace(std::move(key), std::move(out)).first->second;
  }

  long nodes = 0;
  bool truncated = false;
  bool aborted = false;

 private:
  // The sub-diagram for the left split, hung on a fresh bare edge whose
  // far side reads x first; rebased at that side.
  static Based pendant(const Based& e, Letter x) {
    if (e.base < 0)
      return {DiscDiagram::tree_from_trivial_word(Word{x, -x}), 0};
    auto outer = e.d.outer_darts();
    DiscDiagram t =
        e.d.attach_tree_edge(outer, outer_position(outer, e.base), -x);
    int leaf_side = static_cast<int>(t.darts.size()) - 1;
    return {std::move(t), leaf_side};
  }

  const PieceIndex& idx_;
  EnumerationBudget budget_;
  std::map<std::pair<Word, int>, std::vector<Based>> memo_;
  const std::vector<Based> empty_;
};

}  // namespace

EnumerationResult enumerate_by_area(const PieceIndex& idx, int max_area,
                                    long max_nodes) {
  EnumerationResult res;
  std::set<std::vector<int>> seen;
  std::vector<DiscDiagram> grown;
  auto admit = [&](DiscDiagram&& d) {
    if (!d.is_reduced()) return;
    if (!seen.insert(d.canonical_encoding()).second) return;
    grown.push_back(std::move(d));
  };
  admit(DiscDiagram::single_vertex());
  if (max_area >= 1)
    for (size_t wi = 0; wi < idx.sym.words.size(); ++wi)
      admit(DiscDiagram::single_face(idx.sym.words[wi], static_cast<int>(wi)));
  for (size_t q = 0; q < grown.size(); ++q) {
    if (grown[q].area() >= max_area) continue;
    if (++res.nodes > max_nodes) {
      res.aborted = true;
      break;
    }
    const DiscDiagram d = grown[q];
    auto outer = d.outer_darts();
    int m = static_cast<int>(outer.size());
    for (int s = 0; s < m; ++s) {
      for (size_t wi = 0; wi < idx.sym.words.size(); ++wi) {
        const Word& w = idx.sym.words[wi];
        int kmax = std::min(static_cast<int>(w.size()) - 1, m);
        for (int k = 1; k <= kmax; ++k) {
          if (d.darts[outer[(s + k - 1) % m]].label != w[k - 1]) break;
          if (auto nd = d.attach_face_along_arc(outer, s, k, w,
                                                static_cast<int>(wi)))
            admit(std::move(*nd));
        }
        admit(d.attach_face_at_vertex(outer, s, w, static_cast<int>(wi)));
      }
    }
  }
  res.complete = !res.aborted;
  sort_diagrams(grown);
  res.diagrams = std::move(grown);
  return res;
}

EnumerationResult enumerate_with_boundary(const PieceIndex& idx,
                                          const Word& boundary,
                                          const EnumerationBudget& budget) {
  EnumerationResult res;
  Word delta = inverse(boundary);
  std::set<Word> rotations;
  if (delta.empty()) rotations.insert(delta);
  for (size_t r = 0; r < delta.size(); ++r)
    rotations.insert(cyclic_shift(delta, static_cast<int>(r)));
  BoundarySearch search(idx, budget);
  std::set<std::vector<int>> seen;
  std::vector<DiscDiagram> found;
  for (const Word& g : rotations) {
    const std::vector<Based>& hits = search.run(g, budget.max_area);
    for (const Based& b : hits) {
      if (!rotation_match(b.d.boundary_word(), boundary))
        throw std::logic_error("assembled diagram misses its boundary word");
      if (seen.insert(b.d.canonical_encoding()).second)
        found.push_back(b.d);
    }
  }
  res.nodes = search.nodes;
  res.aborted = search.aborted;
  res.complete = !search.truncated && !search.aborted;
  sort_diagrams(found);
  res.diagrams = std::move(found);
  return res;
}

}  // namespace smallcancel
