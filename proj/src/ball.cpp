#include "smallcancel/ball.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "smallcancel/conditions.hpp"
#include "smallcancel/shells.hpp"

namespace smallcancel {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// Canonical coset representative modulo the row lattice: clear each pivot
// column in turn with floored quotients.  Two vectors get the same residue
// exactly when their difference lies in the lattice, which makes residues
// usable as merge buckets.
std::vector<long long> lattice_residue(
    const std::vector<std::vector<long long>>& hnf, std::vector<long long> v) {
  for (const auto& row : hnf) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    long long q = floor_div(v[c], row[c]);
    if (q != 0)
      for (size_t k = c; k < v.size(); ++k) v[k] -= q * row[k];
  }
  return v;
}

Letter rank_to_letter(int r) { return r % 2 == 0 ? r / 2 + 1 : -(r / 2 + 1); }

std::vector<int> min_rotation(const std::vector<int>& cycle) {
  std::vector<int> best = cycle;
  std::vector<int> cand(cycle.size());
  for (size_t k = 1; k < cycle.size(); ++k) {
    for (size_t j = 0; j < cycle.size(); ++j)
      cand[j] = cycle[(k + j) % cycle.size()];
    if (cand < best) best = cand;
  }
  return best;
}

struct Builder {
  const EqualityContext& ctx;
  EqualityBudget budget;
  std::vector<Word> words;
  std::vector<int> dist;
  std::map<Word, int> by_word;
  std::map<std::vector<long long>, std::vector<int>> buckets;
  std::map<std::pair<int, int>, int> adj;  // (vertex, letter rank) -> vertex

  int n() const { return ctx.p.n_generators; }

  void insert_vertex(const Word& w, int d) {
    int id = static_cast<int>(words.size());
    words.push_back(w);
    dist.push_back(d);
    by_word.emplace(w, id);
    buckets[lattice_residue(ctx.lattice, exponent_vector(w, n()))]
        .push_back(id);
  }

  // The vertex equal to c with distance in [lo, hi], or -1.  Only vertices
  // in the same abelianization coset can match, so the bucket scan already
  // carries the cheap separating test.
  int resolve(const Word& c, int lo, int hi) {
    auto hit = by_word.find(c);
    if (hit != by_word.end()) return hit->second;
    auto bk = buckets.find(lattice_residue(ctx.lattice, exponent_vector(c, n())));
    if (bk == buckets.end()) return -1;
    for (int id : bk->second) {
      if (dist[id] < lo || dist[id] > hi) continue;
      EqualityVerdict v = word_equal(ctx, c, words[id], budget);
      if (v.status == EqualityStatus::Equal) return id;
      if (v.status == EqualityStatus::Unknown) {
        std::ostringstream msg;
        msg << "word problem budget exhausted while merging "
            << ctx.p.display(c) << " against " << ctx.p.display(words[id])
            << " (" << v.certificate << ")";
        throw BallBudgetError(msg.str(), c, words[id]);
      }
    }
    return -1;
  }

  void record(int u, Letter s, int v) {
    adj[{u, letter_rank(s)}] = v;
    adj[{v, letter_rank(-s)}] = u;
  }
};

}  // namespace

Ball build_ball(const EqualityContext& ctx, int radius,
                const EqualityBudget& budget) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  Builder b{ctx, budget, {}, {}, {}, {}, {}};
  b.insert_vertex(Word{}, 0);

  // Breadth-first growth.  A candidate one step from level lv sits at true
  // distance lv-1, lv, or lv+1, and every element within lv is already
  // present, so scanning that window finds every merge.
  int level_begin = 0;
  for (int lv = 0; lv < radius; ++lv) {
    int level_end = static_cast<int>(b.words.size());
    for (int v = level_begin; v < level_end; ++v) {
      for (int r = 0; r < 2 * b.n(); ++r) {
        if (b.adj.count({v, r})) continue;
        Letter s = rank_to_letter(r);
        Word c = free_reduce(concat(b.words[v], Word{s}));
        int u = b.resolve(c, lv - 1, lv + 1);
        if (u < 0) {
          u = static_cast<int>(b.words.size());
          b.insert_vertex(c, lv + 1);
        }
        b.record(v, s, u);
      }
    }
    level_begin = level_end;
  }

  // Sphere pass: record edges between existing vertices without creating
  // new ones, so the edge set is the full induced subgraph.
  for (int v = 0; v < static_cast<int>(b.words.size()); ++v) {
    if (b.dist[v] != radius) continue;
    for (int r = 0; r < 2 * b.n(); ++r) {
      if (b.adj.count({v, r})) continue;
      Letter s = rank_to_letter(r);
      Word c = free_reduce(concat(b.words[v], Word{s}));
      int u = b.resolve(c, radius - 1, radius);
      if (u >= 0) b.record(v, s, u);
    }
  }

  Ball out;
  out.p = ctx.p;
  out.radius = radius;
  out.basepoint = 0;
  out.vertices = b.words;
  out.distance = b.dist;
  out.budget = budget;
  for (const auto& [key, u] : b.adj)
    out.edges.push_back({key.first, u, rank_to_letter(key.second)});

  // Attach every relator disc whose boundary walk closes inside the ball.
  // Reading the relator from each corner finds each disc at least once;
  // only proper power relators revisit the same cycle, deduplicated by its
  // rotation class.
  std::set<std::pair<int, std::vector<int>>> seen;
  for (int v = 0; v < static_cast<int>(b.words.size()); ++v) {
    for (int i = 0; i < static_cast<int>(ctx.p.relators.size()); ++i) {
      const Word& rel = ctx.p.relators[i];
      std::vector<int> cycle;
      cycle.reserve(rel.size());
      int cur = v;
      bool inside = true;
      for (Letter x : rel) {
        auto it = b.adj.find({cur, letter_rank(x)});
        if (it == b.adj.end()) {
          inside = false;
          break;
        }
        cycle.push_back(cur);
        cur = it->second;
      }
      if (!inside) continue;
      if (cur != v) throw std::logic_error("relator walk failed to close");
      if (seen.insert({i, min_rotation(cycle)}).second)
        out.cells.push_back(CellTranslate{i, v, cycle});
    }
  }

  if (!classify(ctx.p).any())
    out.note =
        "no supported small cancellation regime holds; construction relied "
        "on the word equality oracle alone";
  return out;
}

Ball build_ball(const Presentation& p, int radius,
                const EqualityBudget& budget) {
  return build_ball(make_equality_context(p), radius, budget);
}

int neighbor(const Ball& b, int v, Letter s) {
  std::pair<int, int> key{v, letter_rank(s)};
  auto it = std::lower_bound(
      b.edges.begin(), b.edges.end(), key,
      [](const BallEdge& e, const std::pair<int, int>& k) {
        return std::make_pair(e.from, letter_rank(e.label)) < k;
      });
  if (it != b.edges.end() && it->from == v && it->label == s) return it->to;
  return -1;
}

std::vector<CellTranslate> relator_translates(const Ball& b) {
  for (const CellTranslate& cell : b.cells) {
    const Word& rel = b.p.relators.at(cell.relator);
    std::ostringstream shown;
    shown << "relator " << cell.relator << " at vertex " << cell.base;
    if (cell.cycle.size() != rel.size() || cell.cycle.empty() ||
        cell.cycle.front() != cell.base)
      throw VerificationFailure("cell boundary is malformed: " + shown.str());
    int cur = cell.base;
    for (size_t j = 0; j < rel.size(); ++j) {
      if (cell.cycle[j] != cur)
        throw VerificationFailure("cell boundary mismatches its walk: " +
                                  shown.str());
      cur = neighbor(b, cur, rel[j]);
      if (cur < 0)
        throw VerificationFailure("cell boundary leaves the ball: " +
                                  shown.str());
    }
    if (cur != cell.base)
      throw VerificationFailure("cell boundary does not close: " + shown.str());
    std::set<int> distinct(cell.cycle.begin(), cell.cycle.end());
    if (distinct.size() != cell.cycle.size())
      throw VerificationFailure("cell boundary revisits a vertex: " +
                                shown.str());
  }
  return b.cells;
}

std::vector<UntetheredComponent> untethered_components(const Ball& b) {
  std::vector<char> tethered(static_cast<size_t>(b.p.n_generators) + 1, 0);
  for (const Word& rel : b.p.relators)
    for (Letter x : rel) tethered[static_cast<size_t>(std::abs(x))] = 1;

  // An edge lies on some relator disc of the full complex exactly when its
  // generator occurs in a relator, so the untethered edges are a label class.
  std::vector<BallEdge> loose;
  for (const BallEdge& e : b.edges)
    if (e.label > 0 && !tethered[static_cast<size_t>(e.label)])
      loose.push_back(e);

  std::vector<int> parent(b.vertices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const BallEdge& e : loose) parent[find(e.from)] = find(e.to);

  std::map<int, UntetheredComponent> by_root;
  for (const BallEdge& e : loose) {
    UntetheredComponent& c = by_root[find(e.from)];
    c.edges.push_back(e);
    c.vertices.push_back(e.from);
    c.vertices.push_back(e.to);
  }
  std::vector<UntetheredComponent> out;
  for (auto& [root, c] : by_root) {
    std::sort(c.vertices.begin(), c.vertices.end());
    c.vertices.erase(std::unique(c.vertices.begin(), c.vertices.end()),
                     c.vertices.end());
    c.id = static_cast<int>(out.size());
    if (c.edges.size() + 1 != c.vertices.size()) {
      std::ostringstream msg;
      msg << "untethered component at vertex " << c.vertices.front()
          << " is not a tree: " << c.edges.size() << " edges over "
          << c.vertices.size() << " vertices";
      throw VerificationFailure(msg.str());
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace smallcancel
