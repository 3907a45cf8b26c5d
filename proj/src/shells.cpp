#include "smallcancel/shells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smallcancel {

std::string regime_name(Regime r) {
  switch (r) {
    case Regime::C6:
      return "C6";
    case Regime::C4T4:
      return "C4T4";
    case Regime::C3T6:
      return "C3T6";
  }
  return "?";
}

namespace {

// Fully exposed ring: a degenerate shell iff at most one ring vertex has
// degree > 2 (the attachment point, if any). The outerpath starts there.
std::optional<ShellRecord> degenerate_shell(const DiscDiagram& d, int f) {
  const auto& ring = d.faces[f].ring;
  size_t n = ring.size();
  int high = 0;
  size_t anchor = 0;
  for (size_t i = 0; i < n; ++i) {
    if (d.degree(d.darts[ring[i]].origin) > 2) {
      ++high;
      anchor = i;
    }
  }
  if (high > 1) return std::nullopt;
  ShellRecord rec;
  rec.face = f;
  rec.degenerate = true;
  for (size_t i = 0; i < n; ++i) rec.outerpath.push_back(ring[(anchor + i) % n]);
  return rec;
}

std::optional<ShellRecord> shell_at(const DiscDiagram& d, const PieceIndex& idx,
                                    int f, int max_inner_pieces) {
  auto runs = d.exposed_runs(f);
  if (runs.empty()) return std::nullopt;  // no edge on the boundary
  const auto& ring = d.faces[f].ring;
  if (runs.size() == 1 && runs[0].size() == ring.size())
    return degenerate_shell(d, f);
  if (runs.size() != 1) return std::nullopt;
  const auto& q = runs[0];
  // The outerpath is an arc: its internal vertices carry nothing else.
  for (size_t i = 1; i < q.size(); ++i)
    if (d.degree(d.darts[q[i]].origin) != 2) return std::nullopt;
  ShellRecord rec;
  rec.face = f;
  rec.outerpath = q;
  size_t n = ring.size();
  size_t last = std::find(ring.begin(), ring.end(), q.back()) - ring.begin();
  for (size_t i = 1; i < n; ++i) {
    int dart = ring[(last + i) % n];
    if (dart == q.front()) break;
    rec.innerpath.push_back(dart);
    rec.inner_word.push_back(d.darts[dart].label);
  }
  auto dec = min_piece_decomposition(idx, rec.inner_word);
  if (!dec || dec->count > max_inner_pieces) return std::nullopt;
  rec.inner_segments = dec->segments;
  rec.inner_piece_count = dec->count;
  return rec;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct ElementClosure {
  std::vector<char> vmask, emask;
  int face = -1;
};

ElementClosure closure_of(const DiscDiagram& d, const LadderElement& el) {
  ElementClosure c;
  c.vmask.assign(d.n_vertices, 0);
  c.emask.assign(d.n_edges(), 0);
  if (el.is_face) {
    c.face = el.id;
    for (int dart : d.faces[el.id].ring) {
      c.emask[dart / 2] = 1;
      c.vmask[d.darts[dart].origin] = 1;
    }
  } else {
    c.emask[el.id / 2] = 1;
    c.vmask[d.darts[el.id].origin] = 1;
    c.vmask[d.darts[el.id ^ 1].origin] = 1;
  }
  return c;
}

// Components of the diagram minus the closed element: union-find over the
// surviving vertices, open edges and open faces. A surviving edge meets
// its surviving endpoints; a surviving face meets its surviving ring
// edges and ring vertices.
int components_without(const DiscDiagram& d, const ElementClosure& c) {
  int V = d.n_vertices, E = d.n_edges(), F = d.area();
  UnionFind uf(V + E + F);
  auto vid = [](int v) { return v; };
  auto eid = [V](int e) { return V + e; };
  auto fid = [V, E](int f) { return V + E + f; };
  for (int e = 0; e < E; ++e) {
    if (c.emask[e]) continue;
    for (int dart : {2 * e, 2 * e + 1}) {
      int v = d.darts[dart].origin;
      if (!c.vmask[v]) uf.unite(eid(e), vid(v));
    }
  }
  for (int f = 0; f < F; ++f) {
    if (f == c.face) continue;
    for (int dart : d.faces[f].ring) {
      if (!c.emask[dart / 2]) uf.unite(fid(f), eid(dart / 2));
      int v = d.darts[dart].origin;
      if (!c.vmask[v]) uf.unite(fid(f), vid(v));
    }
  }
  std::vector<char> seen(V + E + F, 0);
  int components = 0;
  auto visit = [&](int item) {
    int root = uf.find(item);
    if (!seen[root]) {
      seen[root] = 1;
      ++components;
    }
  };
  for (int v = 0; v < V; ++v)
    if (!c.vmask[v]) visit(vid(v));
  for (int e = 0; e < E; ++e)
    if (!c.emask[e]) visit(eid(e));
  for (int f = 0; f < F; ++f)
    if (f != c.face) visit(fid(f));
  return components;
}

bool closures_touch(const ElementClosure& a, const ElementClosure& b) {
  for (size_t v = 0; v < a.vmask.size(); ++v)
    if (a.vmask[v] && b.vmask[v]) return true;
  return false;
}

}  // namespace

std::vector<ShellRecord> shells(const DiscDiagram& d, const PieceIndex& idx,
                                int max_inner_pieces) {
  std::vector<ShellRecord> out;
  for (int f = 0; f < d.area(); ++f)
    if (auto rec = shell_at(d, idx, f, max_inner_pieces))
      out.push_back(std::move(*rec));
  return out;
}

std::optional<std::vector<LadderElement>> ladder_decomposition(
    const DiscDiagram& d) {
  std::vector<LadderElement> elems;
  for (int f = 0; f < d.area(); ++f) elems.push_back({true, f});
  for (int e = 0; e < d.n_edges(); ++e)
    if (d.is_outer(2 * e) && d.is_outer(2 * e + 1))
      elems.push_back({false, 2 * e});
  if (elems.size() <= 1) return elems;  // vertex, lone edge or lone cell

  std::vector<ElementClosure> closures;
  closures.reserve(elems.size());
  for (const auto& el : elems) closures.push_back(closure_of(d, el));
  std::vector<int> counts;
  counts.reserve(elems.size());
  int ends = 0;
  for (const auto& c : closures) {
    int k = components_without(d, c);
    if (k != 1 && k != 2) return std::nullopt;
    if (k == 1) ++ends;
    counts.push_back(k);
  }
  if (ends != 2) return std::nullopt;

  // Emit in path order: walk from one end, preferring middle elements.
  size_t start = 0;
  while (counts[start] != 1) ++start;
  std::vector<char> used(elems.size(), 0);
  std::vector<LadderElement> order;
  size_t cur = start;
  used[cur] = 1;
  order.push_back(elems[cur]);
  while (order.size() < elems.size()) {
    size_t next = elems.size();
    for (int pass = 0; pass < 2 && next == elems.size(); ++pass)
      for (size_t j = 0; j < elems.size(); ++j)
        if (!used[j] && counts[j] == (pass == 0 ? 2 : 1) &&
            closures_touch(closures[cur], closures[j])) {
          next = j;
          break;
        }
    if (next == elems.size()) {
      for (size_t j = 0; j < elems.size(); ++j)
        if (!used[j]) {
          next = j;
          break;
        }
    }
    used[next] = 1;
    order.push_back(elems[next]);
    cur = next;
  }
  return order;
}

bool is_ladder(const DiscDiagram& d) {
  return ladder_decomposition(d).has_value();
}

GreendlingerEvidence classify_greendlinger(const DiscDiagram& d,
                                           const PieceIndex& idx,
                                           Regime regime) {
  if (!d.is_reduced())
    throw std::invalid_argument("diagram is not reduced");
  GreendlingerEvidence ev;
  if (d.area() == 1 && d.n_edges() == (int)d.faces[0].ring.size()) {
    ev.kind = GreendlingerKind::SingleCell;
    return ev;
  }
  if (auto lad = ladder_decomposition(d)) {
    ev.kind = GreendlingerKind::Ladder;
    ev.ladder = std::move(*lad);
    return ev;
  }
  ev.kind = GreendlingerKind::ManyShellsOrSpurs;
  ev.spurs = d.spur_vertices();
  int cap = regime == Regime::C6 ? 3 : 2;
  auto sh = shells(d, idx, cap);
  if (regime == Regime::C3T6) {
    std::vector<ShellRecord> twos;
    for (auto& rec : sh) {
      if (rec.inner_piece_count <= 1)
        ev.shells.push_back(rec);
      else
        twos.push_back(rec);
    }
    auto on_boundary = d.boundary_vertex_flags();
    for (size_t i = 0; i < twos.size(); ++i)
      for (size_t j = i + 1; j < twos.size(); ++j) {
        bool shared = false;
        for (int dart : d.faces[twos[i].face].ring) {
          if (d.darts[DiscDiagram::opposite(dart)].face != twos[j].face)
            continue;
          if (on_boundary[d.darts[dart].origin] ||
              on_boundary[d.target(dart)]) {
            shared = true;
            break;
          }
        }
        if (shared) ev.shell_pairs.push_back({twos[i].face, twos[j].face});
      }
  } else {
    ev.shells = std::move(sh);
  }
  ev.count = (int)(ev.shells.size() + ev.spurs.size() + ev.shell_pairs.size());
  if (ev.count >= 3) return ev;
  std::ostringstream msg;
  msg << "Greendlinger trichotomy (" << regime_name(regime)
      << ") fails: area " << d.area() << ", not a single cell or ladder, "
      << ev.shells.size() << " shells, " << ev.spurs.size() << " spurs";
  if (regime == Regime::C3T6)
    msg << ", " << ev.shell_pairs.size() << " 2-shell pairs";
  throw VerificationFailure(msg.str());
}

std::optional<ShellRecord> corners_witness_c4t4(const DiscDiagram& d,
                                                const PieceIndex& idx) {
  if (d.has_spur()) throw std::invalid_argument("diagram has spurs");
  auto sh = shells(d, idx, 2);
  for (const auto& rec : sh)
    if (rec.degenerate || rec.inner_piece_count == 1) return rec;
  auto on_boundary = d.boundary_vertex_flags();
  for (const auto& rec : sh) {
    for (int dart : d.faces[rec.face].ring) {
      int v = d.darts[dart].origin;
      if (on_boundary[v] && d.degree(v) == 3) return rec;
    }
  }
  return std::nullopt;
}

std::optional<ShellRecord> corners_witness_c3t6(const DiscDiagram& d,
                                                const PieceIndex& idx) {
  if (d.has_spur()) throw std::invalid_argument("diagram has spurs");
  auto sh = shells(d, idx, 2);
  for (const auto& rec : sh) {
    if (!rec.degenerate && rec.inner_piece_count != 1) continue;
    int high = 0;
    for (int dart : d.faces[rec.face].ring)
      if (d.degree(d.darts[dart].origin) > 6) ++high;
    if (high <= 1) return rec;
  }
  auto on_boundary = d.boundary_vertex_flags();
  for (const auto& rec : sh) {
    if (rec.inner_piece_count != 2) continue;
    bool ok = true;
    for (int dart : d.faces[rec.face].ring) {
      int v = d.darts[dart].origin;
      if (on_boundary[v] && d.degree(v) > 5) {
        ok = false;
        break;
      }
    }
    if (ok) return rec;
  }
  return std::nullopt;
}

std::map<int, Rational> euler_charge(const DiscDiagram& d,
                                     const PieceIndex& idx, Regime regime) {
  if (regime != Regime::C4T4 && regime != Regime::C3T6)
    throw std::invalid_argument(
        "degree-2 normalization is defined for C4T4 and C3T6 only");
  if (d.has_spur()) throw std::invalid_argument("diagram has spurs");

  std::vector<char> suppressed(d.n_vertices, 0);
  if (d.area() >= 2) {
    auto on_boundary = d.boundary_vertex_flags();
    for (int v = 0; v < d.n_vertices; ++v)
      if (d.degree(v) == 2 && (regime == Regime::C4T4 || on_boundary[v]))
        suppressed[v] = 1;
    for (const auto& rec : shells(d, idx, 2)) {
      if (rec.degenerate) continue;
      int keep = 0;
      if (regime == Regime::C4T4)
        keep = rec.inner_piece_count == 1 ? 2 : 1;
      else if (rec.inner_piece_count == 1)
        keep = 1;
      for (size_t i = 1; i < rec.outerpath.size() && keep > 0; ++i) {
        int v = d.darts[rec.outerpath[i]].origin;
        if (suppressed[v]) {
          suppressed[v] = 0;
          --keep;
        }
      }
    }
  }

  std::vector<int> reduced_ring(d.area());
  for (int f = 0; f < d.area(); ++f) {
    int p = 0;
    for (int dart : d.faces[f].ring)
      if (!suppressed[d.darts[dart].origin]) ++p;
    if (p == 0)
      throw std::logic_error("face lost every corner to the normalization");
    reduced_ring[f] = p;
  }

  std::map<int, Rational> out;
  for (int v = 0; v < d.n_vertices; ++v)
    if (!suppressed[v]) out[v] = Rational(1) - Rational(d.degree(v), 2);
  for (int f = 0; f < d.area(); ++f)
    for (int dart : d.faces[f].ring) {
      int v = d.darts[dart].origin;
      if (!suppressed[v]) out[v] = out[v] + Rational(1, reduced_ring[f]);
    }
  return out;
}

}  // namespace smallcancel
