#include "smallcancel/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace smallcancel {

int DiscDiagram::new_vertex() { return n_vertices++; }

std::pair<int, int> DiscDiagram::new_edge(int from, int to, Letter label) {
  int d = static_cast<int>(darts.size());
  darts.push_back({from, label, -1, -1, kOuterFace});
  darts.push_back({to, -label, -1, -1, kOuterFace});
  return {d, d + 1};
}

void DiscDiagram::rotation_insert_after(int at, int d) {
  int nxt = darts[at].ccw_next;
  darts[at].ccw_next = d;
  darts[d].ccw_prev = at;
  darts[d].ccw_next = nxt;
  darts[nxt].ccw_prev = d;
}

void DiscDiagram::rotation_init_singleton(int d) {
  darts[d].ccw_next = d;
  darts[d].ccw_prev = d;
}

DiscDiagram DiscDiagram::single_vertex() {
  DiscDiagram d;
  d.n_vertices = 1;
  return d;
}

DiscDiagram DiscDiagram::single_face(const Word& w, int sym_word) {
  if (w.empty()) throw std::invalid_argument("face word must be nonempty");
  DiscDiagram d;
  int n = static_cast<int>(w.size());
  d.n_vertices = n == 1 ? 1 : n;
  Face f;
  f.sym_word = sym_word;
  for (int i = 0; i < n; ++i) {
    d.darts.push_back({i % d.n_vertices, w[i], -1, -1, 0});
    d.darts.push_back({(i + 1) % d.n_vertices, -w[i], -1, -1, kOuterFace});
    f.ring.push_back(2 * i);
  }
  // Rotation at vertex j: [out_j, in_opp_j] where in_opp_j is the outer
  // side of the previous boundary edge. This makes next_in_face follow
  // the ring and the outer orbit read the inverse word.
  for (int j = 0; j < n; ++j) {
    int out = 2 * j;
    int in_opp = 2 * ((j - 1 + n) % n) + 1;
    d.darts[out].ccw_next = in_opp;
    d.darts[out].ccw_prev = in_opp;
    d.darts[in_opp].ccw_next = out;
    d.darts[in_opp].ccw_prev = out;
  }
  if (n == 1) {
    // A loop: both darts at the lone vertex, rotation cycle [0, 1].
    d.darts[0].ccw_next = 1;
    d.darts[0].ccw_prev = 1;
    d.darts[1].ccw_next = 0;
    d.darts[1].ccw_prev = 0;
  }
  d.faces.push_back(std::move(f));
  return d;
}

std::vector<int> DiscDiagram::outer_darts() const {
  int start = -1;
  for (size_t d = 0; d < darts.size(); ++d)
    if (darts[d].face == kOuterFace) {
      start = static_cast<int>(d);
      break;
    }
  std::vector<int> orbit;
  if (start < 0) return orbit;
  int d = start;
  do {
    orbit.push_back(d);
    d = next_in_face(d);
  } while (d != start);
  return orbit;
}

std::vector<int> DiscDiagram::boundary_darts() const {
  std::vector<int> od = outer_darts();
  std::vector<int> out;
  out.reserve(od.size());
  for (auto it = od.rbegin(); it != od.rend(); ++it) out.push_back(opposite(*it));
  return out;
}

Word DiscDiagram::boundary_word() const {
  Word w;
  for (int d : boundary_darts()) w.push_back(darts[d].label);
  return w;
}

Word DiscDiagram::face_word(int f) const {
  Word w;
  for (int d : faces[f].ring) w.push_back(darts[d].label);
  return w;
}

Word DiscDiagram::face_word_from(int f, int d) const {
  const auto& ring = faces[f].ring;
  auto it = std::find(ring.begin(), ring.end(), d);
  if (it == ring.end()) throw std::invalid_argument("dart not on face");
  Word w;
  size_t k = it - ring.begin(), n = ring.size();
  for (size_t i = 0; i < n; ++i) w.push_back(darts[ring[(k + i) % n]].label);
  return w;
}

std::optional<DiscDiagram> DiscDiagram::attach_face_along_arc(
    const std::vector<int>& outer, int s, int k, const Word& w,
    int sym_word) const {
  int m = static_cast<int>(outer.size());
  int n = static_cast<int>(w.size());
  if (k < 1 || k > n || k > m) return std::nullopt;
  if (k == n && k == m) return std::nullopt;  // would close a sphere
  auto arc = [&](int j) { return outer[(s + j) % m]; };
  for (int j = 0; j < k; ++j)
    if (darts[arc(j)].label != w[j]) return std::nullopt;
  int u = darts[arc(0)].origin;
  int x = target(arc(k - 1));
  if (k == n && u != x) return std::nullopt;

  DiscDiagram d = *this;
  int fid = static_cast<int>(d.faces.size());
  Face f;
  f.sym_word = sym_word;
  for (int j = 0; j < k; ++j) {
    d.darts[arc(j)].face = fid;
    f.ring.push_back(arc(j));
  }
  if (k == n) {
    // Fully glued face over a closed sub-walk at the pinch vertex u == x.
    // Swap the rotation successors so the sub-loop closes off.
    int o_s = arc(0), o_k = outer[(s + k) % m];
    int a = d.darts[o_s].ccw_next;    // opp(o_{s-1})
    int b = d.darts[o_k].ccw_next;    // opp(o_{s+k-1})
    d.darts[o_s].ccw_next = b;
    d.darts[b].ccw_prev = o_s;
    d.darts[o_k].ccw_next = a;
    d.darts[a].ccw_prev = o_k;
  } else {
    // Free path from x back to u through n-k-1 fresh vertices.
    std::vector<int> fwd;
    int prev_v = x;
    for (int t = 1; t <= n - k; ++t) {
      int next_v = (t == n - k) ? u : d.new_vertex();
      auto [g, gp] = d.new_edge(prev_v, next_v, w[k + t - 1]);
      fwd.push_back(g);
      d.darts[g].face = fid;
      f.ring.push_back(g);
      if (t > 1) {
        // Fresh vertex rotation: [g, opp(previous forward dart)].
        int prev_opp = opposite(fwd[t - 2]);
        d.darts[g].ccw_next = prev_opp;
        d.darts[g].ccw_prev = prev_opp;
        d.darts[prev_opp].ccw_next = g;
        d.darts[prev_opp].ccw_prev = g;
      }
      prev_v = next_v;
    }
    // Close the ring at x and u; g_1 before the arc-end outer side, the
    // last opposite right after the arc start.
    int before = opposite(arc(k - 1));
    d.rotation_insert_after(d.darts[before].ccw_prev, fwd.front());
    d.rotation_insert_after(arc(0), opposite(fwd.back()));
  }
  d.faces.push_back(std::move(f));
  return d;
}

DiscDiagram DiscDiagram::attach_face_at_vertex(const std::vector<int>& outer,
                                               int s, const Word& w,
                                               int sym_word) const {
  if (w.empty()) throw std::invalid_argument("face word must be nonempty");
  DiscDiagram d = *this;
  int v = d.darts[outer[s]].origin;
  int n = static_cast<int>(w.size());
  int fid = static_cast<int>(d.faces.size());
  Face f;
  f.sym_word = sym_word;
  std::vector<int> fwd;
  int prev_v = v;
  for (int t = 1; t <= n; ++t) {
    int next_v = (t == n) ? v : d.new_vertex();
    auto [g, gp] = d.new_edge(prev_v, next_v, w[t - 1]);
    fwd.push_back(g);
    d.darts[g].face = fid;
    f.ring.push_back(g);
    if (t > 1) {
      int prev_opp = opposite(fwd[t - 2]);
      d.darts[g].ccw_next = prev_opp;
      d.darts[g].ccw_prev = prev_opp;
      d.darts[prev_opp].ccw_next = g;
      d.darts[prev_opp].ccw_prev = g;
    }
    prev_v = next_v;
  }
  d.rotation_insert_after(outer[s], fwd.front());
  d.rotation_insert_after(fwd.front(), opposite(fwd.back()));
  d.faces.push_back(std::move(f));
  return d;
}

DiscDiagram DiscDiagram::attach_tree_edge(const std::vector<int>& outer, int s,
                                          Letter label) const {
  DiscDiagram d = *this;
  int v = d.darts[outer[s]].origin;
  int u = d.new_vertex();
  auto [g, gp] = d.new_edge(v, u, label);
  d.rotation_insert_after(outer[s], g);
  d.rotation_init_singleton(gp);
  return d;
}

DiscDiagram DiscDiagram::wedge_diagram(int my_dart, const DiscDiagram& other,
                                       int other_dart) const {
  if (other.darts.empty()) return *this;
  if (darts.empty()) return other;
  if (!is_outer(my_dart) || !other.is_outer(other_dart))
    throw std::invalid_argument("wedge corners must be outer darts");
  DiscDiagram d = *this;
  int doff = static_cast<int>(darts.size());
  int foff = static_cast<int>(faces.size());
  int va = darts[my_dart].origin;
  int vb = other.darts[other_dart].origin;
  // Other's base vertex merges into va; its remaining vertices append.
  std::vector<int> vmap(other.n_vertices);
  for (int v = 0; v < other.n_vertices; ++v)
    vmap[v] = v == vb ? va : d.n_vertices + v - (v > vb ? 1 : 0);
  d.n_vertices += other.n_vertices - 1;
  for (const Dart& od : other.darts) {
    Dart nd = od;
    nd.origin = vmap[od.origin];
    nd.ccw_next += doff;
    nd.ccw_prev += doff;
    if (nd.face != kOuterFace) nd.face += foff;
    d.darts.push_back(nd);
  }
  for (const Face& of : other.faces) {
    Face nf = of;
    for (int& r : nf.ring) r += doff;
    d.faces.push_back(std::move(nf));
  }
  // Swap the rotation successors of the two corner darts so the merged
  // outer walk runs through other before continuing here.
  int sb = doff + other_dart;
  int na = d.darts[my_dart].ccw_next;
  int nb = d.darts[sb].ccw_next;
  d.darts[my_dart].ccw_next = nb;
  d.darts[nb].ccw_prev = my_dart;
  d.darts[sb].ccw_next = na;
  d.darts[na].ccw_prev = sb;
  return d;
}

namespace {

// Folds a freely-trivial word into a tree hanging at root_anchor (children
// are inserted ccw right after their anchor, so the outer walk reads the
// word in order). With root_anchor < 0 the first edge starts the rotation.
void grow_tree(DiscDiagram& d, int root_vertex, int root_anchor, const Word& w) {
  struct Open {
    Letter letter;
    int vertex;  // child vertex
    int anchor;  // dart at child pointing back to parent
    int down;    // dart at parent into the child
  };
  std::vector<Open> stack;
  int cur = root_vertex;
  int anchor = root_anchor;
  for (Letter x : w) {
    if (!stack.empty() && stack.back().letter == -x) {
      cur = d.darts[stack.back().down].origin;
      if (stack.size() == 1 && root_anchor < 0)
        root_anchor = stack.back().down;  // standalone root: keep first child
      stack.pop_back();
      anchor = stack.empty() ? root_anchor : stack.back().anchor;
      continue;
    }
    int child = d.new_vertex();
    auto [g, gp] = d.new_edge(cur, child, x);
    if (anchor < 0)
      d.rotation_init_singleton(g);
    else
      d.rotation_insert_after(anchor, g);
    d.rotation_init_singleton(gp);
    stack.push_back({x, child, gp, g});
    cur = child;
    anchor = gp;
  }
  if (!stack.empty())
    throw std::invalid_argument("word does not reduce to the empty word");
}

}  // namespace

DiscDiagram DiscDiagram::tree_from_trivial_word(const Word& w) {
  DiscDiagram d = single_vertex();
  grow_tree(d, 0, -1, w);
  return d;
}

DiscDiagram DiscDiagram::attach_tree_word(const std::vector<int>& outer, int s,
                                          const Word& trivial) const {
  DiscDiagram d = *this;
  grow_tree(d, d.darts[outer[s]].origin, outer[s], trivial);
  return d;
}

bool DiscDiagram::is_valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (darts.size() % 2 != 0) return fail("odd dart count");
  if (darts.empty()) return n_vertices == 1 && faces.empty()
                                ? true
                                : fail("empty diagram must be a single vertex");
  std::vector<bool> seen_vertex(n_vertices, false);
  for (size_t d = 0; d < darts.size(); ++d) {
    const Dart& dd = darts[d];
    if (dd.label == 0) return fail("unlabeled dart");
    if (dd.label != -darts[opposite(d)].label) return fail("opposite labels do not negate");
    if (dd.origin < 0 || dd.origin >= n_vertices) return fail("origin out of range");
    seen_vertex[dd.origin] = true;
    if (dd.ccw_next < 0 || dd.ccw_prev < 0) return fail("unlinked rotation");
    if (darts[dd.ccw_next].ccw_prev != static_cast<int>(d)) return fail("rotation links broken");
    if (darts[dd.ccw_next].origin != dd.origin) return fail("rotation mixes vertices");
  }
  for (int v = 0; v < n_vertices; ++v)
    if (!seen_vertex[v]) return fail("isolated vertex");
  std::vector<int> face_of(darts.size(), kOuterFace);
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& ring = faces[f].ring;
    if (ring.empty()) return fail("empty face ring");
    for (size_t i = 0; i < ring.size(); ++i) {
      int d = ring[i];
      if (darts[d].face != static_cast<int>(f)) return fail("face id mismatch");
      if (face_of[d] != kOuterFace) return fail("dart on two faces");
      face_of[d] = static_cast<int>(f);
      if (next_in_face(d) != ring[(i + 1) % ring.size()])
        return fail("ring does not follow next_in_face");
    }
  }
  for (size_t d = 0; d < darts.size(); ++d)
    if (face_of[d] != darts[d].face) return fail("outer dart assigned to a face");
  // Outer darts must form a single next_in_face orbit.
  std::vector<int> od = outer_darts();
  size_t n_outer = 0;
  for (const Dart& dd : darts)
    if (dd.face == kOuterFace) ++n_outer;
  if (od.size() != n_outer) return fail("outer boundary is not a single walk");
  // Connectivity over darts via opposite and rotation.
  std::vector<bool> vis(darts.size(), false);
  std::vector<int> stack{0};
  vis[0] = true;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {opposite(d), darts[d].ccw_next}) {
      if (!vis[e]) {
        vis[e] = true;
        stack.push_back(e);
      }
    }
  }
  if (std::find(vis.begin(), vis.end(), false) != vis.end())
    return fail("diagram is not connected");
  int euler = n_vertices - n_edges() + area();
  if (euler != 1) return fail("Euler characteristic is not 1");
  return true;
}

int DiscDiagram::degree(int v) const {
  int deg = 0;
  for (const Dart& d : darts)
    if (d.origin == v) ++deg;
  return deg;
}

std::vector<bool> DiscDiagram::boundary_vertex_flags() const {
  std::vector<bool> flags(n_vertices, false);
  if (darts.empty()) {
    if (n_vertices > 0) flags[0] = true;
    return flags;
  }
  for (const Dart& d : darts)
    if (d.face == kOuterFace) flags[d.origin] = true;
  return flags;
}

std::vector<int> DiscDiagram::interior_vertex_valences() const {
  auto flags = boundary_vertex_flags();
  std::vector<int> deg(n_vertices, 0);
  for (const Dart& d : darts) ++deg[d.origin];
  std::vector<int> out;
  for (int v = 0; v < n_vertices; ++v)
    if (!flags[v]) out.push_back(deg[v]);
  return out;
}

std::optional<std::pair<int, int>> DiscDiagram::cancellable_pair() const {
  for (size_t d = 0; d < darts.size(); d += 2) {
    int d2 = opposite(static_cast<int>(d));
    int f = darts[d].face, g = darts[d2].face;
    if (f == kOuterFace || g == kOuterFace) continue;
    Word wf = face_word_from(f, static_cast<int>(d));
    Word wg = face_word_from(g, d2);
    size_t n = wf.size();
    if (wg.size() != n) continue;
    // Mirror images across the shared edge: wg is the reversal of the
    // inverse of wf, rotated to start on the shared edge.
    bool mirror = wg[0] == -wf[0];
    for (size_t j = 1; mirror && j < n; ++j)
      if (wg[j] != -wf[n - j]) mirror = false;
    if (mirror) return std::make_pair(static_cast<int>(d), d2);
  }
  return std::nullopt;
}

DiscDiagram DiscDiagram::cancel_pair(std::pair<int, int> pair) const {
  auto [dF, dG] = pair;
  if (dG != opposite(dF)) throw std::invalid_argument("pair is not an edge");
  int F = darts[dF].face, G = darts[dG].face;
  if (F == kOuterFace || G == kOuterFace || F == G)
    throw std::invalid_argument("pair is not cancellable");
  Word wf = face_word_from(F, dF);
  Word wg = face_word_from(G, dG);
  size_t n = wf.size();
  bool mirror = wg.size() == n && wg[0] == -wf[0];
  for (size_t j = 1; mirror && j < n; ++j)
    if (wg[j] != -wf[n - j]) mirror = false;
  if (!mirror) throw std::invalid_argument("pair is not cancellable");

  // Ring darts of both faces, rotated to start on the shared edge.
  auto rotate_ring = [&](int f, int d) {
    const auto& ring = faces[f].ring;
    size_t k = std::find(ring.begin(), ring.end(), d) - ring.begin();
    std::vector<int> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = ring[(k + i) % n];
    return out;
  };
  std::vector<int> f = rotate_ring(F, dF);
  std::vector<int> g = rotate_ring(G, dG);

  std::vector<int> role(darts.size(), -1);  // ring position, f side even, g odd
  for (size_t j = 0; j < n; ++j) {
    role[f[j]] = 2 * static_cast<int>(j);
    role[g[j]] = 2 * static_cast<int>(j) + 1;
  }
  auto deleted = [&](int d) { return role[d] >= 0; };
  // Edge of f_j is glued to the edge of g_{n-j}, matching side f_j with
  // side opposite(g_{n-j}). A deleted dart maps to the matching side of
  // its glued partner edge; chains arise when faces share further edges.
  auto map_side = [&](int d) {
    int j = role[d] / 2;
    size_t k = (n - static_cast<size_t>(j)) % n;
    return role[d] % 2 == 0 ? opposite(g[k]) : opposite(f[k]);
  };

  // New opposite for surviving darts whose old opposite is deleted.
  std::vector<int> alpha(darts.size());
  for (size_t d = 0; d < darts.size(); ++d) {
    if (deleted(static_cast<int>(d))) {
      alpha[d] = -1;
      continue;
    }
    int y = opposite(static_cast<int>(d));
    size_t guard = 0;
    while (deleted(y)) {
      y = map_side(y);
      if (++guard > darts.size()) throw std::logic_error("cancellation chain does not terminate");
    }
    alpha[d] = y;
  }
  for (size_t d = 0; d < darts.size(); ++d)
    if (alpha[d] >= 0 && alpha[alpha[d]] != static_cast<int>(d))
      throw std::logic_error("cancellation pairing is not symmetric");

  // Vertex identifications: origin(f_j) with origin(g_{(n-j+1) mod n}).
  std::vector<int> uf(n_vertices);
  for (int v = 0; v < n_vertices; ++v) uf[v] = v;
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (size_t j = 0; j < n; ++j) {
    int a = find(darts[f[j]].origin);
    int b = find(darts[g[(n - j + 1) % n]].origin);
    if (a != b) uf[a] = b;
  }

  // Face traversal of the new map: rings of surviving faces plus the old
  // outer walk (all its darts survive and the boundary is preserved).
  std::vector<int> phi(darts.size(), -1);
  for (size_t h = 0; h < faces.size(); ++h) {
    if (static_cast<int>(h) == F || static_cast<int>(h) == G) continue;
    const auto& ring = faces[h].ring;
    for (size_t i = 0; i < ring.size(); ++i) phi[ring[i]] = ring[(i + 1) % ring.size()];
  }
  std::vector<int> od = outer_darts();
  for (size_t i = 0; i < od.size(); ++i) phi[od[i]] = od[(i + 1) % od.size()];

  // Renumber surviving darts so that glued pairs occupy slots (2i, 2i+1),
  // edges ordered by their smaller old dart id.
  std::vector<int> slot(darts.size(), -1);
  int eid = 0;
  for (size_t d = 0; d < darts.size(); ++d) {
    if (deleted(static_cast<int>(d)) || slot[d] >= 0) continue;
    slot[d] = 2 * eid;
    slot[alpha[d]] = 2 * eid + 1;
    ++eid;
  }

  DiscDiagram out;
  if (eid == 0) {
    out = single_vertex();
  } else {
    out.darts.resize(2 * eid);
    std::vector<int> vmap(n_vertices, -1);
    for (size_t d = 0; d < darts.size(); ++d) {
      if (slot[d] < 0) continue;
      int rep = find(darts[d].origin);
      if (vmap[rep] < 0) vmap[rep] = out.n_vertices++;
      out.darts[slot[d]].origin = vmap[rep];
      out.darts[slot[d]].label = darts[d].label;
      out.darts[slot[d]].face = kOuterFace;
    }
    // next_in_face(d) = ccw_prev(opposite(d)), so phi determines the
    // rotation: ccw_next[phi(d)] = alpha(d).
    for (size_t d = 0; d < darts.size(); ++d) {
      if (slot[d] < 0) continue;
      int to = slot[alpha[d]];
      int at = slot[phi[d]];
      out.darts[at].ccw_next = to;
      out.darts[to].ccw_prev = at;
    }
    for (size_t h = 0; h < faces.size(); ++h) {
      if (static_cast<int>(h) == F || static_cast<int>(h) == G) continue;
      Face nf;
      nf.sym_word = faces[h].sym_word;
      for (int d : faces[h].ring) {
        nf.ring.push_back(slot[d]);
        out.darts[slot[d]].face = static_cast<int>(out.faces.size());
      }
      out.faces.push_back(std::move(nf));
    }
  }

  std::string why;
  if (!out.is_valid(&why)) throw std::logic_error("cancellation produced an invalid diagram: " + why);
  if (out.area() != area() - 2) throw std::logic_error("cancellation did not drop area by 2");
  Word before = boundary_word(), after = out.boundary_word();
  bool same = before.size() == after.size();
  if (same && !before.empty()) {
    bool rot = false;
    for (size_t s = 0; s < before.size() && !rot; ++s)
      if (cyclic_shift(after, static_cast<int>(s)) == before) rot = true;
    same = rot;
  }
  if (!same) throw std::logic_error("cancellation changed the boundary word");
  return out;
}

DiscDiagram DiscDiagram::reduce() const {
  DiscDiagram d = *this;
  while (auto p = d.cancellable_pair()) d = d.cancel_pair(*p);
  return d;
}

std::vector<int> DiscDiagram::spur_vertices() const {
  std::vector<int> deg(n_vertices, 0);
  for (const Dart& d : darts) ++deg[d.origin];
  std::vector<int> out;
  for (int v = 0; v < n_vertices; ++v)
    if (deg[v] == 1) out.push_back(v);
  return out;
}

std::vector<std::vector<int>> DiscDiagram::exposed_runs(int f) const {
  const auto& ring = faces[f].ring;
  size_t n = ring.size();
  auto exposed = [&](size_t i) { return is_outer(opposite(ring[i])); };
  std::vector<std::vector<int>> runs;
  size_t first_covered = n;
  for (size_t i = 0; i < n; ++i)
    if (!exposed(i)) {
      first_covered = i;
      break;
    }
  if (first_covered == n) {
    runs.push_back(ring);  // fully exposed face
    return runs;
  }
  std::vector<int> cur;
  for (size_t k = 1; k <= n; ++k) {
    size_t i = (first_covered + k) % n;
    if (exposed(i)) {
      cur.push_back(ring[i]);
    } else if (!cur.empty()) {
      runs.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) runs.push_back(std::move(cur));
  return runs;
}

int DiscDiagram::interior_neighbor_runs(int f) const {
  const auto& ring = faces[f].ring;
  size_t n = ring.size();
  auto interior = [&](size_t i) { return !is_outer(opposite(ring[i])); };
  auto neighbor = [&](size_t i) { return darts[opposite(ring[i])].face; };
  size_t anchor = n;
  for (size_t i = 0; i < n; ++i)
    if (!interior(i)) {
      anchor = i;
      break;
    }
  int runs = 0;
  if (anchor == n) {
    // Fully interior face: count neighbor changes cyclically.
    for (size_t i = 0; i < n; ++i)
      if (neighbor(i) != neighbor((i + n - 1) % n)) ++runs;
    return runs == 0 ? 1 : runs;
  }
  bool in_run = false;
  for (size_t k = 1; k <= n; ++k) {
    size_t i = (anchor + k) % n;
    if (!interior(i)) {
      in_run = false;
    } else if (!in_run || neighbor(i) != neighbor((i + n - 1) % n)) {
      ++runs;
      in_run = true;
    }
  }
  return runs;
}

std::vector<Rational> DiscDiagram::vertex_charges() const {
  std::vector<Rational> charge(n_vertices, Rational(1));
  for (const Dart& d : darts) charge[d.origin] = charge[d.origin] - Rational(1, 2);
  for (const Face& f : faces) {
    auto p = static_cast<std::int64_t>(f.ring.size());
    for (int d : f.ring)
      charge[darts[d].origin] = charge[darts[d].origin] + Rational(1, p);
  }
  return charge;
}

std::vector<std::vector<int>> AnnularDiagram::outer_walks() const {
  std::vector<bool> seen(darts.size(), false);
  std::vector<std::vector<int>> walks;
  for (size_t d = 0; d < darts.size(); ++d) {
    if (seen[d] || darts[d].face != kOuterFace) continue;
    std::vector<int> orbit;
    int cur = static_cast<int>(d);
    do {
      orbit.push_back(cur);
      seen[cur] = true;
      cur = next_in_face(cur);
    } while (cur != static_cast<int>(d));
    walks.push_back(std::move(orbit));
  }
  return walks;
}

Word AnnularDiagram::boundary_word(int side) const {
  auto walks = outer_walks();
  Word w;
  const auto& orbit = walks.at(static_cast<size_t>(side));
  for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
    w.push_back(darts[opposite(*it)].label);
  return w;
}

bool AnnularDiagram::is_valid(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (darts.empty() || darts.size() % 2 != 0) return fail("bad dart count");
  for (size_t d = 0; d < darts.size(); ++d) {
    const auto& dd = darts[d];
    if (dd.label == 0) return fail("unlabeled dart");
    if (dd.label != -darts[opposite(static_cast<int>(d))].label)
      return fail("opposite labels do not negate");
    if (dd.origin < 0 || dd.origin >= n_vertices) return fail("origin out of range");
    if (dd.ccw_next < 0 || dd.ccw_prev < 0) return fail("unlinked rotation");
    if (darts[dd.ccw_next].ccw_prev != static_cast<int>(d)) return fail("rotation links broken");
    if (darts[dd.ccw_next].origin != dd.origin) return fail("rotation mixes vertices");
  }
  std::vector<int> face_of(darts.size(), kOuterFace);
  for (size_t f = 0; f < faces.size(); ++f) {
    const auto& ring = faces[f].ring;
    if (ring.empty()) return fail("empty face ring");
    for (size_t i = 0; i < ring.size(); ++i) {
      int d = ring[i];
      if (darts[d].face != static_cast<int>(f)) return fail("face id mismatch");
      if (face_of[d] != kOuterFace) return fail("dart on two faces");
      face_of[d] = static_cast<int>(f);
      if (next_in_face(d) != ring[(i + 1) % ring.size()])
        return fail("ring does not follow next_in_face");
    }
  }
  for (size_t d = 0; d < darts.size(); ++d)
    if (face_of[d] != darts[d].face) return fail("outer dart assigned to a face");
  std::vector<bool> vis(darts.size(), false);
  std::vector<int> stack{0};
  vis[0] = true;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int e : {opposite(d), darts[d].ccw_next}) {
      if (!vis[e]) {
        vis[e] = true;
        stack.push_back(e);
      }
    }
  }
  if (std::find(vis.begin(), vis.end(), false) != vis.end())
    return fail("diagram is not connected");
  if (outer_walks().size() != 2) return fail("annulus must have exactly two boundary walks");
  if (n_vertices - n_edges() + area() != 0)
    return fail("Euler characteristic is not 0");
  return true;
}

AnnularDiagram AnnularDiagram::loop(Letter x) {
  AnnularDiagram a;
  a.n_vertices = 1;
  a.darts.push_back({0, x, 1, 1, kOuterFace});
  a.darts.push_back({0, -x, 0, 0, kOuterFace});
  return a;
}

std::vector<int> DiscDiagram::canonical_encoding() const {
  if (darts.empty()) return {0};
  std::vector<int> best;
  std::vector<int> id(darts.size());
  std::vector<int> order;
  order.reserve(darts.size());
  for (int start : outer_darts()) {
    std::fill(id.begin(), id.end(), -1);
    order.clear();
    id[start] = 0;
    order.push_back(start);
    for (size_t q = 0; q < order.size(); ++q) {
      int d = order[q];
      for (int e : {opposite(d), darts[d].ccw_next}) {
        if (id[e] < 0) {
          id[e] = static_cast<int>(order.size());
          order.push_back(e);
        }
      }
    }
    std::vector<int> code;
    code.reserve(3 * darts.size());
    for (int d : order) {
      code.push_back(letter_rank(darts[d].label));
      code.push_back(id[opposite(d)]);
      code.push_back(id[darts[d].ccw_next]);
    }
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace smallcancel
