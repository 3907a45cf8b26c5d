#include "smallcancel/structure.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "smallcancel/shells.hpp"

namespace smallcancel {

namespace {

std::array<int, 3> canonical_edge(int u, int v, Letter s) {
  if (s < 0) {
    std::swap(u, v);
    s = -s;
  }
  if (u <= v) return {u, v, s};
  return {v, u, -s};
}

SubComplex cell_support(const Ball& b, const CellTranslate& c) {
  SubComplex s;
  s.vertices = c.cycle;
  std::sort(s.vertices.begin(), s.vertices.end());
  s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()),
                   s.vertices.end());
  const Word& r = b.p.relators[c.relator];
  int len = static_cast<int>(c.cycle.size());
  for (int j = 0; j < len; ++j)
    s.edges.push_back(canonical_edge(c.cycle[j], c.cycle[(j + 1) % len], r[j]));
  std::sort(s.edges.begin(), s.edges.end());
  s.edges.erase(std::unique(s.edges.begin(), s.edges.end()), s.edges.end());
  return s;
}

SubComplex component_support(const UntetheredComponent& c) {
  SubComplex s;
  s.vertices = c.vertices;
  for (const auto& e : c.edges)
    s.edges.push_back(canonical_edge(e.from, e.to, e.label));
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

IntersectionShape classify_shape(const SubComplex& inter,
                                 const std::vector<const SubComplex*>& supports) {
  if (inter.vertices.empty()) return IntersectionShape::Empty;
  bool equal_all = true;
  for (const auto* s : supports)
    if (!(*s == inter)) {
      equal_all = false;
      break;
    }
  if (equal_all) return IntersectionShape::EqualBoundary;
  if (!inter.edges.empty()) {
    if (subcomplex_connected(inter) &&
        inter.edges.size() + 1 == inter.vertices.size())
      return IntersectionShape::Arc;
    return IntersectionShape::Disconnected;
  }
  if (inter.vertices.size() == 1) return IntersectionShape::SingleVertex;
  return IntersectionShape::Disconnected;
}

// participants: sorted, distinct, valid ids
IntersectionRecord make_record(const StructureGraph& g, std::vector<int> vset) {
  IntersectionRecord rec;
  std::vector<const SubComplex*> sup;
  sup.reserve(vset.size());
  for (int v : vset) sup.push_back(&g.vertices[v].support);
  SubComplex inter = *sup[0];
  for (std::size_t i = 1; i < sup.size(); ++i) inter = meet(inter, *sup[i]);
  rec.subcomplex = std::move(inter);
  rec.shape = classify_shape(rec.subcomplex, sup);
  for (int v : vset)
    if (!g.vertices[v].interior) rec.boundary_touching = true;
  rec.participants = std::move(vset);
  return rec;
}

// Disconnected meets of interior vertices contradict the contractibility
// guarantees: for pairs in any verified regime, for larger families only in
// C(6) / C(4)-T(4) (triangular-regime totals are recorded, not asserted).
void enforce_contractible(const StructureGraph& g, const IntersectionRecord& rec) {
  if (rec.boundary_touching) return;
  if (rec.shape != IntersectionShape::Disconnected) return;
  bool strong = g.regime.c_prime_6 || g.regime.c6 || g.regime.c4t4;
  bool pair = rec.participants.size() == 2;
  if (!strong && !(pair && g.regime.any())) return;
  std::ostringstream os;
  os << "meet of structure vertices {";
  for (std::size_t i = 0; i < rec.participants.size(); ++i)
    os << (i ? ", " : "") << rec.participants[i];
  os << "} is disconnected in a verified regime";
  throw VerificationFailure(os.str());
}

void validate_ids(const StructureGraph& g, const std::vector<int>& vset) {
  for (int v : vset)
    if (v < 0 || v >= static_cast<int>(g.vertices.size()))
      throw std::invalid_argument("structure vertex id out of range");
}

}  // namespace

bool operator==(const SubComplex& a, const SubComplex& b) {
  return a.vertices == b.vertices && a.edges == b.edges;
}

SubComplex meet(const SubComplex& a, const SubComplex& b) {
  SubComplex out;
  std::set_intersection(a.vertices.begin(), a.vertices.end(),
                        b.vertices.begin(), b.vertices.end(),
                        std::back_inserter(out.vertices));
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(),
                        b.edges.end(), std::back_inserter(out.edges));
  return out;
}

SubComplex join(const SubComplex& a, const SubComplex& b) {
  SubComplex out;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(),
                 b.vertices.end(), std::back_inserter(out.vertices));
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(),
                 b.edges.end(), std::back_inserter(out.edges));
  return out;
}

bool subcomplex_connected(const SubComplex& s) {
  const auto& vs = s.vertices;
  if (vs.empty()) return false;
  std::vector<int> parent(vs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto idx = [&](int v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) -
                            vs.begin());
  };
  for (const auto& e : s.edges) parent[find(idx(e[0]))] = find(idx(e[1]));
  int root = find(0);
  for (int i = 1; i < static_cast<int>(vs.size()); ++i)
    if (find(i) != root) return false;
  return true;
}

std::string shape_to_string(IntersectionShape s) {
  switch (s) {
    case IntersectionShape::Empty: return "empty";
    case IntersectionShape::EqualBoundary: return "equal-boundary";
    case IntersectionShape::Arc: return "arc";
    case IntersectionShape::SingleVertex: return "single-vertex";
    case IntersectionShape::Disconnected: return "disconnected";
  }
  return "unknown";
}

StructureGraph build_structure_graph(const Ball& b) {
  StructureGraph g;
  g.radius = b.radius;
  g.regime = classify(b.p);
  g.t5 = check_T(b.p, 5).holds;

  auto cells = relator_translates(b);
  auto comps = untethered_components(b);

  using SupportKey = std::pair<std::vector<int>, std::vector<std::array<int, 3>>>;
  std::map<SupportKey, int> by_support;
  for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
    SubComplex s = cell_support(b, cells[i]);
    SupportKey key{s.vertices, s.edges};
    auto it = by_support.find(key);
    if (it != by_support.end()) {
      g.vertices[it->second].members.push_back(i);
      continue;
    }
    StructureVertex v;
    v.is_cell = true;
    v.members = {i};
    v.support = std::move(s);
    by_support.emplace(std::move(key), static_cast<int>(g.vertices.size()));
    g.vertices.push_back(std::move(v));
  }
  for (const auto& c : comps) {
    StructureVertex v;
    v.is_cell = false;
    v.members = {c.id};
    v.support = component_support(c);
    g.vertices.push_back(std::move(v));
  }

  for (auto& v : g.vertices) {
    v.interior = true;
    for (int u : v.support.vertices)
      if (b.distance[u] >= b.radius) {
        v.interior = false;
        break;
      }
  }

  int n = static_cast<int>(g.vertices.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.vertices[i].support == g.vertices[j].support)
        throw VerificationFailure("two structure vertices share a support");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto rec = make_record(g, {i, j});
      if (rec.shape == IntersectionShape::Empty) continue;
      enforce_contractible(g, rec);
      if (g.t5 && !rec.boundary_touching && g.vertices[i].is_cell &&
          g.vertices[j].is_cell && rec.shape == IntersectionShape::Arc &&
          rec.subcomplex.edges.size() != 1) {
        std::ostringstream os;
        os << "T(5) holds but cells " << i << " and " << j << " meet in "
           << rec.subcomplex.edges.size() << " edges";
        throw VerificationFailure(os.str());
      }
      g.edges.push_back(std::move(rec));
    }
  return g;
}

IntersectionRecord intersection(const StructureGraph& g, int v, int w) {
  validate_ids(g, {v, w});
  if (v == w)
    throw std::invalid_argument("intersection needs two distinct vertices");
  auto rec = make_record(g, {std::min(v, w), std::max(v, w)});
  enforce_contractible(g, rec);
  return rec;
}

IntersectionRecord total_intersection(const StructureGraph& g,
                                      std::vector<int> vset) {
  if (vset.empty())
    throw std::invalid_argument("total_intersection needs at least one vertex");
  validate_ids(g, vset);
  std::sort(vset.begin(), vset.end());
  if (std::adjacent_find(vset.begin(), vset.end()) != vset.end())
    throw std::invalid_argument("total_intersection got a repeated vertex");
  auto rec = make_record(g, std::move(vset));
  enforce_contractible(g, rec);
  return rec;
}

HellyReport check_helly(const StructureGraph& g, const std::vector<int>& vset) {
  if (vset.size() < 2)
    throw std::invalid_argument("check_helly needs at least two vertices");
  HellyReport rep;
  rep.total = total_intersection(g, vset);
  rep.boundary_touching = rep.total.boundary_touching;

  bool all_nonempty = true;
  bool all_single_edges = true;
  for (std::size_t i = 0; i < vset.size(); ++i)
    for (std::size_t j = i + 1; j < vset.size(); ++j) {
      auto rec = intersection(g, vset[i], vset[j]);
      if (rec.shape == IntersectionShape::Empty) all_nonempty = false;
      if (rec.shape != IntersectionShape::Arc ||
          rec.subcomplex.edges.size() != 1)
        all_single_edges = false;
    }

  bool strong = g.regime.c_prime_6 || g.regime.c6 || g.regime.c4t4;
  if (strong) {
    rep.applicable = all_nonempty;
    if (!all_nonempty) {
      rep.detail = "a pairwise meet is empty, so the hypothesis is not met";
      return rep;
    }
    rep.holds = rep.total.shape != IntersectionShape::Empty;
    if (rep.holds) {
      rep.detail = "pairwise nonempty meets share a common point";
    } else if (rep.boundary_touching) {
      rep.detail =
          "total meet is empty but a participant touches the ball boundary; "
          "inconclusive";
    } else {
      throw VerificationFailure(
          "pairwise meets are nonempty but the total meet is empty");
    }
    return rep;
  }
  if (g.regime.c3t6) {
    rep.applicable = all_single_edges;
    if (!all_single_edges) {
      rep.detail =
          "pairwise meets are not all single edges; only the weak form is "
          "asserted in C(3)-T(6)";
      return rep;
    }
    rep.holds = rep.total.shape == IntersectionShape::SingleVertex ||
                (rep.total.shape == IntersectionShape::Arc &&
                 rep.total.subcomplex.edges.size() == 1);
    if (rep.holds) {
      rep.detail = "single-edge pairwise meets share a single edge or vertex";
    } else if (rep.boundary_touching) {
      rep.detail =
          "total meet degenerates near the ball boundary; inconclusive";
    } else {
      throw VerificationFailure(
          "pairwise single-edge meets whose total is neither a single edge "
          "nor a single vertex");
    }
    return rep;
  }
  rep.detail = "no verified small cancellation regime";
  return rep;
}

NerveComplex build_nerve(const StructureGraph& g, int dim_cap,
                         bool interior_only) {
  NerveComplex nerve;
  nerve.dim_cap = dim_cap;
  if (dim_cap < 0) return nerve;
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (!interior_only || g.vertices[i].interior) ids.push_back(i);

  std::vector<int> simplex;
  std::function<void(std::size_t, const SubComplex&)> extend =
      [&](std::size_t from, const SubComplex& inter) {
        if (static_cast<int>(simplex.size()) >= dim_cap + 1) return;
        for (std::size_t k = from; k < ids.size(); ++k) {
          const SubComplex& sup = g.vertices[ids[k]].support;
          SubComplex next = simplex.empty() ? sup : meet(inter, sup);
          if (next.vertices.empty()) continue;
          simplex.push_back(ids[k]);
          nerve.simplices.push_back(simplex);
          extend(k + 1, next);
          simplex.pop_back();
        }
      };
  extend(0, SubComplex{});
  return nerve;
}

}  // namespace smallcancel
