#include "smallcancel/ordering.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "smallcancel/shells.hpp"

namespace smallcancel {

bool lusin_sierpinski_less(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t m = std::min(a.size(), b.size());
  for (std::size_t j = 0; j < m; ++j)
    if (a[j] != b[j]) return a[j] < b[j];
  return a.size() > b.size();
}

namespace {

struct TieBreak {
  bool random = false;
  std::mt19937 rng;
};

TieBreak parse_tie_break(const std::string& policy) {
  TieBreak t;
  if (policy == "least") return t;
  const std::string prefix = "random:";
  if (policy.rfind(prefix, 0) == 0) {
    std::string digits = policy.substr(prefix.size());
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      try {
        t.random = true;
        t.rng.seed(static_cast<std::mt19937::result_type>(std::stoul(digits)));
        return t;
      } catch (const std::out_of_range&) {
      }
    }
  }
  throw std::invalid_argument("tie_break must be \"least\" or \"random:<seed>\"");
}

std::vector<int> interior_scope(const StructureGraph& g) {
  std::vector<int> scope;
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    if (g.vertices[i].interior) scope.push_back(i);
  return scope;
}

void require_interior_nerve(const StructureGraph& g, const NerveComplex& nerve) {
  for (const auto& s : nerve.simplices)
    for (int v : s) {
      if (v < 0 || v >= static_cast<int>(g.vertices.size()))
        throw std::invalid_argument("nerve names an unknown structure vertex");
      if (!g.vertices[v].interior)
        throw std::invalid_argument(
            "the ordering needs a nerve restricted to interior vertices");
    }
}

// Labels one connected scope starting from v0: each step takes the least
// fully-labeled simplex that extends to an unlabeled vertex of the scope and
// labels one extension.
void order_scope(const std::set<std::vector<int>>& nerve_set,
                 const std::vector<int>& scope, int v0, TieBreak& tie,
                 int block_id, OrderingMap& om) {
  auto assign = [&](int v, std::vector<int> simplex) {
    om.phi[v] = static_cast<int>(om.by_label.size());
    om.by_label.push_back(v);
    om.block.push_back(block_id);
    om.step_simplex.push_back(std::move(simplex));
  };
  std::size_t assigned = 1;
  assign(v0, {});

  std::vector<int> probe;
  auto extensions = [&](const std::vector<int>& s) {
    std::vector<int> out;
    for (int u : scope) {
      if (om.phi.count(u)) continue;
      probe = s;
      probe.insert(std::lower_bound(probe.begin(), probe.end(), u), u);
      if (nerve_set.count(probe)) out.push_back(u);
    }
    return out;
  };

  while (assigned < scope.size()) {
    bool have_best = false;
    std::vector<int> best_tuple;
    std::vector<int> best_ids;
    for (const auto& s : nerve_set) {
      std::vector<std::pair<int, int>> labeled;
      labeled.reserve(s.size());
      bool full = true;
      for (int v : s) {
        auto it = om.phi.find(v);
        if (it == om.phi.end()) {
          full = false;
          break;
        }
        labeled.emplace_back(it->second, v);
      }
      if (!full) continue;
      if (extensions(s).empty()) continue;
      std::sort(labeled.begin(), labeled.end());
      std::vector<int> tuple;
      tuple.reserve(labeled.size());
      for (const auto& lv : labeled) tuple.push_back(lv.first);
      if (!have_best || lusin_sierpinski_less(tuple, best_tuple)) {
        have_best = true;
        best_tuple = std::move(tuple);
        best_ids.clear();
        for (const auto& lv : labeled) best_ids.push_back(lv.second);
        std::sort(best_ids.begin(), best_ids.end(),
                  [&](int a, int b) { return om.phi.at(a) < om.phi.at(b); });
      }
    }
    if (!have_best)
      throw VerificationFailure(
          "the ordering stalled before labeling every interior vertex");

    std::vector<int> sorted_best = best_ids;
    std::sort(sorted_best.begin(), sorted_best.end());
    auto cands = extensions(sorted_best);
    int u = cands.front();
    if (tie.random) {
      std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
      u = cands[pick(tie.rng)];
    }
    assign(u, best_ids);
    ++assigned;
  }
}

// Structure graph adjacency restricted to a vertex set.
std::map<int, std::vector<int>> restricted_adjacency(const StructureGraph& g,
                                                     const std::set<int>& keep,
                                                     bool edge_meets_only) {
  std::map<int, std::vector<int>> adj;
  for (const auto& rec : g.edges) {
    int a = rec.participants[0];
    int b = rec.participants[1];
    if (!keep.count(a) || !keep.count(b)) continue;
    if (edge_meets_only && rec.subcomplex.edges.empty()) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::map<int, int> bfs_distances(const std::map<int, std::vector<int>>& adj,
                                 int start) {
  std::map<int, int> dist;
  dist[start] = 0;
  std::queue<int> q;
  q.push(start);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (int w : it->second)
      if (!dist.count(w)) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

void validate_map(const StructureGraph& g, const OrderingMap& om) {
  int n = static_cast<int>(om.by_label.size());
  if (n == 0) throw std::invalid_argument("the ordering map is empty");
  if (om.phi.size() != om.by_label.size() ||
      om.block.size() != om.by_label.size())
    throw std::invalid_argument("the ordering map is inconsistent");
  for (int k = 0; k < n; ++k) {
    int v = om.by_label[k];
    if (v < 0 || v >= static_cast<int>(g.vertices.size()))
      throw std::invalid_argument("the ordering map names an unknown vertex");
    auto it = om.phi.find(v);
    if (it == om.phi.end() || it->second != k)
      throw std::invalid_argument("the ordering map is inconsistent");
  }
  if (om.base != om.by_label.front())
    throw std::invalid_argument("the base must carry label 0");
  if (om.block.front() != 0)
    throw std::invalid_argument("block indices must start at 0");
  for (int k = 1; k < n; ++k)
    if (om.block[k] != om.block[k - 1] && om.block[k] != om.block[k - 1] + 1)
      throw std::invalid_argument("block indices must be contiguous");
}

}  // namespace

OrderingMap compute_ordering(const StructureGraph& g, const NerveComplex& nerve,
                             int v0, const std::string& tie_break) {
  TieBreak tie = parse_tie_break(tie_break);
  if (v0 < 0 || v0 >= static_cast<int>(g.vertices.size()))
    throw std::invalid_argument("base vertex id out of range");
  if (!g.vertices[v0].interior || !g.vertices[v0].is_cell)
    throw std::invalid_argument("the base must be an interior cell vertex");
  require_interior_nerve(g, nerve);

  std::vector<int> scope = interior_scope(g);
  std::set<int> scope_set(scope.begin(), scope.end());
  auto adj = restricted_adjacency(g, scope_set, false);
  auto reach = bfs_distances(adj, v0);
  if (reach.size() != scope.size())
    throw VerificationFailure(
        "interior structure vertices split into separate blocks; "
        "compute_component_orderings handles that case");

  OrderingMap om;
  om.base = v0;
  om.tie_break = tie_break;
  om.regime = g.regime;
  std::set<std::vector<int>> nerve_set(nerve.simplices.begin(),
                                       nerve.simplices.end());
  order_scope(nerve_set, scope, v0, tie, 0, om);
  return om;
}

OrderingMap compute_component_orderings(const StructureGraph& g,
                                        const NerveComplex& nerve,
                                        const std::string& tie_break) {
  TieBreak tie = parse_tie_break(tie_break);
  require_interior_nerve(g, nerve);
  std::vector<int> scope = interior_scope(g);
  if (scope.empty())
    throw std::invalid_argument("no interior structure vertices to order");

  // Components of the interior after puncturing the shared vertices: only
  // meets that contain an edge keep two supports in one block.
  std::map<int, int> index;
  for (std::size_t i = 0; i < scope.size(); ++i)
    index[scope[i]] = static_cast<int>(i);
  std::vector<int> parent(scope.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& rec : g.edges) {
    if (rec.subcomplex.edges.empty()) continue;
    auto a = index.find(rec.participants[0]);
    auto b = index.find(rec.participants[1]);
    if (a == index.end() || b == index.end()) continue;
    parent[find(a->second)] = find(b->second);
  }

  std::map<int, std::vector<int>> blocks;
  for (std::size_t i = 0; i < scope.size(); ++i)
    blocks[find(static_cast<int>(i))].push_back(scope[i]);

  // Earliest ball vertex in the block's supports decides the block order.
  std::vector<std::pair<std::pair<int, int>, std::vector<int>>> ordered;
  for (auto& [root, members] : blocks) {
    int min_ball = std::numeric_limits<int>::max();
    for (int v : members)
      if (!g.vertices[v].support.vertices.empty())
        min_ball = std::min(min_ball, g.vertices[v].support.vertices.front());
    ordered.push_back({{min_ball, members.front()}, std::move(members)});
  }
  std::sort(ordered.begin(), ordered.end());

  OrderingMap om;
  om.tie_break = tie_break;
  om.regime = g.regime;
  for (int blk = 0; blk < static_cast<int>(ordered.size()); ++blk) {
    const auto& members = ordered[blk].second;
    std::set<int> member_set(members.begin(), members.end());
    int base = -1;
    for (int v : members)
      if (g.vertices[v].is_cell) {
        base = v;
        break;
      }
    if (base < 0) base = members.front();
    std::set<std::vector<int>> block_nerve;
    for (const auto& s : nerve.simplices) {
      bool inside = true;
      for (int v : s)
        if (!member_set.count(v)) {
          inside = false;
          break;
        }
      if (inside) block_nerve.insert(s);
    }
    order_scope(block_nerve, members, base, tie, blk, om);
    if (blk == 0) om.base = base;
  }
  return om;
}

MonotoneReport verify_distance_monotone(const StructureGraph& g,
                                        const OrderingMap& om) {
  validate_map(g, om);
  MonotoneReport rep;
  constexpr int INF = std::numeric_limits<int>::max();
  int n = static_cast<int>(om.by_label.size());
  int k = 0;
  while (k < n) {
    int blk = om.block[k];
    int end = k;
    while (end < n && om.block[end] == blk) ++end;
    std::set<int> members(om.by_label.begin() + k, om.by_label.begin() + end);
    auto adj = restricted_adjacency(g, members, false);
    auto dist = bfs_distances(adj, om.by_label[k]);
    auto d = [&](int v) {
      auto it = dist.find(v);
      return it == dist.end() ? INF : it->second;
    };
    for (int j = k + 1; j < end; ++j) {
      int prev = om.by_label[j - 1];
      int cur = om.by_label[j];
      if (d(cur) < d(prev)) {
        rep.holds = false;
        rep.witness_less = prev;
        rep.witness_greater = cur;
        std::ostringstream os;
        os << "vertex " << prev << " has label " << j - 1 << " at distance "
           << d(prev) << " but vertex " << cur << " has label " << j
           << " at distance " << d(cur);
        rep.detail = os.str();
        return rep;
      }
    }
    k = end;
  }
  rep.detail = "distance from the base is nondecreasing along the labels";
  return rep;
}

UnionReport verify_union_contractibility(const StructureGraph& g,
                                         const OrderingMap& om, int k_max) {
  validate_map(g, om);
  UnionReport rep;
  int last = static_cast<int>(om.by_label.size()) - 1;
  int kmax = k_max < 0 ? last : std::min(k_max, last);
  auto fail = [](int k, const std::string& why) {
    std::ostringstream os;
    os << "union contractibility fails at label " << k << ": " << why;
    throw VerificationFailure(os.str());
  };
  std::map<int, SubComplex> unions;
  std::map<int, int> cell_count;
  for (int k = 0; k <= kmax; ++k) {
    int v = om.by_label[k];
    int blk = om.block[k];
    const SubComplex& sup = g.vertices[v].support;
    auto it = unions.find(blk);
    if (it == unions.end()) {
      unions.emplace(blk, sup);
      cell_count[blk] = g.vertices[v].is_cell ? 1 : 0;
      continue;
    }
    SubComplex overlap = meet(it->second, sup);
    ++rep.checked;
    if (overlap.vertices.empty()) fail(k, "the support misses the earlier union");
    if (!subcomplex_connected(overlap)) fail(k, "the overlap is disconnected");
    if (overlap.edges.size() + 1 != overlap.vertices.size())
      fail(k, "the overlap contains a cycle");
    it->second = join(it->second, sup);
    cell_count[blk] += g.vertices[v].is_cell ? 1 : 0;
    if (!subcomplex_connected(it->second)) fail(k, "the union is disconnected");
    long long cycles = static_cast<long long>(it->second.edges.size()) -
                       static_cast<long long>(it->second.vertices.size()) + 1;
    if (cycles != cell_count[blk])
      fail(k, "independent cycles do not match the cell count");
  }
  rep.detail = "every prefix overlap is a nonempty tree";
  return rep;
}

}  // namespace smallcancel
