#include "smallcancel/conditions.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

namespace smallcancel {

namespace {

// Longest common prefix of w[from..] with u.
int lcp_from(const Word& w, size_t from, const Word& u) {
  size_t n = std::min(w.size() - from, u.size());
  size_t i = 0;
  while (i < n && w[from + i] == u[i]) ++i;
  return static_cast<int>(i);
}

}  // namespace

bool PieceIndex::is_piece(const Word& p) const {
  if (p.empty()) return false;
  int count = 0;
  for (const Word& u : sym.words) {
    if (u.size() >= p.size() && std::equal(p.begin(), p.end(), u.begin()))
      if (++count >= 2) return true;
  }
  return false;
}

int PieceIndex::longest_piece_prefix(const Word& w, size_t from) const {
  // A prefix of length k is a piece iff at least two symmetrized words share
  // it, i.e. k is at most the second-largest lcp against the set.
  int best = 0, second = 0;
  for (const Word& u : sym.words) {
    int l = lcp_from(w, from, u);
    if (l > best) {
      second = best;
      best = l;
    } else if (l > second) {
      second = l;
    }
  }
  return second;
}

PieceIndex build_piece_index(const Presentation& p) {
  PieceIndex idx;
  idx.sym = symmetrize(p);
  size_t n = idx.sym.words.size();
  idx.max_prefix_piece.assign(n, 0);
  for (size_t i = 0; i < n; ++i) {
    int best = 0;
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      best = std::max(best,
                      static_cast<int>(common_prefix_len(idx.sym.words[i], idx.sym.words[j])));
    }
    idx.max_prefix_piece[i] = best;
  }
  // Maximal pieces: pairwise lcp words, minus proper prefixes of other ones.
  std::vector<Word> cands;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      size_t l = common_prefix_len(idx.sym.words[i], idx.sym.words[j]);
      if (l > 0)
        cands.emplace_back(idx.sym.words[i].begin(), idx.sym.words[i].begin() + l);
    }
  std::sort(cands.begin(), cands.end(), shortlex_less);
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (const Word& c : cands) {
    bool proper_prefix = false;
    for (const Word& d : cands)
      if (d.size() > c.size() && std::equal(c.begin(), c.end(), d.begin())) {
        proper_prefix = true;
        break;
      }
    if (!proper_prefix) idx.maximal_pieces.push_back(c);
  }
  return idx;
}

std::optional<PieceDecomposition> min_piece_decomposition(const PieceIndex& idx,
                                                          const Word& w) {
  if (w.empty()) return PieceDecomposition{0, {}};
  const int INF = std::numeric_limits<int>::max() / 2;
  int n = static_cast<int>(w.size());
  std::vector<int> dp(n + 1, INF), jump(n + 1, -1);
  dp[n] = 0;
  for (int i = n - 1; i >= 0; --i) {
    int maxlen = idx.longest_piece_prefix(w, i);
    for (int l = 1; l <= maxlen && i + l <= n; ++l) {
      if (dp[i + l] + 1 < dp[i]) {
        dp[i] = dp[i + l] + 1;
        jump[i] = i + l;
      }
    }
  }
  if (dp[0] >= INF) return std::nullopt;
  PieceDecomposition dec;
  dec.count = dp[0];
  for (int i = 0; i != n; i = jump[i]) dec.segments.emplace_back(i, jump[i] - i);
  return dec;
}

ConditionVerdict check_C(const Presentation& p, int n) {
  return check_C(build_piece_index(p), n);
}

ConditionVerdict check_C(const PieceIndex& idx, int n) {
  // The boundary word of a cell can be read from any starting point, so the
  // condition quantifies over every rotation, i.e. every symmetrized word.
  ConditionVerdict v;
  v.holds = true;
  for (const Word& w : idx.sym.words) {
    auto dec = min_piece_decomposition(idx, w);
    if (!dec) continue;  // not coverable by pieces at all: vacuously fine
    if (dec->count < n) {
      v.holds = false;
      v.witness_word = w;
      v.witness_segments = dec->segments;
      v.note = word_to_string(w) + " is a concatenation of " +
               std::to_string(dec->count) + " pieces";
      return v;
    }
  }
  return v;
}

ConditionVerdict check_C_prime(const Presentation& p, int n) {
  return check_C_prime(build_piece_index(p), n);
}

ConditionVerdict check_C_prime(const PieceIndex& idx, int n) {
  ConditionVerdict v;
  v.holds = true;
  for (size_t i = 0; i < idx.sym.words.size(); ++i) {
    const Word& w = idx.sym.words[i];
    // Occurrences of pieces in w are prefixes of rotations of w, and every
    // rotation is itself in the set, so the per-word prefix bound suffices.
    int l = idx.max_prefix_piece[i];
    if (l > 0 && static_cast<size_t>(l) * n >= w.size()) {
      v.holds = false;
      v.witness_word = w;
      v.witness_piece = Word(w.begin(), w.begin() + l);
      v.note = "piece " + word_to_string(v.witness_piece) + " has length " +
               std::to_string(l) + " >= |" + word_to_string(w) + "|/" +
               std::to_string(n);
      return v;
    }
  }
  return v;
}

LinkGraph build_link_graph(const SymmetrizedSet& sym) {
  LinkGraph g;
  std::map<Letter, bool, decltype(&letter_less)> seen(&letter_less);
  for (const Word& w : sym.words) {
    seen[w.front()] = true;
    seen[inverse(w.back())] = true;
  }
  for (auto& [x, _] : seen) g.vertices.push_back(x);
  for (size_t i = 0; i < sym.words.size(); ++i) {
    const Word& w = sym.words[i];
    int j = sym.index_of(inverse(w));
    assert(j >= 0);  // the set is closed under inversion
    if (static_cast<int>(i) < j)
      g.edges.push_back({w.front(), inverse(w.back()), static_cast<int>(i)});
  }
  return g;
}

std::optional<std::vector<Letter>> find_reduced_closed_walk(const LinkGraph& g, int h) {
  if (h < 1) return std::nullopt;
  std::map<Letter, std::vector<std::pair<int, Letter>>> adj;  // vertex -> (edge, other end)
  for (size_t e = 0; e < g.edges.size(); ++e) {
    adj[g.edges[e].a].emplace_back(static_cast<int>(e), g.edges[e].b);
    adj[g.edges[e].b].emplace_back(static_cast<int>(e), g.edges[e].a);
  }
  std::vector<Letter> walk;
  std::vector<int> used_edges;
  Letter start = 0;
  bool found = false;

  auto dfs = [&](auto&& self, Letter at, int depth) -> void {
    if (found) return;
    if (depth == h) {
      if (at == start && used_edges.front() != used_edges.back()) found = true;
      return;
    }
    for (auto [e, to] : adj[at]) {
      if (!used_edges.empty() && used_edges.back() == e) continue;
      used_edges.push_back(e);
      walk.push_back(to);
      self(self, to, depth + 1);
      if (found) return;
      walk.pop_back();
      used_edges.pop_back();
    }
  };

  for (Letter v : g.vertices) {
    start = v;
    walk.assign(1, v);
    used_edges.clear();
    dfs(dfs, v, 0);
    if (found) {
      walk.pop_back();  // drop the repeated start vertex
      return walk;
    }
  }
  return std::nullopt;
}

ConditionVerdict check_T(const Presentation& p, int q) {
  return check_T(symmetrize(p), q);
}

ConditionVerdict check_T(const SymmetrizedSet& sym, int q) {
  ConditionVerdict v;
  v.holds = true;
  if (sym.words.empty()) return v;
  LinkGraph g = build_link_graph(sym);
  for (int h = 3; h < q; ++h) {
    if (auto walk = find_reduced_closed_walk(g, h)) {
      v.holds = false;
      v.witness_walk = *walk;
      v.note = "interior vertex of valence " + std::to_string(h) +
               " is realizable";
      return v;
    }
  }
  return v;
}

RegimeSet classify(const Presentation& p) {
  PieceIndex idx = build_piece_index(p);
  RegimeSet r;
  r.c_prime_6 = check_C_prime(idx, 6).holds;
  r.c6 = check_C(idx, 6).holds;
  r.c4t4 = check_C(idx, 4).holds && check_T(idx.sym, 4).holds;
  r.c3t6 = check_C(idx, 3).holds && check_T(idx.sym, 6).holds;
  return r;
}

std::string regime_set_to_string(const RegimeSet& r) {
  std::string s;
  auto add = [&](const char* name) {
    if (!s.empty()) s += ",";
    s += name;
  };
  if (r.c_prime_6) add("C'(1/6)");
  if (r.c6) add("C(6)");
  if (r.c4t4) add("C(4)-T(4)");
  if (r.c3t6) add("C(3)-T(6)");
  if (s.empty()) s = "none";
  return s;
}

}  // namespace smallcancel
