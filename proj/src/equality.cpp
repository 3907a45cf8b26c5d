#include "smallcancel/equality.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "smallcancel/enumerate.hpp"

namespace smallcancel {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_identity_perm(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

// Left-to-right point action: reading letter x moves p to images[|x|-1][p].
Perm eval_word_perm(const std::vector<Perm>& images, const Word& w) {
  int n = images.empty() ? 1 : static_cast<int>(images[0].size());
  Perm acc = identity_perm(n);
  for (Letter x : w) {
    const Perm& base = images[static_cast<size_t>(std::abs(x)) - 1];
    if (x > 0) {
      for (int i = 0; i < n; ++i) acc[i] = base[acc[i]];
    } else {
      Perm inv(n);
      for (int i = 0; i < n; ++i) inv[base[i]] = i;
      for (int i = 0; i < n; ++i) acc[i] = inv[acc[i]];
    }
  }
  return acc;
}

std::string perm_to_string(const Perm& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + ")";
}

void check_letters(const Word& w, int n_generators) {
  for (Letter x : w)
    if (x == 0 || std::abs(x) > n_generators)
      throw std::invalid_argument("letter outside the generator range");
}

// Repeatedly replaces a cyclic subword that covers more than half of some
// symmetrized relator by the inverse of the complement.  Each replacement
// multiplies by a conjugate of a relator, so reaching the empty word proves
// the input is a relation.  A stuck nonempty residue disproves it exactly
// when the presentation satisfies C'(1/6): a nontrivial reduced diagram
// would expose a boundary run longer than half of its relator.
struct Shortening {
  bool trivial = false;
  int steps = 0;
  Word residue;
};

Shortening shorten(const PieceIndex& idx, const Word& w) {
  Shortening s;
  Word v = cyclic_reduce(w).core;
  while (!v.empty()) {
    bool advanced = false;
    size_t m = v.size();
    for (size_t i = 0; i < m && !advanced; ++i) {
      for (const Word& r : idx.sym.words) {
        size_t l = 0;
        while (l < r.size() && l < m && v[(i + l) % m] == r[l]) ++l;
        if (2 * l <= r.size()) continue;
        Word repl;
        for (size_t j = r.size(); j > l; --j) repl.push_back(inverse(r[j - 1]));
        for (size_t j = l; j < m; ++j) repl.push_back(v[(i + j) % m]);
        v = cyclic_reduce(free_reduce(repl)).core;
        ++s.steps;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      s.residue = v;
      return s;
    }
  }
  s.trivial = true;
  return s;
}

// Hangs the letters cancelled by free reduction back onto a diagram whose
// boundary reads free_reduce(u), as trees, so the boundary reads u verbatim.
// Letters strictly between consecutive surviving positions pair off among
// themselves, hence each such block is freely trivial.
DiscDiagram graft_cancelled_letters(DiscDiagram d, const Word& u) {
  std::vector<size_t> stack;
  for (size_t i = 0; i < u.size(); ++i) {
    if (!stack.empty() && u[stack.back()] == inverse(u[i]))
      stack.pop_back();
    else
      stack.push_back(i);
  }
  size_t m = stack.size();
  if (m == u.size()) return d;

  Word w;
  for (size_t pos : stack) w.push_back(u[pos]);
  // Excursion read immediately before surviving letter k; the block after
  // the last survivor wraps into the corner before the first one.
  std::vector<Word> exc(m);
  for (size_t k = 0; k < m; ++k) {
    size_t from = k == 0 ? stack[m - 1] + 1 : stack[k - 1] + 1;
    size_t to = stack[k];
    if (k == 0) {
      for (size_t i = from; i < u.size(); ++i) exc[0].push_back(u[i]);
      for (size_t i = 0; i < to; ++i) exc[0].push_back(u[i]);
    } else {
      for (size_t i = from; i < to; ++i) exc[k].push_back(u[i]);
    }
  }

  Word bw = d.boundary_word();
  if (bw.size() != m)
    throw std::logic_error("witness boundary disagrees with the reduction");
  size_t rho = m;
  for (size_t r = 0; r < m && rho == m; ++r) {
    bool ok = true;
    for (size_t i = 0; i < m && ok; ++i) ok = bw[i] == w[(i + r) % m];
    if (ok) rho = r;
  }
  if (rho == m)
    throw std::logic_error("witness boundary is not a rotation of the word");

  // The walk reads the inverse of the boundary: a tree whose walk reads
  // E^-1 spliced in before walk position (m - b) appears in the boundary
  // as E immediately before boundary position b.  Dart ids survive the
  // splices, so all anchors are taken before the first one.
  std::vector<int> outer = d.outer_darts();
  for (size_t k = 0; k < m; ++k) {
    if (exc[k].empty()) continue;
    size_t b = (k + m - rho) % m;
    int anchor = outer[(m - b) % m];
    d = d.wedge_diagram(anchor,
                        DiscDiagram::tree_from_trivial_word(inverse(exc[k])),
                        0);
  }
  return d;
}

struct SearchOutcome {
  std::optional<DiscDiagram> witness;
  bool exhausted_complete = false;
  bool node_budget_hit = false;
};

// Iterative deepening on the area cap; returns the area-minimal diagram
// found.  A complete empty search certifies that no diagram at any area
// bounds the word.
SearchOutcome witness_search(const PieceIndex& idx, const Word& w,
                             int ceiling, long max_nodes) {
  SearchOutcome out;
  if (ceiling < 1) ceiling = 1;
  long used = 0;
  for (int cap = 1;; cap = std::min(cap * 2, ceiling)) {
    EnumerationBudget eb;
    eb.max_area = cap;
    eb.max_nodes = max_nodes - used;
    EnumerationResult res = enumerate_with_boundary(idx, w, eb);
    used += res.nodes;
    if (!res.diagrams.empty()) {
      out.witness = std::move(res.diagrams.front());
      return out;
    }
    if (res.aborted) {
      out.node_budget_hit = true;
      return out;
    }
    if (res.complete) {
      out.exhausted_complete = true;
      return out;
    }
    if (cap == ceiling) return out;
  }
}

std::string vector_to_string(const std::vector<long long>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<long long> exponent_vector(const Word& w, int n_generators) {
  std::vector<long long> v(static_cast<size_t>(n_generators), 0);
  for (Letter x : w) v[static_cast<size_t>(std::abs(x)) - 1] += x > 0 ? 1 : -1;
  return v;
}

std::vector<std::vector<long long>> relator_lattice_hnf(
    const Presentation& p) {
  std::vector<std::vector<long long>> rows;
  for (const Word& r : p.relators)
    rows.push_back(exponent_vector(r, p.n_generators));
  std::vector<std::vector<long long>> out;
  if (rows.empty()) return out;
  size_t n = rows[0].size();
  size_t top = 0;
  for (size_t c = 0; c < n && top < rows.size(); ++c) {
    // Gcd-eliminate column c across the working rows by repeated division
    // with remainder against the row with the smallest nonzero entry.
    while (true) {
      size_t best = rows.size();
      for (size_t i = top; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() ||
             std::abs(rows[i][c]) < std::abs(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool clean = true;
      for (size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        long long q = rows[i][c] / rows[top][c];
        for (size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[top][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (rows[top][c] != 0) {
      if (rows[top][c] < 0)
        for (size_t j = 0; j < n; ++j) rows[top][j] = -rows[top][j];
      out.push_back(rows[top]);
      ++top;
    }
  }
  return out;
}

bool in_lattice(const std::vector<std::vector<long long>>& hnf,
                std::vector<long long> v) {
  for (const auto& row : hnf) {
    size_t c = 0;
    while (c < row.size() && row[c] == 0) ++c;
    if (c == row.size()) continue;
    if (v[c] % row[c] != 0) return false;
    long long q = v[c] / row[c];
    for (size_t j = 0; j < row.size(); ++j) v[j] -= q * row[j];
  }
  for (long long x : v)
    if (x != 0) return false;
  return true;
}

std::optional<std::vector<std::vector<int>>> find_separating_quotient(
    const Presentation& p, const Word& w, int max_degree) {
  check_letters(w, p.n_generators);
  if (p.n_generators <= 0 || p.n_generators > 5) return std::nullopt;
  // Relators are checked as soon as their last generator gets an image.
  std::vector<std::vector<const Word*>> ready(
      static_cast<size_t>(p.n_generators));
  for (const Word& r : p.relators) {
    int mx = 0;
    for (Letter x : r) mx = std::max(mx, std::abs(x));
    if (mx > 0) ready[static_cast<size_t>(mx) - 1].push_back(&r);
  }
  for (int deg = 2; deg <= max_degree; ++deg) {
    std::vector<Perm> pool;
    Perm base = identity_perm(deg);
    do {
      pool.push_back(base);
    } while (std::next_permutation(base.begin(), base.end()));
    std::vector<Perm> images(static_cast<size_t>(p.n_generators));
    std::function<bool(size_t)> place = [&](size_t g) -> bool {
      if (g == images.size())
        return !is_identity_perm(eval_word_perm(images, w));
      for (const Perm& cand : pool) {
        images[g] = cand;
        bool ok = true;
        for (const Word* r : ready[g])
          if (!is_identity_perm(eval_word_perm(images, *r))) {
            ok = false;
            break;
          }
        if (ok && place(g + 1)) return true;
      }
      return false;
    };
    if (place(0)) return images;
  }
  return std::nullopt;
}

EqualityContext make_equality_context(const Presentation& p) {
  EqualityContext ctx{p, build_piece_index(p), false, relator_lattice_hnf(p)};
  ctx.dehn = check_C_prime(ctx.idx, 6).holds;
  return ctx;
}

EqualityVerdict word_equal(const EqualityContext& ctx, const Word& w1,
                           const Word& w2, const EqualityBudget& budget) {
  check_letters(w1, ctx.p.n_generators);
  check_letters(w2, ctx.p.n_generators);
  EqualityVerdict v;
  Word u = concat(w1, inverse(w2));
  v.reduced = free_reduce(u);
  if (static_cast<int>(u.size()) > budget.max_word_length) {
    v.certificate = "word length " + std::to_string(u.size()) +
                    " exceeds the budget of " +
                    std::to_string(budget.max_word_length);
    return v;
  }
  if (v.reduced.empty()) {
    v.status = EqualityStatus::Equal;
    v.witness = u.empty() ? DiscDiagram::single_vertex()
                          : DiscDiagram::tree_from_trivial_word(u);
    return v;
  }

  auto vec = exponent_vector(v.reduced, ctx.p.n_generators);
  if (!in_lattice(ctx.lattice, vec)) {
    v.status = EqualityStatus::Distinct;
    v.certificate = "abelianization separates: exponent vector " +
                    vector_to_string(vec) + " is outside the relator lattice";
    return v;
  }

  Shortening sh = shorten(ctx.idx, v.reduced);
  if (sh.trivial) {
    int ceiling = std::max(sh.steps, 1);
    if (budget.max_area > 0) ceiling = std::min(ceiling, budget.max_area);
    SearchOutcome so =
        witness_search(ctx.idx, v.reduced, ceiling, budget.max_nodes);
    if (so.witness) {
      v.status = EqualityStatus::Equal;
      v.witness = graft_cancelled_letters(std::move(*so.witness), u);
      return v;
    }
    v.certificate =
        "equal by shortening but the witness search exhausted its budget";
    return v;
  }
  if (ctx.dehn) {
    v.status = EqualityStatus::Distinct;
    v.certificate = "shortening is stuck at " + word_to_string(sh.residue) +
                    ", which is decisive under C'(1/6)";
    return v;
  }

  if (auto q = find_separating_quotient(ctx.p, v.reduced,
                                        budget.max_quotient_degree)) {
    std::string cert = "separating homomorphism into the symmetric group of "
                       "degree " +
                       std::to_string(q->front().size()) + ":";
    for (size_t g = 0; g < q->size(); ++g) {
      cert += g ? ", " : " ";
      cert += std::string(1, ctx.p.generator_names[g]) + " -> " +
              perm_to_string((*q)[g]);
    }
    v.status = EqualityStatus::Distinct;
    v.certificate = cert;
    return v;
  }

  long long auto_cap =
      static_cast<long long>(v.reduced.size()) * v.reduced.size();
  int ceiling = budget.max_area > 0
                    ? budget.max_area
                    : static_cast<int>(std::min<long long>(auto_cap, 1 << 14));
  SearchOutcome so =
      witness_search(ctx.idx, v.reduced, ceiling, budget.max_nodes);
  if (so.witness) {
    v.status = EqualityStatus::Equal;
    v.witness = graft_cancelled_letters(std::move(*so.witness), u);
    return v;
  }
  if (so.exhausted_complete) {
    v.status = EqualityStatus::Distinct;
    v.certificate =
        "no diagram bounds this word at any area: the search is complete";
    return v;
  }
  v.certificate = so.node_budget_hit
                      ? "node budget exhausted during the witness search"
                      : "area budget exhausted during the witness search";
  return v;
}

EqualityVerdict word_equal(const Presentation& p, const Word& w1,
                           const Word& w2, const EqualityBudget& budget) {
  return word_equal(make_equality_context(p), w1, w2, budget);
}

}  // namespace smallcancel
