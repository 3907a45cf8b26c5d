#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smallcancel/conditions.hpp"
#include "smallcancel/diagram.hpp"
#include "smallcancel/presentation.hpp"
#include "smallcancel/word.hpp"

namespace smallcancel {

enum class EqualityStatus { Equal, Distinct, Unknown };

struct EqualityBudget {
  int max_area = 0;             // diagram search ceiling; 0 picks |w|^2
  int max_word_length = 256;    // longer inputs are reported unknown
  long max_nodes = 200000;      // node allowance for the diagram search
  int max_quotient_degree = 4;  // symmetric groups S_2..S_n tried for splits
};

// Equal carries a reduced disc diagram whose boundary reads w1 w2^-1
// verbatim up to rotation.  Distinct carries a certificate naming the
// separating invariant.  Unknown names the budget that ran out; it is the
// only verdict allowed to be wrong in no direction.
struct EqualityVerdict {
  EqualityStatus status = EqualityStatus::Unknown;
  std::optional<DiscDiagram> witness;
  std::string certificate;
  Word reduced;  // free reduction of w1 w2^-1
};

// Machinery reused across many queries against one presentation.
struct EqualityContext {
  Presentation p;
  PieceIndex idx;
  bool dehn = false;  // C'(1/6) verified: shortening decides both ways
  std::vector<std::vector<long long>> lattice;  // relator exponent rows, HNF
};

EqualityContext make_equality_context(const Presentation& p);

EqualityVerdict word_equal(const EqualityContext& ctx, const Word& w1,
                           const Word& w2, const EqualityBudget& budget = {});
EqualityVerdict word_equal(const Presentation& p, const Word& w1,
                           const Word& w2, const EqualityBudget& budget = {});

// Exponent sums per generator; the abelianized image of w.
std::vector<long long> exponent_vector(const Word& w, int n_generators);

// Row echelon basis (over the integers) of the lattice spanned by the
// relator exponent vectors.  Zero rows are dropped.
std::vector<std::vector<long long>> relator_lattice_hnf(const Presentation& p);

// Membership of v in the lattice spanned by the rows of hnf.
bool in_lattice(const std::vector<std::vector<long long>>& hnf,
                std::vector<long long> v);

// Searches for a homomorphism into a symmetric group of degree <= max_degree
// that kills every relator but not w; such a map certifies that w is not a
// relation.  images[k] is the permutation assigned to generator k+1, and a
// word acts on points left to right: reading letter x moves point p to
// images[|x|-1][p], through the inverse table when x < 0.  Degrees are tried
// in increasing order and images in lexicographic order, so the result is
// deterministic.
std::optional<std::vector<std::vector<int>>> find_separating_quotient(
    const Presentation& p, const Word& w, int max_degree);

}  // namespace smallcancel
