#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace smallcancel {

// Letters are nonzero ints: +k is the k-th generator (1-based), -k its inverse.
// Display form maps generator k to 'a'+k-1, inverses to uppercase.
using Letter = int;
using Word = std::vector<Letter>;

inline Letter inverse(Letter x) { return -x; }
Word inverse(const Word& w);

// Fixed letter order a < A < b < B < ... used for all deterministic choices.
int letter_rank(Letter x);
bool letter_less(Letter x, Letter y);
bool lex_less(const Word& u, const Word& v);
bool shortlex_less(const Word& u, const Word& v);

Word free_reduce(Word w);
bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

// w = conjugator . core . conjugator^-1 with core cyclically reduced.
struct CyclicReduction {
  Word core;
  Word conjugator;
};
CyclicReduction cyclic_reduce(const Word& w);

Word concat(const Word& u, const Word& v);
Word conjugate(const Word& w, const Word& u);  // u w u^-1, freely reduced

Word cyclic_shift(const Word& w, int i);
size_t common_prefix_len(const Word& u, const Word& v);

std::string word_to_string(const Word& w);
// Parses a display-form word; n_generators bounds the allowed alphabet.
// Throws std::invalid_argument on letters outside the alphabet.
Word word_from_string(const std::string& s, int n_generators = 26);

struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex_less(u, v); }
};

}  // namespace smallcancel
