#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "smallcancel/word.hpp"

namespace smallcancel {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite presentation over single-letter generators. Names are metadata:
// the k-th listed name denotes internal letter +k, its uppercase form -k.
// Relators are stored cyclically reduced and nonempty; parse rejects
// relators that reduce to the empty word.
struct Presentation {
  int n_generators = 0;
  std::vector<char> generator_names;
  std::vector<Word> relators;

  Word word(const std::string& s) const;      // parse via generator names
  std::string display(const Word& w) const;   // render via generator names
};

// Text format:
//   gens: a b ;
//   rels: abAB aab ;
// '#' starts a comment running to end of line; whitespace is free-form;
// the trailing ';' after the relator list is optional.
Presentation parse_presentation(const std::string& text);
Presentation parse_presentation_file(const std::string& path);
std::string presentation_to_string(const Presentation& p);

// One cyclic rotation of one relator, possibly inverted.
struct WordOrigin {
  int relator;
  int rotation;
  bool inverted;
};

// All cyclic rotations of all relators and their inverses, deduplicated.
// Proper powers and repeated relators collapse here; origins keep track of
// everything that collapsed onto each word.
struct SymmetrizedSet {
  std::vector<Word> words;  // distinct, shortlex-sorted
  std::vector<std::vector<WordOrigin>> origins;

  int index_of(const Word& w) const;  // -1 if absent
  size_t size() const { return words.size(); }
};

SymmetrizedSet symmetrize(const Presentation& p);

}  // namespace smallcancel
