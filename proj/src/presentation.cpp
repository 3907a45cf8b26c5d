#include "smallcancel/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace smallcancel {

namespace {

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  bool in_comment = false;
  for (char c : text) {
    if (c == '\n') in_comment = false;
    if (in_comment) continue;
    if (c == '#') {
      in_comment = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      continue;
    }
    if (c == ';') {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
      tokens.push_back(";");
      continue;
    }
    cur.push_back(c);
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  return tokens;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  auto tokens = tokenize(text);
  size_t i = 0;
  auto expect = [&](const std::string& t) {
    if (i >= tokens.size() || tokens[i] != t)
      throw ParseError("expected '" + t + "'" +
                       (i < tokens.size() ? " before '" + tokens[i] + "'" : " at end of input"));
    ++i;
  };

  Presentation p;
  expect("gens:");
  while (i < tokens.size() && tokens[i] != ";") {
    const std::string& name = tokens[i++];
    if (name.size() != 1 || name[0] < 'a' || name[0] > 'z')
      throw ParseError("generator names must be single lowercase letters, got '" + name + "'");
    if (std::find(p.generator_names.begin(), p.generator_names.end(), name[0]) !=
        p.generator_names.end())
      throw ParseError("duplicate generator '" + name + "'");
    p.generator_names.push_back(name[0]);
  }
  if (p.generator_names.empty()) throw ParseError("at least one generator is required");
  p.n_generators = static_cast<int>(p.generator_names.size());
  expect(";");
  expect("rels:");
  while (i < tokens.size() && tokens[i] != ";") {
    Word w;
    try {
      w = p.word(tokens[i]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("bad relator '") + tokens[i] + "': " + e.what());
    }
    auto red = cyclic_reduce(w);
    if (red.core.empty())
      throw ParseError("relator '" + tokens[i] + "' reduces to the empty word");
    p.relators.push_back(red.core);
    ++i;
  }
  if (i < tokens.size() && tokens[i] == ";") ++i;
  if (i < tokens.size())
    throw ParseError("unexpected trailing token '" + tokens[i] + "'");
  return p;
}

Word Presentation::word(const std::string& s) const {
  Word w;
  if (s == "1") return w;
  for (char c : s) {
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto it = std::find(generator_names.begin(), generator_names.end(), low);
    if (it == generator_names.end())
      throw std::invalid_argument(std::string("letter '") + c + "' is not a generator");
    Letter k = static_cast<Letter>(it - generator_names.begin()) + 1;
    w.push_back(c == low ? k : -k);
  }
  return w;
}

std::string Presentation::display(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (Letter x : w) {
    char name = generator_names[static_cast<size_t>(std::abs(x)) - 1];
    out += x > 0 ? name : static_cast<char>(std::toupper(static_cast<unsigned char>(name)));
  }
  return out;
}

Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open presentation file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_presentation(ss.str());
}

std::string presentation_to_string(const Presentation& p) {
  std::string out = "gens:";
  for (char c : p.generator_names) out += std::string(" ") + c;
  out += " ;\nrels:";
  for (const Word& r : p.relators) out += " " + p.display(r);
  out += " ;\n";
  return out;
}

int SymmetrizedSet::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w, shortlex_less);
  if (it != words.end() && *it == w) return static_cast<int>(it - words.begin());
  return -1;
}

SymmetrizedSet symmetrize(const Presentation& p) {
  std::map<Word, std::vector<WordOrigin>, ShortlexLess> acc;
  for (size_t r = 0; r < p.relators.size(); ++r) {
    for (int inv = 0; inv < 2; ++inv) {
      Word base = inv ? inverse(p.relators[r]) : p.relators[r];
      for (int j = 0; j < static_cast<int>(base.size()); ++j)
        acc[cyclic_shift(base, j)].push_back({static_cast<int>(r), j, inv != 0});
    }
  }
  SymmetrizedSet sym;
  for (auto& [w, orig] : acc) {
    sym.words.push_back(w);
    sym.origins.push_back(std::move(orig));
  }
  return sym;
}

}  // namespace smallcancel
