#include "smallcancel/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace smallcancel {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

int letter_rank(Letter x) {
  if (x == 0) throw std::invalid_argument("letter 0 is not a valid letter");
  return x > 0 ? 2 * (x - 1) : 2 * (-x - 1) + 1;
}

bool letter_less(Letter x, Letter y) { return letter_rank(x) < letter_rank(y); }

bool lex_less(const Word& u, const Word& v) {
  return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end(),
                                      letter_less);
}

bool shortlex_less(const Word& u, const Word& v) {
  if (u.size() != v.size()) return u.size() < v.size();
  return lex_less(u, v);
}

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (x == 0) throw std::invalid_argument("letter 0 is not a valid letter");
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

bool is_freely_reduced(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == -w[i + 1]) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || w.front() != -w.back();
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return {core, conj};
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word conjugate(const Word& w, const Word& u) {
  return free_reduce(concat(concat(u, w), inverse(u)));
}

Word cyclic_shift(const Word& w, int i) {
  if (w.empty()) return w;
  int n = static_cast<int>(w.size());
  i = ((i % n) + n) % n;
  Word out;
  out.reserve(w.size());
  out.insert(out.end(), w.begin() + i, w.end());
  out.insert(out.end(), w.begin(), w.begin() + i);
  return out;
}

size_t common_prefix_len(const Word& u, const Word& v) {
  size_t n = std::min(u.size(), v.size());
  size_t i = 0;
  while (i < n && u[i] == v[i]) ++i;
  return i;
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) {
    int k = (x > 0 ? x : -x) - 1;
    if (k > 25) throw std::invalid_argument("generator index beyond z");
    s.push_back(static_cast<char>((x > 0 ? 'a' : 'A') + k));
  }
  return s;
}

Word word_from_string(const std::string& s, int n_generators) {
  if (s == "1") return {};
  Word w;
  w.reserve(s.size());
  for (char c : s) {
    Letter x;
    if (c >= 'a' && c <= 'z')
      x = c - 'a' + 1;
    else if (c >= 'A' && c <= 'Z')
      x = -(c - 'A' + 1);
    else
      throw std::invalid_argument(std::string("invalid word character: ") + c);
    if (x > n_generators || -x > n_generators)
      throw std::invalid_argument(std::string("letter outside alphabet: ") + c);
    w.push_back(x);
  }
  return w;
}

}  // namespace smallcancel
