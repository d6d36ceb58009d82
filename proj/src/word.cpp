#include "ufn/word.hpp"

#include <algorithm>
#include <cassert>

namespace ufn {

Word concat(const Word& u, const Word& v) {
  Word w;
  w.reserve(u.size() + v.size());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

Word prefix(const Word& w, std::size_t len) {
  assert(len <= w.size());
  return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
}

Word suffix(const Word& w, std::size_t len) {
  assert(len <= w.size());
  return Word(w.end() - static_cast<std::ptrdiff_t>(len), w.end());
}

bool is_factor(const Word& factor, const Word& w) {
  if (factor.empty()) return true;
  if (factor.size() > w.size()) return false;
  return std::search(w.begin(), w.end(), factor.begin(), factor.end()) !=
         w.end();
}

bool ends_with(const Word& w, const Word& tail) {
  if (tail.size() > w.size()) return false;
  return std::equal(tail.rbegin(), tail.rend(), w.rbegin());
}

}  // namespace ufn
