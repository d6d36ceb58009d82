#include "ufn/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace ufn {

namespace {

void validate_name(const std::string& name) {
  if (name.empty()) throw input_error("generator name must be nonempty");
  for (unsigned char c : name) {
    if (std::isspace(c) || std::iscntrl(c) || c == '"') {
      throw input_error("generator name contains whitespace or quotes: \"" +
                        name + "\"");
    }
  }
}

}  // namespace

std::vector<Word> normalize_forbidden(std::vector<Word> forbidden) {
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  std::vector<Word> kept;
  for (const Word& w : forbidden) {
    bool redundant = false;
    for (const Word& u : forbidden) {
      if (u != w && is_factor(u, w)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(w);
  }
  return kept;
}

Presentation::Presentation(std::vector<std::string> generator_names,
                           std::vector<Word> forbidden)
    : names_(std::move(generator_names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    validate_name(names_[i]);
    auto [it, fresh] = index_.emplace(names_[i], static_cast<Letter>(i));
    if (!fresh)
      throw input_error("duplicate generator name: \"" + names_[i] + "\"");
    if (names_[i].size() > 1) single_char_ = false;
  }
  if (names_.empty()) single_char_ = true;

  for (const Word& w : forbidden) {
    if (w.size() < 2)
      throw input_error("forbidden words must have length at least 2");
    for (Letter x : w) {
      if (x < 0 || x >= alphabet_size())
        throw input_error("forbidden word uses an out-of-range letter");
    }
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()),
                  forbidden.end());
  forbidden_ = std::move(forbidden);
  normalized_ = normalize_forbidden(forbidden_);

  for (const Word& w : forbidden_) {
    const int len = static_cast<int>(w.size());
    auto it = std::find_if(suffix_index_.begin(), suffix_index_.end(),
                           [len](const auto& b) { return b.first == len; });
    if (it == suffix_index_.end()) {
      suffix_index_.push_back({len, {}});
      it = std::prev(suffix_index_.end());
    }
    it->second.push_back(w);  // forbidden_ is sorted, so buckets stay sorted
  }

  auto max_len = [](const std::vector<Word>& ws) {
    std::size_t m = 2;  // empty set -> ell = 1
    for (const Word& w : ws) m = std::max(m, w.size());
    return static_cast<int>(m) - 1;
  };
  ell_ = max_len(forbidden_);
  normalized_ell_ = max_len(normalized_);
}

const std::string& Presentation::letter_name(Letter x) const {
  if (x < 0 || x >= alphabet_size())
    throw input_error("letter index out of range");
  return names_[static_cast<std::size_t>(x)];
}

std::optional<Letter> Presentation::letter_index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Presentation::scan_legal(const Word& w,
                              const std::vector<Word>& forbidden) {
  for (const Word& f : forbidden) {
    if (f.size() > w.size()) continue;
    const std::size_t last = w.size() - f.size();
    for (std::size_t i = 0; i <= last; ++i) {
      if (std::equal(f.begin(), f.end(), w.begin() + i)) return false;
    }
  }
  return true;
}

bool Presentation::is_legal(const Word& w) const {
  return scan_legal(w, forbidden_);
}

bool Presentation::has_forbidden_suffix(const Word& w) const {
  for (const auto& [len, bucket] : suffix_index_) {
    if (static_cast<std::size_t>(len) > w.size()) continue;
    const auto tail = w.end() - len;
    auto it = std::lower_bound(
        bucket.begin(), bucket.end(), tail,
        [len](const Word& f, Word::const_iterator s) {
          return std::lexicographical_compare(f.begin(), f.end(), s, s + len);
        });
    if (it != bucket.end() && std::equal(it->begin(), it->end(), tail))
      return true;
  }
  return false;
}

void Presentation::check_enumeration_guard(int r) const {
  if (r < 0) throw input_error("word length must be nonnegative");
  const auto g = static_cast<std::uint64_t>(alphabet_size());
  std::uint64_t candidates = 1;
  for (int i = 0; i < r; ++i) {
    if (g != 0 && candidates > guard_ / g) {
      throw guard_error("enumeration of length-" + std::to_string(r) +
                        " words exceeds the guard of " +
                        std::to_string(guard_) + " candidates");
    }
    candidates *= g;
  }
  if (candidates > guard_) {
    throw guard_error("enumeration of length-" + std::to_string(r) +
                      " words exceeds the guard of " + std::to_string(guard_) +
                      " candidates");
  }
}

std::vector<Word> Presentation::legal_words(int r) const {
  if (r < 0) throw input_error("word length must be nonnegative");
  NodeBudget budget(guard_);
  std::vector<Word> level{Word{}};
  const int g = alphabet_size();
  for (int k = 0; k < r; ++k) {
    std::vector<Word> next;
    for (const Word& w : level) {
      Word cand = w;
      cand.push_back(0);
      for (Letter x = 0; x < g; ++x) {
        cand.back() = x;
        if (!has_forbidden_suffix(cand)) {
          budget.spend();
          next.push_back(cand);
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<std::uint64_t> Presentation::legal_word_counts(int max_len) const {
  if (max_len < 0) throw input_error("word length must be nonnegative");
  NodeBudget budget(guard_);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_len) + 1, 0);
  const int g = alphabet_size();
  Word w;
  std::function<void(int)> visit = [&](int depth) {
    budget.spend();
    ++counts[static_cast<std::size_t>(depth)];
    if (depth == max_len) return;
    w.push_back(0);
    for (Letter x = 0; x < g; ++x) {
      w.back() = x;
      if (!has_forbidden_suffix(w)) visit(depth + 1);
    }
    w.pop_back();
  };
  visit(0);
  return counts;
}

std::string Presentation::word_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single_char_ && i > 0) s += '.';
    s += letter_name(w[i]);
  }
  return s;
}

std::vector<std::string> Presentation::word_names(const Word& w) const {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Letter x : w) out.push_back(letter_name(x));
  return out;
}

Word Presentation::word_from_names(
    const std::vector<std::string>& names) const {
  Word w;
  w.reserve(names.size());
  for (const std::string& n : names) {
    auto x = letter_index(n);
    if (!x) throw input_error("unknown generator: \"" + n + "\"");
    w.push_back(*x);
  }
  return w;
}

Word Presentation::word_from_compact(std::string_view text) const {
  if (!single_char_) {
    throw input_error(
        "compact word form requires single-character generator names");
  }
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    auto x = letter_index(std::string_view(&c, 1));
    if (!x)
      throw input_error("unknown generator: \"" + std::string(1, c) + "\"");
    w.push_back(*x);
  }
  return w;
}

}  // namespace ufn
