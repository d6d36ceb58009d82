#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ufn/errors.hpp"
#include "ufn/word.hpp"

namespace ufn {

inline constexpr std::uint64_t kDefaultEnumerationGuard = 10'000'000;

// Budget for tree walks: spend() once per visited node, throws guard_error
// when the walk grows past the limit. Keeps pruned enumerations (legal words
// only) usable on large alphabets where the worst case |G|^r would refuse.
class NodeBudget {
 public:
  explicit NodeBudget(std::uint64_t limit) : limit_(limit) {}
  void spend() {
    if (++used_ > limit_) {
      throw guard_error("enumeration exceeds the guard of " +
                        std::to_string(limit_) + " nodes");
    }
  }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t limit_;
};

// Removes every word that has a *distinct* member of the set as a contiguous
// factor, after deduplication. The legal language is unchanged.
std::vector<Word> normalize_forbidden(std::vector<Word> forbidden);

// A monomial presentation: a generator alphabet together with a finite set of
// forbidden words, each of length at least two. A word is legal when none of
// its contiguous factors is forbidden; the legal words of length r form a
// basis of the degree-r component of the associated monomial algebra.
//
// ell() is one less than the longest forbidden word (1 when there are none),
// computed from the relations exactly as given. normalized_ell() is the same
// quantity for the normalized relation set; the two can differ when a
// forbidden word contains a shorter one, and both are reported so the caller
// can see which convention the graph construction used.
class Presentation {
 public:
  Presentation(std::vector<std::string> generator_names,
               std::vector<Word> forbidden);

  int alphabet_size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const std::string& letter_name(Letter x) const;
  std::optional<Letter> letter_index(std::string_view name) const;

  // Forbidden words, deduplicated and sorted; lengths are all >= 2.
  const std::vector<Word>& forbidden() const { return forbidden_; }
  const std::vector<Word>& normalized_forbidden() const { return normalized_; }
  int ell() const { return ell_; }
  int normalized_ell() const { return normalized_ell_; }

  bool is_legal(const Word& w) const;

  // True when some forbidden word is a suffix of `w`. Appending a letter to a
  // legal word can only introduce a violation ending at the new last letter,
  // so legal(w + x) == legal(w) && !has_forbidden_suffix(w + x).
  bool has_forbidden_suffix(const Word& w) const;

  // Factor scan against an arbitrary forbidden set (used to cross-check that
  // normalization does not change the language).
  static bool scan_legal(const Word& w, const std::vector<Word>& forbidden);

  // All legal words of length exactly r, in lexicographic order by letter
  // index. The walk over legal prefixes is budgeted against the enumeration
  // guard and refuses with guard_error when it grows past it.
  std::vector<Word> legal_words(int r) const;

  // Number of legal words of each length 0..max_len, by direct enumeration
  // (no materialization). Same budget as legal_words(max_len).
  std::vector<std::uint64_t> legal_word_counts(int max_len) const;

  std::uint64_t enumeration_guard() const { return guard_; }
  void set_enumeration_guard(std::uint64_t guard) { guard_ = guard; }
  // Throws guard_error when |G|^r exceeds the configured guard; the up-front
  // check for walks that must visit every word, legal or not.
  void check_enumeration_guard(int r) const;

  // Rendering and parsing of words relative to this alphabet. When every
  // generator name is a single character words render as plain strings
  // ("xyx"); otherwise the names are joined with '.' ("xy.yx").
  bool single_char_names() const { return single_char_; }
  std::string word_string(const Word& w) const;
  std::vector<std::string> word_names(const Word& w) const;
  Word word_from_names(const std::vector<std::string>& names) const;
  Word word_from_compact(std::string_view text) const;

  bool operator==(const Presentation&) const = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> forbidden_;
  std::vector<Word> normalized_;
  // forbidden words bucketed by length, each bucket sorted, so the suffix
  // test stays cheap when a block presentation carries hundreds of relations
  std::vector<std::pair<int, std::vector<Word>>> suffix_index_;
  int ell_ = 1;
  int normalized_ell_ = 1;
  bool single_char_ = true;
  std::uint64_t guard_ = kDefaultEnumerationGuard;
  std::map<std::string, Letter, std::less<>> index_;
};

}  // namespace ufn
