#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ufn/presentation.hpp"

using ufn::Letter;
using ufn::Presentation;
using ufn::Word;

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(Presentation({"x", "x"}, {}), ufn::input_error);
  CHECK_THROWS_AS(Presentation({""}, {}), ufn::input_error);
  CHECK_THROWS_AS(Presentation({"a b"}, {}), ufn::input_error);
  CHECK_THROWS_AS(Presentation({"x"}, {{0}}), ufn::input_error);      // too short
  CHECK_THROWS_AS(Presentation({"x"}, {{0, 1}}), ufn::input_error);   // bad letter
  CHECK_THROWS_AS(Presentation({"x"}, {{-1, 0}}), ufn::input_error);
  CHECK_NOTHROW(Presentation({"x"}, {}));
  CHECK_NOTHROW(Presentation({"alpha", "beta"}, {{0, 1}}));
}

TEST_CASE("ell and normalization") {
  CHECK(Presentation({"x"}, {}).ell() == 1);
  CHECK(corpus::zz_zy().ell() == 1);
  CHECK(corpus::yyy().ell() == 2);
  CHECK(corpus::xy_xx().ell() == 1);

  // xx makes xxx redundant; ell drops under normalization
  Presentation p({"x"}, {{0, 0}, {0, 0, 0}});
  CHECK(p.ell() == 2);
  CHECK(p.normalized_ell() == 1);
  CHECK(p.forbidden().size() == 2);
  CHECK(p.normalized_forbidden() == std::vector<Word>{{0, 0}});

  // duplicates collapse
  Presentation q({"x", "y"}, {{0, 1}, {0, 1}});
  CHECK(q.forbidden().size() == 1);

  // normalization never changes the language
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> gs(1, 3), nf(1, 4), len(2, 4);
  for (int t = 0; t < 40; ++t) {
    const int g = gs(rng);
    std::uniform_int_distribution<Letter> lt(0, g - 1);
    std::vector<Word> forb;
    for (int i = 0, n = nf(rng); i < n; ++i) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) x = lt(rng);
      forb.push_back(w);
    }
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(static_cast<std::size_t>(g));
    Presentation p2(names, forb);
    for (const Word& w : oracle::all_words(g, 5)) {
      CHECK(Presentation::scan_legal(w, p2.forbidden()) ==
            Presentation::scan_legal(w, p2.normalized_forbidden()));
    }
  }
}

TEST_CASE("legality agrees with the naive factor scan") {
  const Presentation p = corpus::zz_zy();
  for (int r = 0; r <= 6; ++r) {
    for (const Word& w : oracle::all_words(3, r)) {
      CHECK(p.is_legal(w) == oracle::is_legal(w, p.forbidden()));
    }
  }
}

TEST_CASE("legal word enumeration matches the oracle") {
  auto check_all = [](const Presentation& p, int max_len) {
    for (int r = 0; r <= max_len; ++r) {
      const auto got = p.legal_words(r);
      const auto want = oracle::legal_words(p.alphabet_size(), p.forbidden(), r);
      CHECK(got == want);  // same words, same lexicographic order
    }
    const auto counts = p.legal_word_counts(max_len);
    REQUIRE(counts.size() == static_cast<std::size_t>(max_len) + 1);
    for (int r = 0; r <= max_len; ++r) {
      CHECK(counts[static_cast<std::size_t>(r)] == p.legal_words(r).size());
    }
  };
  check_all(corpus::zz_zy(), 6);
  check_all(corpus::yyy(), 7);
  check_all(corpus::xy_xx(), 7);
  check_all(Presentation({"x"}, {{0, 0}, {0, 0, 0}}), 5);

  std::mt19937 rng(11);
  std::uniform_int_distribution<int> gs(1, 3), nf(0, 4), len(2, 4);
  for (int t = 0; t < 30; ++t) {
    const int g = gs(rng);
    std::uniform_int_distribution<Letter> lt(0, g - 1);
    std::vector<Word> forb;
    for (int i = 0, n = nf(rng); i < n; ++i) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& x : w) x = lt(rng);
      forb.push_back(w);
    }
    std::vector<std::string> names = {"x", "y", "z"};
    names.resize(static_cast<std::size_t>(g));
    check_all(Presentation(names, forb), 6);
  }
}

TEST_CASE("dimension sequences of the worked examples") {
  const std::vector<std::uint64_t> zz_zy = {1,   3,    7,    17,   41,  99,
                                            239, 577,  1393, 3363, 8119, 19601};
  CHECK(corpus::zz_zy().legal_word_counts(11) == zz_zy);

  const std::vector<std::uint64_t> yyy = {1,  2,   4,   7,   13,  24,  44,
                                          81, 149, 274, 504, 927, 1705, 3136};
  CHECK(corpus::yyy().legal_word_counts(13) == yyy);

  const std::vector<std::uint64_t> xy_xx = {1, 2, 2, 2, 2, 2, 2, 2, 2};
  CHECK(corpus::xy_xx().legal_word_counts(8) == xy_xx);

  const std::vector<std::uint64_t> xx_xxx = {1, 1, 0, 0, 0, 0};
  CHECK(Presentation({"x"}, {{0, 0}, {0, 0, 0}}).legal_word_counts(5) == xx_xxx);
}

TEST_CASE("suffix test agrees with one-letter extension") {
  const Presentation p = corpus::zz_zy();
  for (const Word& w : oracle::all_words(3, 4)) {
    if (!p.is_legal(Word(w.begin(), w.end() - 1))) continue;
    CHECK(p.is_legal(w) == !p.has_forbidden_suffix(w));
  }
}

TEST_CASE("enumeration guard") {
  Presentation p({"x", "y"}, {});
  p.set_enumeration_guard(5);
  CHECK_THROWS_AS(p.legal_words(10), ufn::guard_error);
  CHECK_THROWS_AS(p.legal_word_counts(10), ufn::guard_error);
  CHECK_THROWS_AS(p.check_enumeration_guard(10), ufn::guard_error);
  CHECK_NOTHROW(p.check_enumeration_guard(2));

  // the walk budget counts visited nodes, not the |G|^r worst case: a sparse
  // language passes under a guard the full tree would blow
  Presentation q({"x", "y"}, {{0, 1}, {0, 0}});  // two legal words per length
  q.set_enumeration_guard(64);
  CHECK_NOTHROW(q.legal_word_counts(20));
  CHECK_THROWS_AS(q.check_enumeration_guard(20), ufn::guard_error);

  CHECK_THROWS_AS(p.legal_words(-1), ufn::input_error);
}

TEST_CASE("word rendering and parsing") {
  const Presentation p = corpus::zz_zy();
  CHECK(p.single_char_names());
  CHECK(p.word_string({0, 1, 2}) == "xyz");
  CHECK(p.word_string({}) == "1");
  CHECK(p.word_from_compact("xyz") == Word{0, 1, 2});
  CHECK(p.word_from_names({"z", "z"}) == Word{2, 2});
  CHECK_THROWS_AS(p.word_from_compact("xq"), ufn::input_error);
  CHECK_THROWS_AS(p.word_from_names({"w"}), ufn::input_error);

  const Presentation m({"aa", "b"}, {{0, 0}});
  CHECK(!m.single_char_names());
  CHECK(m.word_string({0, 1}) == "aa.b");
  CHECK(m.word_names({1, 0}) == std::vector<std::string>{"b", "aa"});
  CHECK(m.word_from_names({"b", "aa"}) == Word{1, 0});
  CHECK_THROWS_AS(m.word_from_compact("ab"), ufn::input_error);
}

TEST_CASE("letter lookups") {
  const Presentation p = corpus::zz_zy();
  CHECK(p.letter_index("z") == Letter{2});
  CHECK(!p.letter_index("w").has_value());
  CHECK(p.letter_name(1) == "y");
  CHECK_THROWS_AS(p.letter_name(3), ufn::input_error);
}
